#include "causax/record.hpp"

#include <nlohmann/json.hpp>

#include "causax/error.hpp"
#include "causax/text.hpp"

namespace causax {

using ordered_json = nlohmann::ordered_json;

std::string serialize_record(const AxiomInstance& inst) {
  ordered_json j;
  j["id"] = inst.id;
  j["task"] = to_string(inst.task);
  auto& nodes = j["nodes"] = ordered_json::array();
  for (const auto& n : inst.graph.nodes()) nodes.push_back(n.str());
  j["premise"] = premise_text(inst.graph);
  j["hypothesis"] = hypothesis_text(inst.hypothesis);
  j["label"] = to_string(inst.label);
  j["structure_tag"] = to_string(inst.structure);
  j["node_count"] = inst.node_count;
  j["name_length_max"] = inst.name_length_max;
  j["branching_factor"] = inst.branching_factor;
  j["seed"] = inst.seed;
  return j.dump();
}

AxiomInstance parse_record(std::string_view line) {
  ordered_json j;
  try {
    j = ordered_json::parse(line);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("malformed record: ") + e.what());
  }
  try {
    std::vector<NodeName> nodes;
    for (const auto& n : j.at("nodes")) nodes.emplace_back(n.get<std::string>());
    Hypothesis h = parse_hypothesis(j.at("hypothesis").get<std::string>());
    auto edges = parse_premise(j.at("premise").get<std::string>());
    CausalDag g = graph_from_edges(edges, h, &nodes);
    validate_query_of(g, h);

    Task task = task_from_string(j.at("task").get<std::string>());
    if (task != task_of(h)) throw ParseError("task does not match hypothesis form");
    auto node_count = j.at("node_count").get<std::size_t>();
    if (node_count != g.node_count()) throw ParseError("node_count does not match node list");

    return AxiomInstance{j.at("id").get<std::string>(),
                         task,
                         std::move(g),
                         std::move(h),
                         label_from_string(j.at("label").get<std::string>()),
                         structure_tag_from_string(j.at("structure_tag").get<std::string>()),
                         node_count,
                         j.at("name_length_max").get<std::size_t>(),
                         j.at("branching_factor").get<double>(),
                         j.at("seed").get<std::uint64_t>()};
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed record: ") + e.what());
  }
}

}  // namespace causax
