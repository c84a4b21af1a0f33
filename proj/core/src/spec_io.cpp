#include "causax/spec_io.hpp"

#include <algorithm>

#include <nlohmann/json.hpp>

#include "causax/error.hpp"

namespace causax {

namespace {

using nlohmann::ordered_json;

IntRange int_range(const ordered_json& j) {
  if (!j.is_array() || j.size() != 2) throw ParseError("range must be a two-element array");
  return {j[0].get<int>(), j[1].get<int>()};
}

RealRange real_range(const ordered_json& j) {
  if (!j.is_array() || j.size() != 2) throw ParseError("range must be a two-element array");
  return {j[0].get<double>(), j[1].get<double>()};
}

CorpusComponent component_from(const ordered_json& j) {
  CorpusComponent c;
  c.count = j.at("count").get<std::size_t>();
  auto& p = c.profile;
  if (j.contains("node_count")) p.node_count = int_range(j["node_count"]);
  if (j.contains("name_length")) p.name_length = int_range(j["name_length"]);
  if (j.contains("flip_probability")) p.flip_probability = j["flip_probability"].get<double>();
  if (j.contains("require_flip")) p.require_flip = j["require_flip"].get<bool>();
  if (j.contains("shuffle_edges")) p.shuffle_edges = j["shuffle_edges"].get<bool>();
  if (j.contains("branching_factor") && !j["branching_factor"].is_null()) {
    p.branching_factor = real_range(j["branching_factor"]);
  }
  for (const auto& [key, value] : j.items()) {
    static const char* known[] = {"count",        "node_count",    "name_length", "flip_probability",
                                  "require_flip", "shuffle_edges", "branching_factor"};
    if (std::find(std::begin(known), std::end(known), key) == std::end(known)) {
      throw ParseError("unknown component key '" + key + "'");
    }
  }
  return c;
}

}  // namespace

CorpusSpec parse_corpus_spec(std::string_view json_text) {
  CorpusSpec spec;
  try {
    auto j = ordered_json::parse(json_text);
    if (!j.is_object()) throw ParseError("corpus spec must be a JSON object");
    spec.name = j.at("name").get<std::string>();
    spec.task = task_from_string(j.at("task").get<std::string>());
    spec.master_seed = j.value("seed", std::uint64_t{0});
    spec.label_balance = j.value("label_balance", spec.label_balance);
    if (j.contains("sampling")) spec.sampling = sampling_from_string(j["sampling"].get<std::string>());
    spec.max_conditioning_size = j.value("max_conditioning_size", spec.max_conditioning_size);
    const auto& comps = j.at("components");
    if (!comps.is_array()) throw ParseError("components must be an array");
    for (const auto& c : comps) spec.components.push_back(component_from(c));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed corpus spec: ") + e.what());
  }
  spec.validate();
  return spec;
}

std::string format_corpus_spec(const CorpusSpec& spec) {
  ordered_json j;
  j["name"] = spec.name;
  j["task"] = std::string(to_string(spec.task));
  j["seed"] = spec.master_seed;
  j["label_balance"] = spec.label_balance;
  j["sampling"] = std::string(to_string(spec.sampling));
  j["max_conditioning_size"] = spec.max_conditioning_size;
  j["components"] = ordered_json::array();
  for (const auto& c : spec.components) {
    const auto& p = c.profile;
    ordered_json o;
    o["count"] = c.count;
    o["node_count"] = {p.node_count.lo, p.node_count.hi};
    o["name_length"] = {p.name_length.lo, p.name_length.hi};
    o["flip_probability"] = p.flip_probability;
    o["require_flip"] = p.require_flip;
    o["shuffle_edges"] = p.shuffle_edges;
    if (p.branching_factor) o["branching_factor"] = {p.branching_factor->lo, p.branching_factor->hi};
    j["components"].push_back(std::move(o));
  }
  return j.dump(2);
}

}  // namespace causax
