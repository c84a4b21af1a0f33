#pragma once

#include <cstdint>
#include <string>
#include <variant>

#include "causax/generators.hpp"
#include "causax/graph.hpp"
#include "causax/oracles.hpp"
#include "causax/task.hpp"

namespace causax {

using Hypothesis = std::variant<TransitivityQuery, DsepQuery>;

/// One premise / hypothesis / label triple plus the metadata used to bucket
/// it in accuracy tables.
struct AxiomInstance {
  std::string id;
  Task task = Task::Transitivity;
  CausalDag graph;
  Hypothesis hypothesis;
  Label label = Label::No;
  StructureTag structure = StructureTag::Sequential;
  std::size_t node_count = 0;
  std::size_t name_length_max = 0;
  double branching_factor = 0.0;
  std::uint64_t seed = 0;

  friend bool operator==(const AxiomInstance&, const AxiomInstance&) = default;
};

/// Recomputes the label from graph and hypothesis.
Label oracle_label(const CausalDag& graph, const Hypothesis& hypothesis);
inline Label oracle_label(const AxiomInstance& inst) {
  return oracle_label(inst.graph, inst.hypothesis);
}

Task task_of(const Hypothesis& h) noexcept;

/// Throws LookupError / ValidationError if `h` does not fit `graph`.
void validate_query_of(const CausalDag& graph, const Hypothesis& h);

}  // namespace causax
