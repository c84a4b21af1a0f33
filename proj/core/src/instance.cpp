#include "causax/instance.hpp"

namespace causax {

Label oracle_label(const CausalDag& graph, const Hypothesis& hypothesis) {
  if (const auto* t = std::get_if<TransitivityQuery>(&hypothesis)) {
    return label_transitivity(graph, *t);
  }
  return label_dsep(graph, std::get<DsepQuery>(hypothesis));
}

Task task_of(const Hypothesis& h) noexcept {
  return std::holds_alternative<TransitivityQuery>(h) ? Task::Transitivity : Task::Dsep;
}

void validate_query_of(const CausalDag& graph, const Hypothesis& h) {
  std::visit([&](const auto& q) { validate_query(graph, q); }, h);
}

}  // namespace causax
