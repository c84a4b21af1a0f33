#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "causax/graph.hpp"

namespace causax {

enum class Label : bool { No = false, Yes = true };

constexpr Label to_label(bool yes) noexcept { return yes ? Label::Yes : Label::No; }
constexpr Label negate(Label l) noexcept { return l == Label::Yes ? Label::No : Label::Yes; }
std::string_view to_string(Label l) noexcept;
/// Accepts exactly "Yes" or "No"; throws ValidationError otherwise.
Label label_from_string(std::string_view s);

/// "Does cause cause effect?"
struct TransitivityQuery {
  NodeName cause;
  NodeName effect;

  friend bool operator==(const TransitivityQuery&, const TransitivityQuery&) = default;
};

/// "Are a and b d-separated given {conditioning_set}?"
///
/// The conditioning set is a set semantically; the vector order is only the
/// presentation order used when the query is written out.
struct DsepQuery {
  NodeName a;
  NodeName b;
  std::vector<NodeName> conditioning_set;

  friend bool operator==(const DsepQuery&, const DsepQuery&) = default;
};

/// Throws LookupError for names missing from `g`, ValidationError for
/// cause == effect.
void validate_query(const CausalDag& g, const TransitivityQuery& q);
/// Throws LookupError for unknown names, ValidationError when a == b, a or b
/// is conditioned on, or the conditioning set repeats a node.
void validate_query(const CausalDag& g, const DsepQuery& q);

/// Yes iff a directed path leads from cause to effect.
Label label_transitivity(const CausalDag& g, const TransitivityQuery& q);

/// Yes iff every path between a and b is blocked by the conditioning set.
Label label_dsep(const CausalDag& g, const DsepQuery& q);

/// Index-level d-separation test used by the enumerators; no validation.
bool d_separated(const CausalDag& g, NodeIndex a, NodeIndex b, std::span<const NodeIndex> given);

struct LabeledDsepQuery {
  DsepQuery query;
  Label label;
};

/// Every unordered pair (in node order) crossed with every conditioning set
/// of size <= max_conditioning_size drawn from the remaining nodes, ordered by
/// size and then lexicographically by node index. Sizes are capped at
/// node_count - 2, the number of nodes left once the pair is chosen.
std::vector<LabeledDsepQuery> enumerate_dsep_hypotheses(const CausalDag& g,
                                                        std::size_t max_conditioning_size);

/// Number of hypotheses enumerate_dsep_hypotheses would produce.
std::size_t dsep_hypothesis_count(std::size_t node_count, std::size_t max_conditioning_size);

/// Calls fn(subset) for each size-k subset of `pool`, lexicographically.
template <typename Fn>
void for_each_combination(std::span<const NodeIndex> pool, std::size_t k, Fn&& fn) {
  if (k > pool.size()) return;
  std::vector<std::size_t> pos(k);
  for (std::size_t i = 0; i < k; ++i) pos[i] = i;
  std::vector<NodeIndex> subset(k);
  while (true) {
    for (std::size_t i = 0; i < k; ++i) subset[i] = pool[pos[i]];
    fn(std::span<const NodeIndex>(subset));
    std::size_t i = k;
    while (i > 0 && pos[i - 1] == pool.size() - k + (i - 1)) --i;
    if (i == 0) return;
    ++pos[i - 1];
    for (std::size_t j = i; j < k; ++j) pos[j] = pos[j - 1] + 1;
  }
}

}  // namespace causax
