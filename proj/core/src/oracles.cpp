#include "causax/oracles.hpp"

#include <algorithm>
#include <string>

#include "causax/error.hpp"

namespace causax {

std::string_view to_string(Label l) noexcept { return l == Label::Yes ? "Yes" : "No"; }

Label label_from_string(std::string_view s) {
  if (s == "Yes") return Label::Yes;
  if (s == "No") return Label::No;
  throw ValidationError("label must be 'Yes' or 'No', got '" + std::string(s) + "'");
}

void validate_query(const CausalDag& g, const TransitivityQuery& q) {
  g.index_of(q.cause.str());
  g.index_of(q.effect.str());
  if (q.cause == q.effect) {
    throw ValidationError("transitivity query relates '" + q.cause.str() + "' to itself");
  }
}

void validate_query(const CausalDag& g, const DsepQuery& q) {
  g.index_of(q.a.str());
  g.index_of(q.b.str());
  if (q.a == q.b) throw ValidationError("d-separation query relates '" + q.a.str() + "' to itself");
  std::vector<NodeIndex> seen;
  for (const auto& z : q.conditioning_set) {
    NodeIndex zi = g.index_of(z.str());
    if (z == q.a || z == q.b) {
      throw ValidationError("query node '" + z.str() + "' is also in the conditioning set");
    }
    if (std::find(seen.begin(), seen.end(), zi) != seen.end()) {
      throw ValidationError("conditioning set repeats '" + z.str() + "'");
    }
    seen.push_back(zi);
  }
}

Label label_transitivity(const CausalDag& g, const TransitivityQuery& q) {
  validate_query(g, q);
  return to_label(g.reachable(g.index_of(q.cause.str()), g.index_of(q.effect.str())));
}

bool d_separated(const CausalDag& g, NodeIndex a, NodeIndex b, std::span<const NodeIndex> given) {
  // Reachability over (node, direction) states: a trail may pass a node
  // upward (arrived from a child) or downward (arrived from a parent).
  const std::size_t n = g.node_count();
  std::vector<bool> observed(n, false);
  for (NodeIndex z : given) observed[z] = true;

  // Observed nodes and their ancestors: colliders here are open.
  std::vector<bool> opens_collider(n, false);
  std::vector<NodeIndex> stack(given.begin(), given.end());
  while (!stack.empty()) {
    NodeIndex v = stack.back();
    stack.pop_back();
    if (opens_collider[v]) continue;
    opens_collider[v] = true;
    for (NodeIndex p : g.parents(v)) stack.push_back(p);
  }

  enum Dir : std::size_t { Up = 0, Down = 1 };
  std::vector<bool> visited(2 * n, false);
  std::vector<std::pair<NodeIndex, Dir>> frontier{{a, Up}};
  while (!frontier.empty()) {
    auto [v, dir] = frontier.back();
    frontier.pop_back();
    if (visited[2 * v + dir]) continue;
    visited[2 * v + dir] = true;
    if (v == b && !observed[v]) return false;
    if (dir == Up && !observed[v]) {
      for (NodeIndex p : g.parents(v)) frontier.push_back({p, Up});
      for (NodeIndex c : g.children(v)) frontier.push_back({c, Down});
    } else if (dir == Down) {
      if (!observed[v]) {
        for (NodeIndex c : g.children(v)) frontier.push_back({c, Down});
      }
      if (opens_collider[v]) {
        for (NodeIndex p : g.parents(v)) frontier.push_back({p, Up});
      }
    }
  }
  return true;
}

Label label_dsep(const CausalDag& g, const DsepQuery& q) {
  validate_query(g, q);
  std::vector<NodeIndex> given;
  given.reserve(q.conditioning_set.size());
  for (const auto& z : q.conditioning_set) given.push_back(g.index_of(z.str()));
  return to_label(d_separated(g, g.index_of(q.a.str()), g.index_of(q.b.str()), given));
}

std::size_t dsep_hypothesis_count(std::size_t node_count, std::size_t max_conditioning_size) {
  if (node_count < 2) return 0;
  const std::size_t rest = node_count - 2;
  std::size_t subsets = 0;
  std::size_t binom = 1;  // C(rest, k)
  for (std::size_t k = 0; k <= std::min(max_conditioning_size, rest); ++k) {
    subsets += binom;
    binom = binom * (rest - k) / (k + 1);
  }
  return node_count * (node_count - 1) / 2 * subsets;
}

std::vector<LabeledDsepQuery> enumerate_dsep_hypotheses(const CausalDag& g,
                                                        std::size_t max_conditioning_size) {
  const std::size_t n = g.node_count();
  std::vector<LabeledDsepQuery> out;
  out.reserve(dsep_hypothesis_count(n, max_conditioning_size));
  std::vector<NodeIndex> rest;
  for (NodeIndex a = 0; a < n; ++a) {
    for (NodeIndex b = a + 1; b < n; ++b) {
      rest.clear();
      for (NodeIndex v = 0; v < n; ++v) {
        if (v != a && v != b) rest.push_back(v);
      }
      for (std::size_t k = 0; k <= std::min(max_conditioning_size, rest.size()); ++k) {
        for_each_combination(std::span<const NodeIndex>(rest), k,
                             [&](std::span<const NodeIndex> given) {
                               DsepQuery q{g.nodes()[a], g.nodes()[b], {}};
                               q.conditioning_set.reserve(given.size());
                               for (NodeIndex z : given) q.conditioning_set.push_back(g.nodes()[z]);
                               out.push_back({std::move(q), to_label(d_separated(g, a, b, given))});
                             });
      }
    }
  }
  return out;
}

}  // namespace causax
