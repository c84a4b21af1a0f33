#include "causax/reference_oracles.hpp"

#include <string>

#include "causax/error.hpp"

namespace causax::reference {

std::vector<std::vector<bool>> transitive_closure(const CausalDag& g) {
  const std::size_t n = g.node_count();
  std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
  for (const Edge& e : g.edges()) reach[e.source][e.target] = true;
  // Apply (u -> w) and (w -> v) => (u -> v) until nothing changes.
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t u = 0; u < n; ++u) {
      for (std::size_t w = 0; w < n; ++w) {
        if (!reach[u][w]) continue;
        for (std::size_t v = 0; v < n; ++v) {
          if (reach[w][v] && !reach[u][v]) {
            reach[u][v] = true;
            changed = true;
          }
        }
      }
    }
  }
  return reach;
}

Label brute_force_transitivity(const CausalDag& g, const TransitivityQuery& q) {
  validate_query(g, q);
  auto reach = transitive_closure(g);
  return to_label(reach[g.index_of(q.cause.str())][g.index_of(q.effect.str())]);
}

namespace {

struct PathChecker {
  const CausalDag& g;
  const std::vector<std::vector<bool>>& reach;
  const std::vector<bool>& given;
  NodeIndex target;
  std::vector<NodeIndex> path;
  std::vector<bool> on_path;
  bool found_open = false;

  bool edge(NodeIndex u, NodeIndex v) const { return g.has_edge(u, v); }

  bool blocked(const std::vector<NodeIndex>& p) const {
    for (std::size_t i = 1; i + 1 < p.size(); ++i) {
      NodeIndex prev = p[i - 1], mid = p[i], next = p[i + 1];
      const bool collider = edge(prev, mid) && edge(next, mid);
      if (collider) {
        bool descendant_given = false;
        for (std::size_t d = 0; d < given.size(); ++d) {
          if (given[d] && reach[mid][d]) descendant_given = true;
        }
        if (!given[mid] && !descendant_given) return true;
      } else if (given[mid]) {
        return true;
      }
    }
    return false;
  }

  void extend(NodeIndex v) {
    if (found_open) return;
    if (v == target) {
      if (!blocked(path)) found_open = true;
      return;
    }
    for (NodeIndex w = 0; w < g.node_count(); ++w) {
      if (on_path[w] || !(edge(v, w) || edge(w, v))) continue;
      on_path[w] = true;
      path.push_back(w);
      extend(w);
      path.pop_back();
      on_path[w] = false;
    }
  }
};

}  // namespace

Label brute_force_dsep(const CausalDag& g, const DsepQuery& q) {
  if (g.node_count() > kMaxBruteForceNodes) {
    throw ResourceError("exhaustive path enumeration is limited to " +
                        std::to_string(kMaxBruteForceNodes) + " nodes");
  }
  validate_query(g, q);
  auto reach = transitive_closure(g);
  std::vector<bool> given(g.node_count(), false);
  for (const auto& z : q.conditioning_set) given[g.index_of(z.str())] = true;

  const NodeIndex a = g.index_of(q.a.str());
  PathChecker checker{g, reach, given, g.index_of(q.b.str()), {a}, std::vector<bool>(g.node_count()), false};
  checker.on_path[a] = true;
  checker.extend(a);
  return to_label(!checker.found_open);
}

}  // namespace causax::reference
