#pragma once

#include "causax/graph.hpp"
#include "causax/oracles.hpp"

namespace causax::reference {

/// Largest graph the path enumerator accepts.
inline constexpr std::size_t kMaxBruteForceNodes = 12;

/// Enumerates every simple undirected path between the query nodes and
/// applies the blocking rule to each one literally. Throws ResourceError for
/// graphs with more than kMaxBruteForceNodes nodes.
Label brute_force_dsep(const CausalDag& g, const DsepQuery& q);

/// Transitive closure by fixpoint iteration over the edge relation.
Label brute_force_transitivity(const CausalDag& g, const TransitivityQuery& q);

/// closure[u][v] is true iff a directed path of length >= 1 leads from u to v.
std::vector<std::vector<bool>> transitive_closure(const CausalDag& g);

}  // namespace causax::reference
