#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "causax/graph.hpp"
#include "causax/rng.hpp"

namespace causax {

struct IntRange {
  int lo = 0;
  int hi = 0;

  bool contains(int v) const noexcept { return v >= lo && v <= hi; }
  friend bool operator==(const IntRange&, const IntRange&) = default;
};

struct RealRange {
  double lo = 0.0;
  double hi = 0.0;

  friend bool operator==(const RealRange&, const RealRange&) = default;
};

enum class StructureTag { Sequential, RandomFlip, Reversed, Shuffled, Branched };

std::string_view to_string(StructureTag tag) noexcept;
/// Throws ValidationError for unknown tags.
StructureTag structure_tag_from_string(std::string_view s);
/// Column label used in accuracy tables: FS, RF, REV, SH, BF.
std::string_view short_label(StructureTag tag) noexcept;

/// Generation knobs for one family of graphs.
///
/// Without `branching_factor` the graph is a chain of `node_count` nodes,
/// each edge reversed with `flip_probability`. With it, the graph is an
/// Erdos-Renyi style DAG whose |E|/|V| lies in the given range.
struct PerturbationProfile {
  IntRange node_count{3, 6};
  double flip_probability = 0.0;
  IntRange name_length{1, 3};
  std::optional<RealRange> branching_factor;
  bool shuffle_edges = false;
  /// For 0 < p < 1: redraw the flips until at least one edge is reversed.
  bool require_flip = false;
  std::uint64_t seed = 0;

  /// Throws ValidationError on out-of-range knobs.
  void validate() const;
  StructureTag structure() const noexcept;

  friend bool operator==(const PerturbationProfile&, const PerturbationProfile&) = default;
};

struct GraphSample {
  CausalDag graph;
  StructureTag structure;
  /// Target |E|/|V| for Erdos-Renyi graphs, realized ratio otherwise.
  double branching_factor;
};

/// `count` distinct names, lengths uniform in `length_range`, never a reserved
/// word. Throws GenerationError when the namespace is too small.
std::vector<NodeName> generate_node_names(std::size_t count, IntRange length_range, Rng& rng);

/// Number of distinct generatable names with lengths in `length_range`.
std::uint64_t name_space_size(IntRange length_range) noexcept;

/// Edges (i, i+1) in name order.
CausalDag make_sequential_chain(std::vector<NodeName> names);

/// Reverses each chain edge independently with probability `flip_probability`.
/// Throws ValidationError unless the edge skeleton is a chain in node order.
CausalDag apply_random_flipping(const CausalDag& chain, double flip_probability, Rng& rng);

CausalDag reverse_all_edges(const CausalDag& g);

/// Uniform permutation of the presentation order.
CausalDag shuffle_edge_order(const CausalDag& g, Rng& rng);

/// round(branching_factor * n) edges, all forward in a uniformly random
/// topological order. Throws GenerationError when that many edges cannot fit.
CausalDag generate_branched_dag(std::vector<NodeName> names, double branching_factor, Rng& rng);

/// Same as above with an explicit edge count.
CausalDag generate_dag_with_edges(std::vector<NodeName> names, std::size_t edge_count, Rng& rng);

std::size_t edge_count_for(std::size_t node_count, double branching_factor) noexcept;

/// True iff the edges are exactly the chain skeleton over consecutive nodes.
bool is_chain_skeleton(const CausalDag& g);
/// Chain skeleton with every edge pointing from node k+1 to node k.
bool is_reversed_chain(const CausalDag& g);

/// Draws one graph according to `profile` using `rng`.
GraphSample sample_graph(const PerturbationProfile& profile, Rng& rng);
/// Draws one graph using `profile.seed`.
GraphSample sample_graph(const PerturbationProfile& profile);

}  // namespace causax
