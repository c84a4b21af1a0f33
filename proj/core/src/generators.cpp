#include "causax/generators.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <string>

#include "causax/error.hpp"
#include "causax/grammar.hpp"

namespace causax {

std::string_view to_string(StructureTag tag) noexcept {
  switch (tag) {
    case StructureTag::Sequential: return "sequential";
    case StructureTag::RandomFlip: return "random_flip";
    case StructureTag::Reversed: return "reversed";
    case StructureTag::Shuffled: return "shuffled";
    case StructureTag::Branched: return "branched";
  }
  return "sequential";
}

StructureTag structure_tag_from_string(std::string_view s) {
  for (auto tag : {StructureTag::Sequential, StructureTag::RandomFlip, StructureTag::Reversed,
                   StructureTag::Shuffled, StructureTag::Branched}) {
    if (to_string(tag) == s) return tag;
  }
  throw ValidationError("unknown structure tag '" + std::string(s) + "'");
}

std::string_view short_label(StructureTag tag) noexcept {
  switch (tag) {
    case StructureTag::Sequential: return "FS";
    case StructureTag::RandomFlip: return "RF";
    case StructureTag::Reversed: return "REV";
    case StructureTag::Shuffled: return "SH";
    case StructureTag::Branched: return "BF";
  }
  return "FS";
}

void PerturbationProfile::validate() const {
  if (node_count.lo < 3 || node_count.hi < node_count.lo) {
    throw ValidationError("node count range must satisfy 3 <= lo <= hi");
  }
  if (name_length.lo < 1 || name_length.hi > static_cast<int>(NodeName::kMaxLength) ||
      name_length.hi < name_length.lo) {
    throw ValidationError("name length range must lie within [1, 10]");
  }
  if (!(flip_probability >= 0.0 && flip_probability <= 1.0)) {
    throw ValidationError("flip probability must lie in [0, 1]");
  }
  if (branching_factor) {
    if (!(branching_factor->lo >= 0.0) || branching_factor->hi < branching_factor->lo) {
      throw ValidationError("branching factor range must satisfy 0 <= lo <= hi");
    }
  }
}

StructureTag PerturbationProfile::structure() const noexcept {
  if (branching_factor) return StructureTag::Branched;
  if (shuffle_edges) return StructureTag::Shuffled;
  if (flip_probability >= 1.0) return StructureTag::Reversed;
  if (flip_probability > 0.0) return StructureTag::RandomFlip;
  return StructureTag::Sequential;
}

std::uint64_t name_space_size(IntRange length_range) noexcept {
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t total = 0;
  for (int len = std::max(1, length_range.lo); len <= length_range.hi; ++len) {
    std::uint64_t n = 1;
    for (int i = 0; i < len; ++i) {
      if (n > kMax / kNameAlphabet.size()) return kMax;
      n *= kNameAlphabet.size();
    }
    for (auto w : kReservedWords) {
      if (static_cast<int>(w.size()) == len && NodeName::is_valid(w)) --n;
    }
    if (total > kMax - n) return kMax;
    total += n;
  }
  return total;
}

std::vector<NodeName> generate_node_names(std::size_t count, IntRange length_range, Rng& rng) {
  if (count == 0) throw ValidationError("name count must be at least 1");
  if (length_range.lo < 1 || length_range.hi > static_cast<int>(NodeName::kMaxLength) ||
      length_range.hi < length_range.lo) {
    throw ValidationError("name length range must lie within [1, 10]");
  }
  if (count > name_space_size(length_range)) {
    throw GenerationError("cannot draw " + std::to_string(count) +
                          " distinct names with lengths " + std::to_string(length_range.lo) +
                          "-" + std::to_string(length_range.hi));
  }
  std::set<std::string> used;
  std::vector<NodeName> names;
  names.reserve(count);
  std::string text;
  while (names.size() < count) {
    auto len = static_cast<std::size_t>(rng.between(length_range.lo, length_range.hi));
    text.resize(len);
    for (auto& c : text) c = kNameAlphabet[rng.below(kNameAlphabet.size())];
    if (is_reserved_word(text) || !used.insert(text).second) continue;
    names.emplace_back(text);
  }
  return names;
}

CausalDag make_sequential_chain(std::vector<NodeName> names) {
  if (names.size() < 2) throw ValidationError("a chain needs at least 2 nodes");
  std::vector<Edge> edges;
  edges.reserve(names.size() - 1);
  for (NodeIndex i = 0; i + 1 < names.size(); ++i) edges.push_back({i, i + 1});
  return CausalDag(std::move(names), std::move(edges));
}

bool is_chain_skeleton(const CausalDag& g) {
  if (g.node_count() < 2 || g.edge_count() != g.node_count() - 1) return false;
  std::vector<bool> seen(g.node_count() - 1, false);
  for (const Edge& e : g.edges()) {
    NodeIndex lo = std::min(e.source, e.target);
    NodeIndex hi = std::max(e.source, e.target);
    if (hi != lo + 1 || seen[lo]) return false;
    seen[lo] = true;
  }
  return true;
}

bool is_reversed_chain(const CausalDag& g) {
  if (!is_chain_skeleton(g)) return false;
  return std::all_of(g.edges().begin(), g.edges().end(),
                     [](const Edge& e) { return e.source == e.target + 1; });
}

CausalDag apply_random_flipping(const CausalDag& chain, double flip_probability, Rng& rng) {
  if (!is_chain_skeleton(chain)) {
    throw ValidationError("random flipping expects a chain over consecutive nodes");
  }
  std::vector<Edge> edges = chain.edges();
  for (Edge& e : edges) {
    if (rng.bernoulli(flip_probability)) std::swap(e.source, e.target);
  }
  return CausalDag(chain.nodes(), std::move(edges));
}

CausalDag reverse_all_edges(const CausalDag& g) {
  std::vector<Edge> edges = g.edges();
  for (Edge& e : edges) std::swap(e.source, e.target);
  return CausalDag(g.nodes(), std::move(edges));
}

CausalDag shuffle_edge_order(const CausalDag& g, Rng& rng) {
  std::vector<Edge> edges = g.edges();
  rng.shuffle(std::span<Edge>(edges));
  return CausalDag(g.nodes(), std::move(edges));
}

std::size_t edge_count_for(std::size_t node_count, double branching_factor) noexcept {
  return static_cast<std::size_t>(std::llround(branching_factor * static_cast<double>(node_count)));
}

CausalDag generate_dag_with_edges(std::vector<NodeName> names, std::size_t edge_count, Rng& rng) {
  const std::size_t n = names.size();
  const std::size_t capacity = n * (n - (n > 0 ? 1 : 0)) / 2;
  if (edge_count > capacity) {
    throw GenerationError("cannot place " + std::to_string(edge_count) + " edges on " +
                          std::to_string(n) + " nodes (maximum " + std::to_string(capacity) +
                          ")");
  }
  std::vector<NodeIndex> order(n);
  for (NodeIndex i = 0; i < n; ++i) order[i] = i;
  rng.shuffle(std::span<NodeIndex>(order));

  std::vector<Edge> forward;
  forward.reserve(capacity);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) forward.push_back({order[i], order[j]});
  }
  // Partial Fisher-Yates: the first edge_count slots are a uniform m-subset.
  for (std::size_t k = 0; k < edge_count; ++k) {
    std::size_t pick = k + static_cast<std::size_t>(rng.below(forward.size() - k));
    std::swap(forward[k], forward[pick]);
  }
  forward.resize(edge_count);
  std::sort(forward.begin(), forward.end());
  return CausalDag(std::move(names), std::move(forward));
}

CausalDag generate_branched_dag(std::vector<NodeName> names, double branching_factor, Rng& rng) {
  if (!(branching_factor >= 0.0)) throw ValidationError("branching factor must be >= 0");
  const std::size_t m = edge_count_for(names.size(), branching_factor);
  return generate_dag_with_edges(std::move(names), m, rng);
}

namespace {

// Edge counts m with m/n inside the range; a degenerate range means round(bf*n).
std::vector<std::size_t> admissible_edge_counts(std::size_t n, RealRange range) {
  if (range.lo == range.hi) return {edge_count_for(n, range.lo)};
  constexpr double kSlack = 1e-9;
  std::vector<std::size_t> out;
  const std::size_t capacity = n * (n - 1) / 2;
  for (std::size_t m = 0; m <= capacity; ++m) {
    double ratio = static_cast<double>(m) / static_cast<double>(n);
    if (ratio >= range.lo - kSlack && ratio <= range.hi + kSlack) out.push_back(m);
  }
  return out;
}

}  // namespace

GraphSample sample_graph(const PerturbationProfile& profile, Rng& rng) {
  profile.validate();
  const auto n = static_cast<std::size_t>(rng.between(profile.node_count.lo, profile.node_count.hi));
  auto names = generate_node_names(n, profile.name_length, rng);

  if (profile.branching_factor) {
    auto counts = admissible_edge_counts(n, *profile.branching_factor);
    if (counts.empty()) {
      throw GenerationError("no edge count on " + std::to_string(n) +
                            " nodes fits the requested branching factor range");
    }
    std::size_t m = counts[rng.below(counts.size())];
    CausalDag g = generate_dag_with_edges(std::move(names), m, rng);
    if (profile.shuffle_edges) g = shuffle_edge_order(g, rng);
    double bf = profile.branching_factor->lo == profile.branching_factor->hi
                    ? profile.branching_factor->lo
                    : g.branching_factor();
    return {std::move(g), StructureTag::Branched, bf};
  }

  CausalDag chain = make_sequential_chain(std::move(names));
  CausalDag g = chain;
  if (profile.flip_probability > 0.0) {
    const bool must_flip = profile.require_flip && profile.flip_probability < 1.0;
    do {
      g = apply_random_flipping(chain, profile.flip_probability, rng);
    } while (must_flip && g == chain);
  }
  if (profile.shuffle_edges) g = shuffle_edge_order(g, rng);
  double bf = g.branching_factor();
  return {std::move(g), profile.structure(), bf};
}

GraphSample sample_graph(const PerturbationProfile& profile) {
  Rng rng(profile.seed);
  return sample_graph(profile, rng);
}

}  // namespace causax
