#include "causax/corpus.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>

#include "causax/digest.hpp"
#include "causax/error.hpp"
#include "causax/parallel.hpp"

namespace causax {

std::string_view to_string(HypothesisSampling s) noexcept {
  return s == HypothesisSampling::PerGraph ? "per_graph" : "exhaustive_pool";
}

HypothesisSampling sampling_from_string(std::string_view s) {
  if (s == "per_graph") return HypothesisSampling::PerGraph;
  if (s == "exhaustive_pool") return HypothesisSampling::ExhaustivePool;
  throw ValidationError("unknown hypothesis sampling '" + std::string(s) + "'");
}

void CorpusSpec::validate() const {
  if (name.empty()) throw ValidationError("corpus name must not be empty");
  if (components.empty()) throw ValidationError("corpus '" + name + "' has no components");
  if (!(label_balance > 0.0 && label_balance < 1.0)) {
    throw ValidationError("label balance must lie strictly between 0 and 1");
  }
  for (const auto& c : components) {
    if (c.count == 0) throw ValidationError("component instance counts must be >= 1");
    c.profile.validate();
  }
}

std::size_t CorpusSpec::total_count() const noexcept {
  std::size_t n = 0;
  for (const auto& c : components) n += c.count;
  return n;
}

std::string instance_id(std::string_view corpus_name, std::size_t index, std::uint64_t master_seed) {
  std::string key(corpus_name);
  key += '\n';
  key += std::to_string(index);
  key += '\n';
  key += std::to_string(master_seed);
  return sha256_hex(key).substr(0, 16);
}

namespace {

// Corpora with different names draw from unrelated streams even under one seed.
std::uint64_t root_seed(const CorpusSpec& spec) {
  return derive_seed(spec.master_seed, 0, stream_tag(spec.name));
}

std::size_t yes_target(std::size_t count, double balance) {
  return static_cast<std::size_t>(std::llround(static_cast<double>(count) * balance));
}

// Exact Yes/No quota for a component, in a seeded random order.
std::vector<Label> label_plan(const CorpusSpec& spec, std::size_t component) {
  const auto& c = spec.components[component];
  std::vector<Label> plan(c.count, Label::No);
  std::fill_n(plan.begin(), yes_target(c.count, spec.label_balance), Label::Yes);
  Rng rng(derive_seed(root_seed(spec), component, stream_tag("labels")));
  rng.shuffle(std::span<Label>(plan));
  return plan;
}

std::optional<Hypothesis> draw_transitivity(const CausalDag& g, Label want, Rng& rng) {
  const std::size_t n = g.node_count();
  std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
  for (NodeIndex u = 0; u < n; ++u) {
    for (NodeIndex v : g.descendants(u)) reach[u][v] = true;
  }
  std::vector<std::pair<NodeIndex, NodeIndex>> candidates;
  for (NodeIndex u = 0; u < n; ++u) {
    for (NodeIndex v = 0; v < n; ++v) {
      if (u != v && to_label(reach[u][v]) == want) candidates.emplace_back(u, v);
    }
  }
  if (candidates.empty()) return std::nullopt;
  auto [u, v] = candidates[rng.below(candidates.size())];
  return TransitivityQuery{g.nodes()[u], g.nodes()[v]};
}

constexpr int kDsepQueryDraws = 256;

// Proposal: uniform ordered pair, uniform set size, uniform subset of that
// size; accepted when its label matches.
std::optional<Hypothesis> draw_dsep(const CausalDag& g, Label want, std::size_t max_given,
                                    Rng& rng) {
  const std::size_t n = g.node_count();
  const std::size_t max_k = std::min(max_given, n - 2);
  std::vector<NodeIndex> rest;
  for (int attempt = 0; attempt < kDsepQueryDraws; ++attempt) {
    NodeIndex a = rng.below(n);
    NodeIndex b = rng.below(n - 1);
    if (b >= a) ++b;
    auto k = static_cast<std::size_t>(rng.between(0, static_cast<std::int64_t>(max_k)));
    rest.clear();
    for (NodeIndex v = 0; v < n; ++v) {
      if (v != a && v != b) rest.push_back(v);
    }
    for (std::size_t i = 0; i < k; ++i) {
      std::swap(rest[i], rest[i + rng.below(rest.size() - i)]);
    }
    std::span<const NodeIndex> given(rest.data(), k);
    if (to_label(d_separated(g, a, b, given)) != want) continue;
    DsepQuery q{g.nodes()[a], g.nodes()[b], {}};
    for (NodeIndex z : given) q.conditioning_set.push_back(g.nodes()[z]);
    return q;
  }
  return std::nullopt;
}

AxiomInstance make_instance(const CorpusSpec& spec, std::size_t index, GraphSample sample,
                            Hypothesis h, Label label, std::uint64_t seed) {
  const std::size_t n = sample.graph.node_count();
  const std::size_t name_max = sample.graph.max_name_length();
  return AxiomInstance{instance_id(spec.name, index, spec.master_seed),
                       spec.task,
                       std::move(sample.graph),
                       std::move(h),
                       label,
                       sample.structure,
                       n,
                       name_max,
                       sample.branching_factor,
                       seed};
}

void build_per_graph(const CorpusSpec& spec, std::size_t component, std::size_t offset,
                     const BuildOptions& options, std::vector<std::optional<AxiomInstance>>& out) {
  const auto& c = spec.components[component];
  const auto plan = label_plan(spec, component);
  parallel_for(c.count, options.threads, [&](std::size_t k) {
    const std::size_t index = offset + k;
    const std::uint64_t seed = derive_seed(root_seed(spec), index);
    Rng rng(seed);
    const Label want = plan[k];
    for (int attempt = 0; attempt < kMaxGraphResamples; ++attempt) {
      GraphSample sample = sample_graph(c.profile, rng);
      std::optional<Hypothesis> h = spec.task == Task::Transitivity
                                        ? draw_transitivity(sample.graph, want, rng)
                                        : draw_dsep(sample.graph, want, spec.max_conditioning_size, rng);
      if (h) {
        out[index] = make_instance(spec, index, std::move(sample), std::move(*h), want, seed);
        return;
      }
    }
    throw GenerationError("corpus '" + spec.name + "': no graph admitting a '" +
                          std::string(to_string(want)) + "' hypothesis after " +
                          std::to_string(kMaxGraphResamples) + " resamples");
  });
}

struct PoolEntry {
  std::uint32_t graph;
  std::uint16_t a;
  std::uint16_t b;
  std::uint64_t given_mask;
};

void enumerate_into(const CausalDag& g, Task task, std::size_t max_given, std::uint32_t graph,
                    std::vector<PoolEntry>& yes, std::vector<PoolEntry>& no) {
  const std::size_t n = g.node_count();
  if (task == Task::Transitivity) {
    for (NodeIndex u = 0; u < n; ++u) {
      auto desc = g.descendants(u);
      for (NodeIndex v = 0; v < n; ++v) {
        if (u == v) continue;
        bool r = std::binary_search(desc.begin(), desc.end(), v);
        (r ? yes : no).push_back({graph, static_cast<std::uint16_t>(u), static_cast<std::uint16_t>(v), 0});
      }
    }
    return;
  }
  const std::size_t max_k = std::min(max_given, n - 2);
  std::vector<NodeIndex> rest;
  for (NodeIndex a = 0; a < n; ++a) {
    for (NodeIndex b = a + 1; b < n; ++b) {
      rest.clear();
      for (NodeIndex v = 0; v < n; ++v) {
        if (v != a && v != b) rest.push_back(v);
      }
      for (std::size_t k = 0; k <= max_k; ++k) {
        for_each_combination(std::span<const NodeIndex>(rest), k, [&](std::span<const NodeIndex> z) {
          std::uint64_t mask = 0;
          for (NodeIndex v : z) mask |= std::uint64_t{1} << v;
          PoolEntry e{graph, static_cast<std::uint16_t>(a), static_cast<std::uint16_t>(b), mask};
          (d_separated(g, a, b, z) ? yes : no).push_back(e);
        });
      }
    }
  }
}

constexpr std::size_t kPoolBatch = 256;

void build_pooled(const CorpusSpec& spec, std::size_t component, std::size_t offset,
                  const BuildOptions& options, std::vector<std::optional<AxiomInstance>>& out) {
  const auto& c = spec.components[component];
  if (c.profile.node_count.hi > 64) {
    throw ValidationError("exhaustive pools support at most 64 nodes per graph");
  }
  const std::size_t need_yes = yes_target(c.count, spec.label_balance);
  const std::size_t need_no = c.count - need_yes;
  const std::uint64_t pool_stream = stream_tag("pool") + component;

  std::vector<GraphSample> graphs;
  std::vector<std::uint64_t> seeds;
  std::vector<PoolEntry> yes, no;
  // Enough graphs that each pool holds at least twice its quota.
  std::size_t stalled = 0;
  while (yes.size() < 2 * need_yes || no.size() < 2 * need_no) {
    const std::size_t first = graphs.size();
    std::vector<std::optional<GraphSample>> batch(kPoolBatch);
    std::vector<std::uint64_t> batch_seeds(kPoolBatch);
    parallel_for(kPoolBatch, options.threads, [&](std::size_t t) {
      batch_seeds[t] = derive_seed(root_seed(spec), first + t, pool_stream);
      Rng rng(batch_seeds[t]);
      batch[t] = sample_graph(c.profile, rng);
    });
    for (std::size_t t = 0; t < kPoolBatch; ++t) {
      const std::size_t yes_before = yes.size(), no_before = no.size();
      graphs.push_back(std::move(*batch[t]));
      seeds.push_back(batch_seeds[t]);
      enumerate_into(graphs.back().graph, spec.task, spec.max_conditioning_size,
                     static_cast<std::uint32_t>(first + t), yes, no);
      const bool starving = (yes.size() < 2 * need_yes && yes.size() == yes_before) ||
                            (no.size() < 2 * need_no && no.size() == no_before);
      stalled = starving ? stalled + 1 : 0;
      if (stalled >= static_cast<std::size_t>(kMaxGraphResamples)) {
        throw GenerationError("corpus '" + spec.name + "': " +
                              std::to_string(kMaxGraphResamples) +
                              " consecutive graphs added no hypothesis of a needed label");
      }
    }
  }

  Rng rng(derive_seed(root_seed(spec), component, stream_tag("subsample")));
  auto take = [&](std::vector<PoolEntry>& pool, std::size_t k) {
    for (std::size_t i = 0; i < k; ++i) std::swap(pool[i], pool[i + rng.below(pool.size() - i)]);
    pool.resize(k);
  };
  take(yes, need_yes);
  take(no, need_no);
  std::vector<std::pair<PoolEntry, Label>> chosen;
  chosen.reserve(c.count);
  for (const auto& e : yes) chosen.emplace_back(e, Label::Yes);
  for (const auto& e : no) chosen.emplace_back(e, Label::No);
  rng.shuffle(std::span<std::pair<PoolEntry, Label>>(chosen));

  parallel_for(chosen.size(), options.threads, [&](std::size_t k) {
    const auto& [e, label] = chosen[k];
    const GraphSample& sample = graphs[e.graph];
    const auto& names = sample.graph.nodes();
    Hypothesis h = TransitivityQuery{names[e.a], names[e.b]};
    if (spec.task == Task::Dsep) {
      DsepQuery q{names[e.a], names[e.b], {}};
      for (NodeIndex v = 0; v < names.size(); ++v) {
        if (e.given_mask & (std::uint64_t{1} << v)) q.conditioning_set.push_back(names[v]);
      }
      h = std::move(q);
    }
    out[offset + k] = make_instance(spec, offset + k, sample, std::move(h), label, seeds[e.graph]);
  });
}

}  // namespace

std::vector<AxiomInstance> build_corpus(const CorpusSpec& spec, const BuildOptions& options) {
  spec.validate();
  std::vector<std::optional<AxiomInstance>> slots(spec.total_count());
  std::size_t offset = 0;
  for (std::size_t c = 0; c < spec.components.size(); ++c) {
    if (spec.sampling == HypothesisSampling::PerGraph) {
      build_per_graph(spec, c, offset, options, slots);
    } else {
      build_pooled(spec, c, offset, options, slots);
    }
    offset += spec.components[c].count;
  }
  std::vector<AxiomInstance> out;
  out.reserve(slots.size());
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

// ---------------------------------------------------------------------------
// Evaluation suites

std::string_view to_string(EvalKind kind) noexcept {
  switch (kind) {
    case EvalKind::Length: return "length";
    case EvalKind::NodeNameShift: return "node_name_shift";
    case EvalKind::Reversal: return "reversal";
    case EvalKind::Shuffle: return "shuffle";
    case EvalKind::Branching: return "branching";
    case EvalKind::MultiEvalSlr: return "multieval_slr";
    case EvalKind::DsepLong: return "dsep_long";
    case EvalKind::DsepBranching: return "dsep_branching";
  }
  return "length";
}

EvalKind eval_kind_from_string(std::string_view s) {
  for (auto k : {EvalKind::Length, EvalKind::NodeNameShift, EvalKind::Reversal, EvalKind::Shuffle,
                 EvalKind::Branching, EvalKind::MultiEvalSlr, EvalKind::DsepLong,
                 EvalKind::DsepBranching}) {
    if (to_string(k) == s) return k;
  }
  throw ValidationError("unknown evaluation suite '" + std::string(s) + "'");
}

namespace {

std::vector<int> iota_range(int lo, int hi) {
  std::vector<int> v;
  for (int i = lo; i <= hi; ++i) v.push_back(i);
  return v;
}

}  // namespace

EvalSuiteParams default_eval_params(EvalKind kind) {
  EvalSuiteParams p;
  switch (kind) {
    case EvalKind::Length: p.node_counts = iota_range(7, 15); break;
    case EvalKind::NodeNameShift:
      p.node_counts = iota_range(3, 9);
      p.name_length = {8, 10};
      break;
    case EvalKind::Reversal: p.node_counts = iota_range(3, 6); break;
    case EvalKind::Shuffle: p.node_counts = iota_range(3, 9); break;
    case EvalKind::Branching:
      p.node_counts = {5, 8, 10, 12};
      p.branching_factors = {1.4, 2.0};
      break;
    case EvalKind::MultiEvalSlr: p.node_counts = iota_range(3, 9); break;
    case EvalKind::DsepLong: p.node_counts = iota_range(7, 14); break;
    case EvalKind::DsepBranching:
      p.node_counts = {5, 8, 10, 12};
      p.branching_factors = {1.4};
      break;
  }
  return p;
}

CorpusSpec eval_suite_spec(EvalKind kind, const EvalSuiteParams& params, std::uint64_t master_seed) {
  if (params.node_counts.empty()) throw ValidationError("evaluation suite needs node counts");
  if (params.count_per_bucket == 0) throw ValidationError("count per bucket must be >= 1");
  auto require = [&](bool ok, const std::string& what) {
    if (!ok) {
      throw ValidationError(std::string(to_string(kind)) + " suite: " + what);
    }
  };
  auto all_counts = [&](int lo, int hi) {
    return std::all_of(params.node_counts.begin(), params.node_counts.end(),
                       [&](int n) { return n >= lo && n <= hi; });
  };

  CorpusSpec spec;
  spec.name = "eval-" + std::string(to_string(kind));
  spec.task = (kind == EvalKind::DsepLong || kind == EvalKind::DsepBranching) ? Task::Dsep
                                                                                : Task::Transitivity;
  spec.master_seed = master_seed;
  spec.label_balance = 0.5;

  auto chain = [&](int n, double p, bool shuffle) {
    PerturbationProfile prof;
    prof.node_count = {n, n};
    prof.name_length = params.name_length;
    prof.flip_probability = p;
    prof.require_flip = p > 0.0 && p < 1.0;
    prof.shuffle_edges = shuffle;
    return CorpusComponent{prof, params.count_per_bucket};
  };
  auto branched = [&](int n, double bf) {
    PerturbationProfile prof;
    prof.node_count = {n, n};
    prof.name_length = params.name_length;
    prof.branching_factor = RealRange{bf, bf};
    return CorpusComponent{prof, params.count_per_bucket};
  };

  const bool short_names = params.name_length.lo >= 1 && params.name_length.hi <= 3;
  switch (kind) {
    case EvalKind::Length:
      require(all_counts(7, 15), "node counts must lie in [7, 15]");
      require(short_names, "name lengths must lie in [1, 3]");
      for (int n : params.node_counts) {
        spec.components.push_back(chain(n, 0.0, false));
        spec.components.push_back(chain(n, 0.5, false));
      }
      break;
    case EvalKind::NodeNameShift:
      require(all_counts(3, 15), "node counts must lie in [3, 15]");
      require(params.name_length.lo >= 8 && params.name_length.hi <= 10 &&
                  params.name_length.lo <= params.name_length.hi,
              "name lengths must lie in [8, 10]");
      for (int n : params.node_counts) spec.components.push_back(chain(n, 0.0, false));
      break;
    case EvalKind::Reversal:
      require(all_counts(3, 15), "node counts must lie in [3, 15]");
      require(short_names, "name lengths must lie in [1, 3]");
      for (int n : params.node_counts) spec.components.push_back(chain(n, 1.0, false));
      break;
    case EvalKind::Shuffle:
      require(all_counts(3, 15), "node counts must lie in [3, 15]");
      require(short_names, "name lengths must lie in [1, 3]");
      for (int n : params.node_counts) spec.components.push_back(chain(n, 0.0, true));
      break;
    case EvalKind::MultiEvalSlr:
      require(all_counts(3, 9), "node counts must lie in [3, 9]");
      require(short_names, "name lengths must lie in [1, 3]");
      for (int n : params.node_counts) spec.components.push_back(chain(n, 0.5, true));
      break;
    case EvalKind::DsepLong:
      require(all_counts(7, 15), "node counts must lie in [7, 15]");
      require(short_names, "name lengths must lie in [1, 3]");
      for (int n : params.node_counts) spec.components.push_back(chain(n, 0.5, false));
      break;
    case EvalKind::Branching:
    case EvalKind::DsepBranching:
      require(!params.branching_factors.empty(), "branching factors required");
      require(all_counts(3, 64), "node counts must lie in [3, 64]");
      require(short_names, "name lengths must lie in [1, 3]");
      for (int n : params.node_counts) {
        for (double bf : params.branching_factors) {
          require(bf >= 0.8, "branching factors must be >= 0.8");
          const auto m = edge_count_for(static_cast<std::size_t>(n), bf);
          require(m <= static_cast<std::size_t>(n) * (n - 1) / 2,
                  "round(bf * n) edges do not fit on " + std::to_string(n) + " nodes");
          spec.components.push_back(branched(n, bf));
        }
      }
      break;
  }
  return spec;
}

std::vector<AxiomInstance> build_eval_suite(EvalKind kind, const EvalSuiteParams& params,
                                            std::uint64_t master_seed, const BuildOptions& options) {
  return build_corpus(eval_suite_spec(kind, params, master_seed), options);
}

}  // namespace causax
