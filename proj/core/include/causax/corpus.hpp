#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "causax/generators.hpp"
#include "causax/instance.hpp"

namespace causax {

struct CorpusComponent {
  PerturbationProfile profile;
  std::size_t count = 0;

  friend bool operator==(const CorpusComponent&, const CorpusComponent&) = default;
};

/// How hypotheses are drawn for each component.
enum class HypothesisSampling {
  /// One graph per instance; the query is drawn to hit a pre-assigned label.
  PerGraph,
  /// Graphs are enumerated exhaustively (every pair x every conditioning set)
  /// into Yes/No pools, which are then subsampled without replacement.
  ExhaustivePool,
};

std::string_view to_string(HypothesisSampling s) noexcept;
HypothesisSampling sampling_from_string(std::string_view s);

struct CorpusSpec {
  std::string name;
  Task task = Task::Transitivity;
  std::vector<CorpusComponent> components;
  /// Target Yes-fraction of every component.
  double label_balance = 0.5;
  std::uint64_t master_seed = 0;
  HypothesisSampling sampling = HypothesisSampling::PerGraph;
  /// Upper bound on d-separation conditioning sets (capped at n - 2 per graph).
  std::size_t max_conditioning_size = 5;

  /// Throws ValidationError.
  void validate() const;
  std::size_t total_count() const noexcept;

  friend bool operator==(const CorpusSpec&, const CorpusSpec&) = default;
};

struct BuildOptions {
  unsigned threads = 1;
};

/// Resample budget per instance before giving up with GenerationError.
inline constexpr int kMaxGraphResamples = 100;

/// Stable instance id: the first 16 hex digits of
/// SHA-256("<corpus name>\n<index>\n<master seed>").
std::string instance_id(std::string_view corpus_name, std::size_t index, std::uint64_t master_seed);

/// Builds every component in order. Output depends only on the spec, never on
/// `options.threads`.
std::vector<AxiomInstance> build_corpus(const CorpusSpec& spec, const BuildOptions& options = {});

enum class EvalKind {
  Length,
  NodeNameShift,
  Reversal,
  Shuffle,
  Branching,
  MultiEvalSlr,
  DsepLong,
  DsepBranching,
};

std::string_view to_string(EvalKind kind) noexcept;
EvalKind eval_kind_from_string(std::string_view s);

struct EvalSuiteParams {
  std::vector<int> node_counts;
  IntRange name_length{1, 3};
  /// Branching kinds only.
  std::vector<double> branching_factors;
  std::size_t count_per_bucket = 1000;
};

/// The ranges each kind is evaluated on by default.
EvalSuiteParams default_eval_params(EvalKind kind);

/// One component per accuracy-table bucket, each balanced on its own.
/// Throws ValidationError when params fall outside the kind's evaluation range.
CorpusSpec eval_suite_spec(EvalKind kind, const EvalSuiteParams& params, std::uint64_t master_seed);

std::vector<AxiomInstance> build_eval_suite(EvalKind kind, const EvalSuiteParams& params,
                                            std::uint64_t master_seed,
                                            const BuildOptions& options = {});

}  // namespace causax
