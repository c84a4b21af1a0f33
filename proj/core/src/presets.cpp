#include "causax/presets.hpp"

#include <string>

#include "causax/error.hpp"

namespace causax {

const std::vector<std::string>& preset_names() {
  static const std::vector<std::string> names = {
      "occ",           "ts1",           "ts2",          "dsep-train",
      "eval-length",   "eval-names",    "eval-reversal", "eval-shuffle",
      "eval-branching", "multieval-slr", "dsep-long",    "dsep-branching"};
  return names;
}

namespace {

PerturbationProfile train_chain(double flip) {
  PerturbationProfile p;
  p.node_count = {3, 6};
  p.name_length = {1, 3};
  p.flip_probability = flip;
  p.require_flip = flip > 0.0 && flip < 1.0;
  return p;
}

CorpusSpec transitivity_train(std::string name, std::uint64_t seed,
                              std::vector<CorpusComponent> components) {
  CorpusSpec spec;
  spec.name = std::move(name);
  spec.task = Task::Transitivity;
  spec.components = std::move(components);
  spec.master_seed = seed;
  return spec;
}

}  // namespace

CorpusSpec preset_spec(std::string_view name, std::uint64_t seed, const PresetOptions& options) {
  if (name == "occ") {
    return transitivity_train("occ", seed, {{train_chain(0.0), 175'000}});
  }
  if (name == "ts1") {
    return transitivity_train("ts1", seed, {{train_chain(0.5), 73'000}, {train_chain(0.0), 101'000}});
  }
  if (name == "ts2") {
    return transitivity_train("ts2", seed, {{train_chain(0.0), 132'000}, {train_chain(0.5), 42'000}});
  }
  if (name == "dsep-train") {
    PerturbationProfile p;
    p.node_count = {3, 6};
    p.name_length = {1, 3};
    p.branching_factor = RealRange{0.6, 0.8};
    CorpusSpec spec;
    spec.name = "dsep-train";
    spec.task = Task::Dsep;
    spec.components = {{p, 175'000}};
    spec.master_seed = seed;
    spec.sampling = HypothesisSampling::ExhaustivePool;
    spec.max_conditioning_size = 5;
    return spec;
  }

  struct EvalPreset {
    std::string_view name;
    EvalKind kind;
  };
  static constexpr EvalPreset kEval[] = {
      {"eval-length", EvalKind::Length},         {"eval-names", EvalKind::NodeNameShift},
      {"eval-reversal", EvalKind::Reversal},     {"eval-shuffle", EvalKind::Shuffle},
      {"eval-branching", EvalKind::Branching},   {"multieval-slr", EvalKind::MultiEvalSlr},
      {"dsep-long", EvalKind::DsepLong},         {"dsep-branching", EvalKind::DsepBranching},
  };
  for (const auto& e : kEval) {
    if (e.name != name) continue;
    EvalSuiteParams params = default_eval_params(e.kind);
    params.count_per_bucket = options.count_per_bucket.value_or(kDefaultEvalBucketSize);
    CorpusSpec spec = eval_suite_spec(e.kind, params, seed);
    spec.name = std::string(e.name);
    return spec;
  }
  throw ValidationError("unknown preset '" + std::string(name) + "'");
}

}  // namespace causax
