#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "causax/corpus.hpp"

namespace causax {

/// occ, ts1, ts2, dsep-train, eval-length, eval-names, eval-reversal,
/// eval-shuffle, eval-branching, multieval-slr, dsep-long, dsep-branching.
const std::vector<std::string>& preset_names();

struct PresetOptions {
  /// Evaluation presets only; overrides the default count per bucket.
  std::optional<std::size_t> count_per_bucket;
};

/// Throws ValidationError for unknown names.
CorpusSpec preset_spec(std::string_view name, std::uint64_t seed, const PresetOptions& options = {});

/// Count per bucket used by evaluation presets when none is given.
inline constexpr std::size_t kDefaultEvalBucketSize = 1000;

}  // namespace causax
