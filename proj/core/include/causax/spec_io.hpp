#pragma once

#include <string>
#include <string_view>

#include "causax/corpus.hpp"

namespace causax {

/// JSON form of a CorpusSpec:
///
///   {
///     "name": "my-corpus",
///     "task": "transitivity",            // or "dsep"
///     "seed": 7,
///     "label_balance": 0.5,              // optional
///     "sampling": "per_graph",           // optional, or "exhaustive_pool"
///     "max_conditioning_size": 5,        // optional
///     "components": [
///       {"count": 1000, "node_count": [3, 6], "name_length": [1, 3],
///        "flip_probability": 0.5, "require_flip": false,
///        "shuffle_edges": false, "branching_factor": [1.4, 1.4]}
///     ]
///   }
///
/// Omitted component keys take PerturbationProfile defaults. Throws ParseError
/// for malformed JSON or wrongly typed fields, ValidationError for invalid values.
CorpusSpec parse_corpus_spec(std::string_view json_text);

/// Pretty-printed JSON accepted by parse_corpus_spec.
std::string format_corpus_spec(const CorpusSpec& spec);

}  // namespace causax
