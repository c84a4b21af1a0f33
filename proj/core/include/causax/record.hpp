#pragma once

#include <string>
#include <string_view>

#include "causax/instance.hpp"

namespace causax {

/// One JSON object (no trailing newline) with the fields id, task, nodes,
/// premise, hypothesis, label, structure_tag, node_count, name_length_max,
/// branching_factor, seed.
std::string serialize_record(const AxiomInstance& inst);

/// Inverse of serialize_record. The stored label is kept even if it disagrees
/// with the oracle; see oracle_label. Throws ParseError on malformed input.
AxiomInstance parse_record(std::string_view line);

}  // namespace causax
