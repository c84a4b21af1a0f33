#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "causax/instance.hpp"

namespace causax {

/// "U causes V." sentences joined by single spaces, in presentation order.
std::string premise_text(const CausalDag& g);

/// "Does U cause V?" or "Are U and V d-separated given {A, B}?"; the given
/// clause is dropped for an empty conditioning set.
std::string hypothesis_text(const Hypothesis& h);

/// Premise and hypothesis without the label.
std::string question_text(const CausalDag& g, const Hypothesis& h);

/// Premise, hypothesis and label: "... Does X cause Y? Yes".
std::string serialize_text(const AxiomInstance& inst);

struct NamedEdge {
  NodeName source;
  NodeName target;
};

struct ParsedText {
  std::vector<NamedEdge> edges;
  Hypothesis hypothesis;
  std::optional<Label> label;
};

/// Parses the instance grammar. Accepts "? Yes", "?: Yes", a trailing "."
/// after the label, and a missing label. Throws ParseError otherwise.
ParsedText parse_text(std::string_view text);

/// Parses only a premise (possibly empty).
std::vector<NamedEdge> parse_premise(std::string_view text);
/// Parses only a hypothesis sentence.
Hypothesis parse_hypothesis(std::string_view text);

/// Builds a graph whose node list is `nodes` (if given) or the order of first
/// appearance in the edges followed by hypothesis-only nodes.
CausalDag graph_from_edges(const std::vector<NamedEdge>& edges, const Hypothesis& h,
                           const std::vector<NodeName>* nodes = nullptr);

/// Parses text into a labeled instance. A missing label is filled in by the
/// oracle; a present one is kept as written.
AxiomInstance instance_from_text(std::string_view text);

}  // namespace causax
