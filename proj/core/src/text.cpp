#include "causax/text.hpp"

#include <algorithm>
#include <cctype>
#include <string>

#include "causax/error.hpp"
#include "causax/grammar.hpp"

namespace causax {

std::string premise_text(const CausalDag& g) {
  std::string out;
  for (const Edge& e : g.edges()) {
    if (!out.empty()) out += ' ';
    out += g.nodes()[e.source].str();
    out += " causes ";
    out += g.nodes()[e.target].str();
    out += '.';
  }
  return out;
}

std::string hypothesis_text(const Hypothesis& h) {
  if (const auto* t = std::get_if<TransitivityQuery>(&h)) {
    return "Does " + t->cause.str() + " cause " + t->effect.str() + "?";
  }
  const auto& d = std::get<DsepQuery>(h);
  std::string out = "Are " + d.a.str() + " and " + d.b.str() + " d-separated";
  if (!d.conditioning_set.empty()) {
    out += " given {";
    for (std::size_t i = 0; i < d.conditioning_set.size(); ++i) {
      if (i > 0) out += ", ";
      out += d.conditioning_set[i].str();
    }
    out += '}';
  }
  out += '?';
  return out;
}

std::string question_text(const CausalDag& g, const Hypothesis& h) {
  std::string premise = premise_text(g);
  std::string hyp = hypothesis_text(h);
  return premise.empty() ? hyp : premise + ' ' + hyp;
}

std::string serialize_text(const AxiomInstance& inst) {
  return question_text(inst.graph, inst.hypothesis) + ' ' + std::string(to_string(inst.label));
}

namespace {

bool is_word_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '-';
}

struct Lexeme {
  std::string text;
  std::size_t offset;
};

std::vector<Lexeme> lex(std::string_view text) {
  std::vector<Lexeme> out;
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
      ++i;
    } else if (is_word_char(c)) {
      std::size_t j = i;
      while (j < text.size() && is_word_char(text[j])) ++j;
      out.push_back({std::string(text.substr(i, j - i)), i});
      i = j;
    } else if (c == '.' || c == '?' || c == ':' || c == '{' || c == '}' || c == ',') {
      out.push_back({std::string(1, c), i});
      ++i;
    } else {
      throw ParseError("unexpected character at offset " + std::to_string(i));
    }
  }
  return out;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : lexemes_(lex(text)) {}

  bool done() const { return pos_ >= lexemes_.size(); }
  const std::string& peek(std::size_t ahead = 0) const {
    static const std::string kEnd;
    return pos_ + ahead < lexemes_.size() ? lexemes_[pos_ + ahead].text : kEnd;
  }

  void expect(std::string_view word) {
    if (peek() != word) {
      fail("expected '" + std::string(word) + "'");
    }
    ++pos_;
  }

  NodeName name() {
    const std::string& w = peek();
    if (!NodeName::is_valid(w) || is_reserved_word(w)) fail("expected a node name");
    ++pos_;
    return NodeName(w);
  }

  // Sentences "A causes B." until the next token is not a name followed by "causes".
  std::vector<NamedEdge> premise() {
    std::vector<NamedEdge> edges;
    while (!done() && peek(1) == "causes") {
      NodeName source = name();
      expect("causes");
      NodeName target = name();
      expect(".");
      edges.push_back({std::move(source), std::move(target)});
    }
    return edges;
  }

  Hypothesis hypothesis() {
    if (peek() == "Does") {
      ++pos_;
      NodeName cause = name();
      expect("cause");
      NodeName effect = name();
      expect("?");
      return TransitivityQuery{std::move(cause), std::move(effect)};
    }
    expect("Are");
    NodeName a = name();
    expect("and");
    NodeName b = name();
    expect("d-separated");
    std::vector<NodeName> given;
    if (peek() == "given") {
      ++pos_;
      expect("{");
      if (peek() != "}") {
        given.push_back(name());
        while (peek() == ",") {
          ++pos_;
          given.push_back(name());
        }
      }
      expect("}");
    }
    expect("?");
    return DsepQuery{std::move(a), std::move(b), std::move(given)};
  }

  std::optional<Label> label() {
    if (peek() == ":") ++pos_;
    if (done()) return std::nullopt;
    Label l = Label::No;
    if (peek() == "Yes") {
      l = Label::Yes;
    } else if (peek() == "No") {
      l = Label::No;
    } else {
      fail("expected 'Yes' or 'No'");
    }
    ++pos_;
    if (peek() == ".") ++pos_;
    return l;
  }

  void finish() {
    if (!done()) fail("unexpected trailing text");
  }

  [[noreturn]] void fail(const std::string& what) const {
    std::string where = done() ? "end of input"
                               : "'" + lexemes_[pos_].text + "' at offset " +
                                     std::to_string(lexemes_[pos_].offset);
    throw ParseError(what + ", found " + where);
  }

 private:
  std::vector<Lexeme> lexemes_;
  std::size_t pos_ = 0;
};

}  // namespace

ParsedText parse_text(std::string_view text) {
  Parser p(text);
  ParsedText out{p.premise(), p.hypothesis(), std::nullopt};
  out.label = p.label();
  p.finish();
  return out;
}

std::vector<NamedEdge> parse_premise(std::string_view text) {
  Parser p(text);
  auto edges = p.premise();
  p.finish();
  return edges;
}

Hypothesis parse_hypothesis(std::string_view text) {
  Parser p(text);
  auto h = p.hypothesis();
  p.finish();
  return h;
}

CausalDag graph_from_edges(const std::vector<NamedEdge>& edges, const Hypothesis& h,
                           const std::vector<NodeName>* nodes) {
  std::vector<NodeName> order;
  if (nodes != nullptr) {
    order = *nodes;
  } else {
    auto add = [&](const NodeName& n) {
      if (std::find(order.begin(), order.end(), n) == order.end()) order.push_back(n);
    };
    for (const auto& e : edges) {
      add(e.source);
      add(e.target);
    }
    if (const auto* t = std::get_if<TransitivityQuery>(&h)) {
      add(t->cause);
      add(t->effect);
    } else {
      const auto& d = std::get<DsepQuery>(h);
      add(d.a);
      add(d.b);
      for (const auto& z : d.conditioning_set) add(z);
    }
  }
  auto index = [&](const NodeName& n) -> NodeIndex {
    auto it = std::find(order.begin(), order.end(), n);
    if (it == order.end()) throw ParseError("edge mentions unknown node '" + n.str() + "'");
    return static_cast<NodeIndex>(it - order.begin());
  };
  std::vector<Edge> out;
  out.reserve(edges.size());
  for (const auto& e : edges) out.push_back({index(e.source), index(e.target)});
  return CausalDag(std::move(order), std::move(out));
}

AxiomInstance instance_from_text(std::string_view text) {
  ParsedText parsed = parse_text(text);
  CausalDag g = graph_from_edges(parsed.edges, parsed.hypothesis);
  Label label = parsed.label ? *parsed.label : oracle_label(g, parsed.hypothesis);
  const std::size_t n = g.node_count();
  const std::size_t name_max = g.max_name_length();
  const double bf = g.branching_factor();
  Task task = task_of(parsed.hypothesis);
  StructureTag tag = StructureTag::Branched;
  if (is_chain_skeleton(g)) {
    bool forward = std::all_of(g.edges().begin(), g.edges().end(),
                               [](const Edge& e) { return e.target == e.source + 1; });
    tag = forward ? StructureTag::Sequential
                  : (is_reversed_chain(g) ? StructureTag::Reversed : StructureTag::RandomFlip);
  }
  return AxiomInstance{"", task, std::move(g), std::move(parsed.hypothesis), label, tag,
                       n, name_max, bf, 0};
}

}  // namespace causax
