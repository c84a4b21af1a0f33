#include "causax/tokenizer.hpp"

#include <charconv>
#include <cstdio>
#include <sstream>

#include "causax/error.hpp"
#include "causax/grammar.hpp"

namespace causax {

namespace {

constexpr std::string_view kTransitivityWords[] = {"causes", "Does", "cause", "Yes", "No"};
constexpr std::string_view kTransitivityPunct[] = {".", "?"};
constexpr std::string_view kDsepWords[] = {"Are", "and", "d-separated", "given"};
constexpr std::string_view kDsepPunct[] = {"{", "}", ","};

bool is_word_char(char c) noexcept { return Vocabulary::is_name_char(c) || c == '-'; }
bool is_space(char c) noexcept { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; }

// Code point starting at text[i] for error messages; raw byte if malformed.
char32_t code_point_at(std::string_view text, std::size_t i) {
  auto b = static_cast<unsigned char>(text[i]);
  std::size_t extra = b >= 0xF0 ? 3 : b >= 0xE0 ? 2 : b >= 0xC0 ? 1 : 0;
  if (extra == 0 || i + extra >= text.size()) return b;
  char32_t cp = b & (0x3F >> extra);
  for (std::size_t k = 1; k <= extra; ++k) {
    auto c = static_cast<unsigned char>(text[i + k]);
    if ((c & 0xC0) != 0x80) return b;
    cp = (cp << 6) | (c & 0x3F);
  }
  return cp;
}

std::size_t code_point_length(std::string_view text, std::size_t i) {
  auto b = static_cast<unsigned char>(text[i]);
  std::size_t len = b >= 0xF0 ? 4 : b >= 0xE0 ? 3 : b >= 0xC0 ? 2 : 1;
  return std::min(len, text.size() - i);
}

[[noreturn]] void oov(std::string_view text, std::size_t offset) {
  char32_t cp = code_point_at(text, offset);
  char hex[16];
  std::snprintf(hex, sizeof hex, "U+%04X", static_cast<unsigned>(cp));
  std::string shown(text.substr(offset, code_point_length(text, offset)));
  throw EncodingError("character '" + shown + "' (" + hex + ") at offset " +
                          std::to_string(offset) + " is not in the vocabulary",
                      cp, offset);
}

}  // namespace

bool Vocabulary::is_name_char(char c) noexcept {
  return kNameAlphabet.find(c) != std::string_view::npos;
}

Vocabulary::Vocabulary(std::vector<std::string> entries) : entries_(std::move(entries)) {
  for (TokenId i = 0; i < entries_.size(); ++i) {
    const auto& e = entries_[i];
    if (e.empty()) throw ValidationError("empty vocabulary entry at id " + std::to_string(i));
    bool single = e.size() == 1;
    bool known = (single && (is_name_char(e[0]) || e == "." || e == "?" || e == "{" || e == "}" ||
                             e == ",")) ||
                 is_reserved_word(e);
    if (!known) throw ValidationError("unsupported vocabulary entry '" + e + "'");
    if (!ids_.emplace(e, i).second) throw ValidationError("duplicate vocabulary entry '" + e + "'");
  }
}

Vocabulary Vocabulary::build(Task task) {
  std::vector<std::string> entries;
  for (char c : kNameAlphabet) entries.emplace_back(1, c);
  for (auto w : kTransitivityWords) entries.emplace_back(w);
  for (auto p : kTransitivityPunct) entries.emplace_back(p);
  if (task == Task::Dsep) {
    for (auto w : kDsepWords) entries.emplace_back(w);
    for (auto p : kDsepPunct) entries.emplace_back(p);
  }
  return Vocabulary(std::move(entries));
}

Vocabulary Vocabulary::parse(std::string_view file_text) {
  std::vector<std::string> entries;
  std::size_t start = 0;
  while (start < file_text.size()) {
    std::size_t end = file_text.find('\n', start);
    if (end == std::string_view::npos) end = file_text.size();
    std::string_view line = file_text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    entries.emplace_back(line);
    start = end + 1;
  }
  return Vocabulary(std::move(entries));
}

Vocabulary Vocabulary::load(std::istream& in) {
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

std::string Vocabulary::to_file_text() const {
  std::string out;
  for (const auto& e : entries_) {
    out += e;
    out += '\n';
  }
  return out;
}

std::optional<TokenId> Vocabulary::find(std::string_view token) const {
  auto it = ids_.find(std::string(token));
  if (it == ids_.end()) return std::nullopt;
  return it->second;
}

const std::string& Vocabulary::token(TokenId id) const {
  if (id >= entries_.size()) {
    throw DecodingError("token id " + std::to_string(id) + " out of range for a vocabulary of " +
                        std::to_string(entries_.size()));
  }
  return entries_[id];
}

TokenStream encode(std::string_view text, const Vocabulary& vocab) {
  TokenStream out;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (is_space(c)) {
      ++i;
      continue;
    }
    if (!is_word_char(c)) {
      auto id = vocab.find(std::string_view(&text[i], 1));
      if (!id) oov(text, i);
      out.ids.push_back(*id);
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < text.size() && is_word_char(text[j])) ++j;
    std::string_view word = text.substr(i, j - i);
    if (is_reserved_word(word)) {
      if (auto id = vocab.find(word)) {
        out.ids.push_back(*id);
        i = j;
        continue;
      }
    }
    for (std::size_t k = i; k < j; ++k) {
      auto id = Vocabulary::is_name_char(text[k]) ? vocab.find(text.substr(k, 1)) : std::nullopt;
      if (!id) oov(text, k);
      out.ids.push_back(*id);
    }
    i = j;
  }
  return out;
}

std::string decode(const TokenStream& tokens, const Vocabulary& vocab) {
  std::string out;
  bool prev_char = false;
  std::string_view prev;
  for (std::size_t k = 0; k < tokens.ids.size(); ++k) {
    const std::string& tok = vocab.token(tokens.ids[k]);
    const bool is_char = vocab.is_char_token(tokens.ids[k]);
    if (k > 0) {
      const bool joined = (prev_char && is_char) || tok == "." || tok == "?" || tok == "," ||
                          tok == "}" || prev == "{";
      if (!joined) out += ' ';
    }
    out += tok;
    prev_char = is_char;
    prev = tok;
  }
  return out;
}

std::string format_token_dump(const TokenStream& tokens) {
  std::string out;
  for (std::size_t k = 0; k < tokens.ids.size(); ++k) {
    if (k > 0) out += ' ';
    out += std::to_string(tokens.ids[k]);
  }
  return out;
}

TokenStream parse_token_dump(std::string_view line) {
  TokenStream out;
  std::size_t i = 0;
  while (i < line.size()) {
    if (is_space(line[i])) {
      ++i;
      continue;
    }
    TokenId id = 0;
    auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + line.size(), id);
    if (ec != std::errc() || (ptr != line.data() + line.size() && !is_space(*ptr))) {
      throw DecodingError("malformed token id at offset " + std::to_string(i));
    }
    out.ids.push_back(id);
    i = static_cast<std::size_t>(ptr - line.data());
  }
  return out;
}

}  // namespace causax
