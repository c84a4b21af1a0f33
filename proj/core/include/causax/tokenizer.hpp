#pragma once

#include <cstdint>
#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "causax/task.hpp"

namespace causax {

using TokenId = std::uint32_t;

/// Fixed token inventory: one token per name character, one per reserved
/// word, one per punctuation mark.
///
/// Transitivity (69 entries): the 62 characters 0-9 A-Z a-z, then "causes",
/// "Does", "cause", "Yes", "No", then "." and "?".
/// D-separation (76 entries): the transitivity entries, then "Are", "and",
/// "d-separated", "given", "{", "}", ",".
class Vocabulary {
 public:
  static Vocabulary build(Task task);

  /// One token per line; line number - 1 is the id. Throws ValidationError on
  /// duplicates or entries that are neither characters, words nor punctuation.
  static Vocabulary parse(std::string_view file_text);
  static Vocabulary load(std::istream& in);

  std::string to_file_text() const;

  std::size_t size() const noexcept { return entries_.size(); }
  const std::vector<std::string>& entries() const noexcept { return entries_; }
  std::optional<TokenId> find(std::string_view token) const;
  /// Throws DecodingError for ids out of range.
  const std::string& token(TokenId id) const;

  bool is_char_token(TokenId id) const { return token(id).size() == 1 && is_name_char(token(id)[0]); }
  static bool is_name_char(char c) noexcept;

  friend bool operator==(const Vocabulary& a, const Vocabulary& b) { return a.entries_ == b.entries_; }

 private:
  explicit Vocabulary(std::vector<std::string> entries);

  std::vector<std::string> entries_;
  std::unordered_map<std::string, TokenId> ids_;
};

struct TokenStream {
  std::vector<TokenId> ids;

  friend bool operator==(const TokenStream&, const TokenStream&) = default;
};

/// Whitespace separates and emits nothing; a whole word equal to a reserved
/// word becomes one token; any other word becomes one token per character.
/// Throws EncodingError naming the first character outside the vocabulary.
TokenStream encode(std::string_view text, const Vocabulary& vocab);

/// Restores single spaces between units; no space inside names, before
/// ". ? , }" or after "{". Throws DecodingError on out-of-range ids.
std::string decode(const TokenStream& tokens, const Vocabulary& vocab);

/// Space-separated decimal ids.
std::string format_token_dump(const TokenStream& tokens);
TokenStream parse_token_dump(std::string_view line);

}  // namespace causax
