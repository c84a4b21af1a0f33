#pragma once

#include <array>
#include <string_view>

namespace causax {

/// Words with a fixed meaning in premise/hypothesis text. Generated node names
/// never collide with these, so text and token streams stay unambiguous.
inline constexpr std::array<std::string_view, 9> kReservedWords = {
    "causes", "Does", "cause", "Yes", "No", "Are", "and", "d-separated", "given"};

constexpr bool is_reserved_word(std::string_view w) noexcept {
  for (auto r : kReservedWords) {
    if (r == w) return true;
  }
  return false;
}

/// The 62 characters node names are drawn from, in vocabulary order.
inline constexpr std::string_view kNameAlphabet =
    "0123456789ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz";

}  // namespace causax
