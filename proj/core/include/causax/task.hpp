#pragma once

#include <string_view>

namespace causax {

enum class Task { Transitivity, Dsep };

std::string_view to_string(Task task) noexcept;
/// "transitivity" or "dsep"; throws ValidationError otherwise.
Task task_from_string(std::string_view s);

}  // namespace causax
