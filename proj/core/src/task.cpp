#include "causax/task.hpp"

#include <string>

#include "causax/error.hpp"

namespace causax {

std::string_view to_string(Task task) noexcept {
  return task == Task::Transitivity ? "transitivity" : "dsep";
}

Task task_from_string(std::string_view s) {
  if (s == "transitivity") return Task::Transitivity;
  if (s == "dsep") return Task::Dsep;
  throw ValidationError("unknown task '" + std::string(s) + "'");
}

}  // namespace causax
