#pragma once
#include <stdexcept>
#include <string>

namespace ppcode {

// Malformed or out-of-contract caller input. CLI exit code 2.
struct input_error : std::runtime_error {
  explicit input_error(const std::string& msg) : std::runtime_error(msg) {}
};

// A proven identity failed to hold, or an internal consistency check broke.
// CLI exit code 3.
struct internal_error : std::runtime_error {
  explicit internal_error(const std::string& msg) : std::runtime_error(msg) {}
};

// A configured work budget was exhausted before the result was complete.
// CLI exit code 4.
struct budget_error : std::runtime_error {
  explicit budget_error(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace ppcode
