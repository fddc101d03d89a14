#pragma once

#include <stdexcept>
#include <string>

namespace flapped {

// Bad input: malformed spec, malformed slope, violated precondition.
class InputError : public std::invalid_argument {
 public:
  explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

// A consistency check inside the engine failed. Never expected on valid input.
class InternalError : public std::logic_error {
 public:
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

// The annulus circuit search hit its walk-extension cap.
class BudgetExceeded : public std::runtime_error {
 public:
  explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

inline void check(bool cond, const char* what) {
  if (!cond) throw InternalError(what);
}

}  // namespace flapped
