#pragma once

#include <stdexcept>
#include <string>

namespace hessring {

// Enumeration guards keep exhaustive sweeps at desk scale. The environment
// variable HESSRING_GUARD_OVERRIDE lifts them (can be very slow).
struct guard_error : std::runtime_error {
  explicit guard_error(const std::string& what) : std::runtime_error(what) {}
};

// Raised when two routes that must agree by a proven identity disagree.
// Seeing this means a bug in the implementation, never a property of the input.
struct consistency_error : std::logic_error {
  explicit consistency_error(const std::string& what) : std::logic_error(what) {}
};

bool guards_overridden();

inline void check_guard(bool ok, const std::string& what) {
  if (!ok && !guards_overridden()) throw guard_error(what);
}

}  // namespace hessring
