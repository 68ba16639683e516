#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace thetapath {

// Enumeration refuses to materialize a family whose predicted size exceeds
// the cap; callers get this instead of memory exhaustion.
class resource_limit_error : public std::runtime_error {
 public:
  explicit resource_limit_error(const std::string& what) : std::runtime_error(what) {}
};

inline constexpr std::size_t kDefaultEnumerationCap = 100'000'000;

}  // namespace thetapath
