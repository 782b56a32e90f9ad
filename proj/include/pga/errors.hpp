#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pga {

/// Malformed or out-of-range group specification. `position` is a 0-based
/// character offset into the spec string, or npos when not applicable.
class SpecError : public std::runtime_error {
 public:
  explicit SpecError(const std::string& what, std::size_t position = std::string::npos)
      : std::runtime_error(what), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// A structural invariant failed. These indicate a bug or a false structural claim
/// and are never expected on valid input.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A resource cap (node count, automorphism count, search budget) was hit.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline void check_internal(bool condition, const std::string& message) {
  if (!condition) throw InternalError(message);
}

}  // namespace pga
