#pragma once

#include <stdexcept>

namespace growth {

/// A computation was refused because it would exceed a configured size bound.
class BoundExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An internal consistency assertion failed (two computation paths disagree,
/// or a result violates a structural property it must have).
class InternalMismatch : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace growth
