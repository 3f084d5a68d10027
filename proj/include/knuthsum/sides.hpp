#pragma once

#include "knuthsum/rational.hpp"

namespace knuthsum {

/// Both sides of an identity at one parameter assignment.
struct Sides {
  Rational lhs;
  Rational rhs;

  [[nodiscard]] bool equal() const { return lhs == rhs; }
  friend bool operator==(const Sides&, const Sides&) = default;
};

}  // namespace knuthsum
