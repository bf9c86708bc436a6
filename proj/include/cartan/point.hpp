#pragma once

#include <array>

#include "cartan/rational.hpp"

namespace cartan {

// A point of the fixed 5-dimensional chart, exact coordinates.
struct Point {
  std::array<Rational, 5> x{};

  const Rational& operator[](int i) const { return x.at(static_cast<std::size_t>(i)); }
  Rational& operator[](int i) { return x.at(static_cast<std::size_t>(i)); }

  friend bool operator==(const Point& a, const Point& b) { return a.x == b.x; }
};

}  // namespace cartan
