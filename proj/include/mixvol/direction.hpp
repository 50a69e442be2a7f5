#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "mixvol/rational.hpp"

namespace mixvol {

/// A ray of the unit sphere, stored as the primitive integer vector on it.
/// Two directions are equal iff their coordinates agree; u and -u differ.
class Direction {
 public:
  Direction() = default;
  explicit Direction(const RVec& v);  // throws on the zero vector
  Direction(std::initializer_list<long> coords);
  static Direction from_ints(const std::vector<long>& coords);

  int dim() const { return static_cast<int>(coords_.size()); }
  const std::vector<Integer>& coords() const { return coords_; }
  const Integer& operator[](int i) const { return coords_[static_cast<std::size_t>(i)]; }

  RVec vec() const;
  Integer norm2() const;
  double norm() const;
  Direction operator-() const;
  std::string str() const;  // "1,0,-2"

  friend bool operator==(const Direction& a, const Direction& b) { return a.coords_ == b.coords_; }
  friend bool operator!=(const Direction& a, const Direction& b) { return !(a == b); }
  friend bool operator<(const Direction& a, const Direction& b) { return a.coords_ < b.coords_; }

 private:
  std::vector<Integer> coords_;
};

Rational dot(const Direction& u, const RVec& x);

/// Parses "1,0,-2" (or any separators of ',' / whitespace).
Direction parse_direction(const std::string& text);

}  // namespace mixvol
