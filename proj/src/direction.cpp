#include "mixvol/direction.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace mixvol {

Direction::Direction(const RVec& v) {
  if (is_zero(v)) throw std::invalid_argument("direction must be nonzero");
  const RVec p = primitive(v);
  coords_.reserve(p.size());
  for (const auto& x : p) coords_.push_back(x.get_num());
}

Direction::Direction(std::initializer_list<long> coords)
    : Direction(from_ints(std::vector<long>(coords))) {}

Direction Direction::from_ints(const std::vector<long>& coords) {
  RVec v;
  v.reserve(coords.size());
  for (long c : coords) v.emplace_back(c);
  return Direction(v);
}

RVec Direction::vec() const {
  RVec v;
  v.reserve(coords_.size());
  for (const auto& c : coords_) v.emplace_back(c);
  return v;
}

Integer Direction::norm2() const {
  Integer s = 0;
  for (const auto& c : coords_) s += c * c;
  return s;
}

double Direction::norm() const { return std::sqrt(norm2().get_d()); }

Direction Direction::operator-() const {
  Direction d = *this;
  for (auto& c : d.coords_) c = -c;
  return d;
}

std::string Direction::str() const {
  std::string s;
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) s += ",";
    s += coords_[i].get_str();
  }
  return s;
}

Rational dot(const Direction& u, const RVec& x) {
  Rational s = 0;
  for (int i = 0; i < u.dim(); ++i) s += u[i] * x[static_cast<std::size_t>(i)];
  return s;
}

Direction parse_direction(const std::string& text) {
  std::string cleaned = text;
  for (auto& c : cleaned)
    if (c == ',') c = ' ';
  std::istringstream in(cleaned);
  RVec v;
  std::string tok;
  while (in >> tok) v.push_back(parse_rational(tok));
  if (v.empty()) throw std::invalid_argument("empty direction");
  return Direction(v);
}

}  // namespace mixvol
