#include "mixvol/rational.hpp"

#include <cmath>
#include <stdexcept>

namespace mixvol {

namespace {

bool valid_integer(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

}  // namespace

Rational ratio(long p, long q) {
  Rational r(p, q);
  r.canonicalize();
  return r;
}

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!valid_integer(num) || !valid_integer(den) || den.front() == '-' || den.front() == '+')
    throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
  Integer p{std::string(num.front() == '+' ? num.substr(1) : num)};
  Integer q{std::string(den)};
  if (q == 0) throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
  Rational r(p, q);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& q) { return q.get_str(); }

double to_double(const Rational& q) { return q.get_d(); }

Rational dyadic_round(double x, int bits) {
  const double scaled = std::ldexp(x, bits);
  Integer num(static_cast<long>(std::llround(scaled)));
  Integer den = 1;
  den <<= bits;
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational dot(const RVec& a, const RVec& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

RVec add(const RVec& a, const RVec& b) {
  RVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

RVec sub(const RVec& a, const RVec& b) {
  RVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

RVec scale(const RVec& a, const Rational& s) {
  RVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] * s;
  return r;
}

RVec zeros(int n) { return RVec(static_cast<std::size_t>(n), Rational(0)); }

RVec unit_vector(int n, int i) {
  RVec e = zeros(n);
  e[static_cast<std::size_t>(i)] = 1;
  return e;
}

bool is_zero(const RVec& a) {
  for (const auto& x : a)
    if (x != 0) return false;
  return true;
}

RVec primitive(const RVec& a) {
  Integer den_lcm = 1;
  for (const auto& x : a) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), x.get_den_mpz_t());
  Integer g = 0;
  for (const auto& x : a) {
    Integer v = x.get_num() * (den_lcm / x.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  }
  if (g == 0) return a;
  RVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    Integer v = a[i].get_num() * (den_lcm / a[i].get_den());
    r[i] = Rational(Integer(v / g));
  }
  return r;
}

std::string to_string(const RVec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += v[i].get_str();
  }
  return s + ")";
}

}  // namespace mixvol
