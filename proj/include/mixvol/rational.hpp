#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace mixvol {

using Integer = mpz_class;
using Rational = mpq_class;
using RVec = std::vector<Rational>;

/// p/q in canonical form (mpq_class(p, q) leaves it uncanonicalized).
Rational ratio(long p, long q);

/// Parses "p/q", "p" or "-p/q". Throws std::invalid_argument on anything else.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);
double to_double(const Rational& q);

/// Nearest multiple of 2^-bits.
Rational dyadic_round(double x, int bits);

Rational dot(const RVec& a, const RVec& b);
RVec add(const RVec& a, const RVec& b);
RVec sub(const RVec& a, const RVec& b);
RVec scale(const RVec& a, const Rational& s);
RVec zeros(int n);
RVec unit_vector(int n, int i);
bool is_zero(const RVec& a);

/// Multiplies by a positive rational so the entries become coprime integers.
/// The zero vector is returned unchanged.
RVec primitive(const RVec& a);

std::string to_string(const RVec& v);

}  // namespace mixvol
