#pragma once

#include <algorithm>
#include <random>
#include <vector>

#include "mixvol/hessian.hpp"
#include "mixvol/polytope.hpp"

namespace mixvol::testing {

inline RVec ivec(std::initializer_list<long> xs) {
  RVec v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

inline RVec random_point(std::mt19937_64& rng, int n, int range) {
  std::uniform_int_distribution<int> d(-range, range);
  RVec p;
  for (int i = 0; i < n; ++i) p.emplace_back(d(rng));
  return p;
}

/// Random full-dimensional lattice polytope with at most `max_points` vertices.
inline Polytope random_polytope(std::mt19937_64& rng, int n, int max_points, int range = 3) {
  std::uniform_int_distribution<int> count(n + 1, std::max(n + 1, max_points));
  while (true) {
    std::vector<RVec> pts;
    const int m = count(rng);
    for (int i = 0; i < m; ++i) pts.push_back(random_point(rng, n, range));
    Polytope p = Polytope::hull(pts, n);
    if (p.dim() == n) return p;
  }
}

/// Random lattice polytope of any dimension 0..n (full-dimensional half the time).
inline Polytope random_body(std::mt19937_64& rng, int n, int max_points, int range = 2) {
  std::uniform_int_distribution<int> kind(0, 3);
  const int k = kind(rng);
  if (k < 2) return random_polytope(rng, n, max_points, range);
  std::uniform_int_distribution<int> count(1, max_points);
  const int m = k == 2 ? 2 : count(rng);
  std::vector<RVec> pts;
  for (int i = 0; i < m; ++i) {
    pts.push_back(random_point(rng, n, range));
    if (k == 3) pts.back().back() = 0;  // flat body
  }
  return Polytope::hull(pts, n);
}

inline Direction random_direction(std::mt19937_64& rng, int n, int range = 3) {
  while (true) {
    const RVec v = random_point(rng, n, range);
    if (!is_zero(v)) return Direction(v);
  }
}

/// max of `pieces` random lattice affine functions on [-4,4]^n.
inline PiecewiseAffineConvex random_pa_function(std::mt19937_64& rng, int n, int pieces) {
  std::uniform_int_distribution<int> coef(-2, 2);
  std::vector<AffinePiece> ps;
  for (int i = 0; i < pieces; ++i) ps.push_back({random_point(rng, n, 2), Rational(coef(rng))});
  return {std::move(ps), functions::cube_box(n, 4)};
}

/// f(x) = phi(<c,x>) with phi piecewise affine: H_{f,g} vanishes for two such.
inline PiecewiseAffineConvex random_ridge(std::mt19937_64& rng, const RVec& c, const Box& box) {
  std::uniform_int_distribution<int> k(-2, 2), pieces(2, 4);
  std::vector<AffinePiece> ps;
  const int m = pieces(rng);
  for (int i = 0; i < m; ++i) ps.push_back({scale(c, k(rng)), Rational(k(rng))});
  return {std::move(ps), box};
}

}  // namespace mixvol::testing
