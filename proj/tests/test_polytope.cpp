#include <random>
#include <set>

#include "doctest.h"
#include "mixvol/polytope.hpp"
#include "support.hpp"

using namespace mixvol;
using mixvol::testing::ivec;
using mixvol::testing::random_point;
using mixvol::testing::random_polytope;

namespace {

Rational factorial(int n) {
  Rational f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

// Facet normals by brute force over all n-subsets of the input points.
std::set<Direction> brute_force_facets(const std::vector<RVec>& pts, int n) {
  std::set<Direction> out;
  const int m = static_cast<int>(pts.size());
  std::vector<int> idx(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) idx[i] = i;
  if (n > m) return out;
  while (true) {
    RMat diffs;
    for (int i = 1; i < n; ++i) diffs.push_back(sub(pts[idx[i]], pts[idx[0]]));
    if (rank(diffs, n) == n - 1) {
      const RVec w = kernel(diffs, n).front();
      const Rational c = dot(w, pts[idx[0]]);
      bool below = true, above = true;
      for (const auto& p : pts) {
        const Rational v = dot(w, p);
        below = below && v <= c;
        above = above && v >= c;
      }
      if (below) out.insert(Direction(w));
      if (above) out.insert(Direction(scale(w, -1)));
    }
    int i = n - 1;
    while (i >= 0 && idx[i] == m - n + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < n; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

// Divergence theorem: n Vol(K) = sum over facets h(u) vol_{n-1}(F)/|u|.
Rational volume_by_facets(const Polytope& k) {
  const int n = k.ambient_dim();
  if (n == 1) {
    return k.vertices().back()[0] - k.vertices().front()[0];
  }
  Rational total = 0;
  for (const auto& f : k.facets()) {
    const HyperplaneFrame frame(f.normal);
    const Polytope face = k.face_polytope(k.exposed_face(f.normal.vec()));
    total += f.offset * frame.gram_factor() * volume_by_facets(project(face, frame));
  }
  return total / n;
}

int euler_characteristic(const Polytope& k) {
  int chi = 0;
  for (const auto& f : k.faces()) chi += (f.dim % 2 == 0) ? 1 : -1;
  return chi;
}

}  // namespace

TEST_CASE("unit cube") {
  for (int n = 1; n <= 4; ++n) {
    const Polytope c = shapes::unit_cube(n);
    CHECK(c.dim() == n);
    CHECK(c.vertices().size() == (1u << n));
    CHECK(c.facets().size() == static_cast<std::size_t>(2 * n));
    CHECK(c.volume() == 1);
  }
  const Polytope c3 = shapes::unit_cube(3);
  CHECK(c3.faces().size() == 27);
  CHECK(c3.support_value(ivec({1, -1, 2})) == 3);
  CHECK(c3.exposed_face(ivec({1, 0, 0})).dim == 2);
  CHECK(c3.exposed_face(ivec({1, 1, 0})).dim == 1);
  CHECK(c3.exposed_face(ivec({1, 1, 1})).dim == 0);
}

TEST_CASE("standard shapes have the known volumes") {
  for (int n = 1; n <= 4; ++n) {
    CHECK(shapes::standard_simplex(n).volume() == 1 / factorial(n));
    CHECK(shapes::cross_polytope(n).volume() == Rational(1 << n) / factorial(n));
  }
}

TEST_CASE("redundant points are discarded") {
  std::vector<RVec> pts{ivec({0, 0}), ivec({0, 1}), ivec({1, 0}), ivec({1, 1}),
                        {Rational(0), Rational(1, 2)}, {Rational(1, 2), Rational(1, 2)},
                        ivec({1, 1}), ivec({0, 0})};
  const Polytope sq = Polytope::hull(pts, 2);
  CHECK(sq.vertices().size() == 4);
  CHECK(sq.volume() == 1);
  for (const auto& f : sq.facets()) CHECK(f.vertices.size() == 2);
}

TEST_CASE("lower-dimensional polytopes") {
  const Polytope sq = Polytope::hull({ivec({0, 0, 0}), ivec({2, 0, 0}), ivec({0, 2, 0}),
                                      ivec({2, 2, 0})}, 3);
  CHECK(sq.dim() == 2);
  CHECK(sq.volume() == 0);
  CHECK(sq.facets().size() == 4);
  CHECK(sq.lineality() == RMat{ivec({0, 0, 1})});
  CHECK(sq.facet_directions() == std::vector<Direction>{Direction({0, 0, -1}), Direction({0, 0, 1})});
  for (const auto& f : sq.facets()) CHECK(f.normal[2] == 0);

  const Polytope tri = Polytope::hull({ivec({1, 0, 0}), ivec({0, 1, 0}), ivec({0, 0, 1})}, 3);
  CHECK(tri.dim() == 2);
  const Cone whole = normal_cone(tri, tri.whole());
  CHECK(whole.generators().empty());
  CHECK(whole.dim() == 1);
  CHECK(whole.contains(ivec({-2, -2, -2})));
  for (const auto& f : tri.facets()) CHECK(dot(f.normal, ivec({1, 1, 1})) == 0);

  const Polytope seg = shapes::segment(ivec({0, 0, 0}), ivec({1, 2, 3}));
  CHECK(seg.dim() == 1);
  CHECK(seg.facet_directions().empty());
  CHECK(seg.faces().size() == 3);

  const Polytope pt = shapes::point(ivec({1, 1}));
  CHECK(pt.dim() == 0);
  CHECK(pt.faces().size() == 1);
  CHECK(normal_cone(pt, pt.whole()).dim() == 2);
}

TEST_CASE("hull matches brute-force facets") {
  std::mt19937_64 rng(11);
  for (int n = 2; n <= 4; ++n)
    for (int trial = 0; trial < 25; ++trial) {
      std::vector<RVec> pts;
      const int m = n + 2 + trial % 6;
      for (int i = 0; i < m; ++i) pts.push_back(random_point(rng, n, 3));
      const Polytope k = Polytope::hull(pts, n);
      if (k.dim() < n) continue;
      std::set<Direction> mine;
      for (const auto& f : k.facets()) mine.insert(f.normal);
      CHECK(mine == brute_force_facets(pts, n));
      for (const auto& p : pts) CHECK(k.contains(p));
      // A vertex is exposed by the sum of its facet normals.
      for (int v = 0; v < static_cast<int>(k.vertices().size()); ++v) {
        CHECK(k.is_face(Face{{v}, 0}));
      }
    }
}

TEST_CASE("volume agrees with the divergence theorem") {
  std::mt19937_64 rng(12);
  for (int n = 2; n <= 4; ++n)
    for (int trial = 0; trial < 15; ++trial) {
      const Polytope k = random_polytope(rng, n, n + 6);
      CHECK(k.volume() == volume_by_facets(k));
    }
}

TEST_CASE("face lattice has Euler characteristic one") {
  std::mt19937_64 rng(13);
  for (int n = 2; n <= 4; ++n)
    for (int trial = 0; trial < 15; ++trial) {
      const Polytope k = random_polytope(rng, n, n + 6);
      CHECK(euler_characteristic(k) == 1);
      for (const auto& f : k.faces()) CHECK(k.is_face(f));
    }
}

TEST_CASE("normal cones of faces") {
  std::mt19937_64 rng(14);
  for (int n = 2; n <= 4; ++n)
    for (int trial = 0; trial < 8; ++trial) {
      const Polytope k = random_polytope(rng, n, n + 5);
      for (const auto& f : k.faces()) {
        const Cone c = normal_cone(k, f);
        CHECK(c.dim() == n - f.dim);
        // A relative-interior vector exposes exactly F.
        RVec w = zeros(n);
        for (const auto& g : c.generators()) w = add(w, g.vec());
        if (f.dim < n) CHECK(k.exposed_face(w).vertices == f.vertices);
        if (!is_zero(w)) CHECK(touching_cone(k, Direction(w)) == c);
      }
    }
  const Polytope c3 = shapes::unit_cube(3);
  CHECK_THROWS_AS(normal_cone(c3, Face{{0, 7}, 1}), std::invalid_argument);
}

TEST_CASE("Minkowski sums add support functions") {
  std::mt19937_64 rng(15);
  for (int n = 2; n <= 4; ++n)
    for (int trial = 0; trial < 10; ++trial) {
      const Polytope a = random_polytope(rng, n, n + 4);
      const Polytope b = random_polytope(rng, n, n + 4);
      const Polytope s = minkowski_sum(a, b);
      for (int j = 0; j < 10; ++j) {
        const RVec w = random_point(rng, n, 5);
        CHECK(s.support_value(w) == a.support_value(w) + b.support_value(w));
      }
      CHECK(minkowski_sum(b, a) == s);
    }
}

TEST_CASE("hyperplane frames") {
  std::mt19937_64 rng(16);
  for (int n = 2; n <= 4; ++n)
    for (int trial = 0; trial < 20; ++trial) {
      RVec v = random_point(rng, n, 4);
      if (is_zero(v)) continue;
      const Direction d(v);
      const HyperplaneFrame frame(d);
      CHECK(frame.gram_factor() * frame.gram_factor() * Rational(d.norm2()) == frame.gram_det());
      // Coordinates reproduce the orthogonal projection.
      const RVec x = random_point(rng, n, 4);
      const RVec y = frame.coords(x);
      RVec px = zeros(n);
      for (std::size_t i = 0; i < y.size(); ++i) px = add(px, scale(frame.basis()[i], y[i]));
      const RVec resid = sub(x, px);
      for (const auto& b : frame.basis()) CHECK(dot(b, resid) == 0);
      // ambient_functional inverts functional on v^perp.
      const RVec c = random_point(rng, n - 1, 4);
      const RVec w = frame.ambient_functional(c);
      CHECK(dot(d, w) == 0);
      CHECK(frame.functional(w) == c);
    }
  const Polytope cube = shapes::unit_cube(3);
  CHECK(project(cube, Direction({0, 0, 1})).volume() == 1);
  // Shadow of the cube along (1,1,1) is a hexagon of area sqrt(3); frame volume
  // times m |v| recovers it.
  const HyperplaneFrame f(Direction({1, 1, 1}));
  const Rational vy = project(cube, f).volume();
  CHECK(vy * vy * f.gram_det() == 3);
}

TEST_CASE("halfspace representation round trip") {
  std::mt19937_64 rng(17);
  for (int n = 2; n <= 4; ++n)
    for (int trial = 0; trial < 8; ++trial) {
      const Polytope k = random_polytope(rng, n, n + 5);
      const auto back = polytope_from_halfspaces(n, k.halfspaces());
      REQUIRE(back.has_value());
      CHECK(*back == k);
    }
  // Restricted to a hyperplane.
  const auto face = polytope_from_halfspaces(3, shapes::unit_cube(3).halfspaces(),
                                             {Halfspace{Direction({0, 0, 1}), 1}});
  REQUIRE(face.has_value());
  CHECK(face->dim() == 2);
  CHECK(face->vertices().size() == 4);
  CHECK_FALSE(polytope_from_halfspaces(2, {Halfspace{Direction({1, 0}), -1},
                                           Halfspace{Direction({-1, 0}), -1},
                                           Halfspace{Direction({0, 1}), 1},
                                           Halfspace{Direction({0, -1}), 1}})
                  .has_value());
  CHECK_THROWS_AS(polytope_from_halfspaces(2, {Halfspace{Direction({1, 0}), 1}}),
                  std::invalid_argument);
}

TEST_CASE("polar body") {
  const Polytope cube = shapes::box(ivec({-1, -1, -1}), ivec({1, 1, 1}));
  CHECK(polar(cube) == shapes::cross_polytope(3));
  std::mt19937_64 rng(18);
  for (int n = 2; n <= 4; ++n)
    for (int trial = 0; trial < 8; ++trial) {
      const Polytope k = random_polytope(rng, n, n + 5);
      if (!k.interior_contains(zeros(n))) continue;
      CHECK(polar(polar(k)) == k);
    }
  CHECK_THROWS(polar(shapes::unit_cube(2)));
}
