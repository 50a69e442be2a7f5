#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "mixvol/smooth.hpp"

using namespace mixvol;
using namespace mixvol::smooth;

namespace {

Mat random_symmetric(std::mt19937_64& rng, int m) {
  std::uniform_real_distribution<double> d(-1, 1);
  Mat a(m, m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) a(i, j) = d(rng);
  return (a + a.transpose()) / 2;
}

Mat random_psd(std::mt19937_64& rng, int m) {
  const Mat a = random_symmetric(rng, m);
  return a * a.transpose();
}

Vec random_unit(std::mt19937_64& rng, int n) {
  std::normal_distribution<double> d;
  Vec v(n);
  for (int i = 0; i < n; ++i) v(i) = d(rng);
  return v.normalized();
}

Vec v2(double a, double b) {
  Vec v(2);
  v << a, b;
  return v;
}

Vec v3(double a, double b, double c) {
  Vec v(3);
  v << a, b, c;
  return v;
}

// Brute-force coefficient of l1*...*lm in det(sum l_i M_i)/m!: the values at
// the 0/1 vectors combined by inclusion-exclusion.
double polarized_det(const std::vector<Mat>& ms) {
  const int m = static_cast<int>(ms.size());
  double sum = 0, fact = 1;
  for (int i = 2; i <= m; ++i) fact *= i;
  for (unsigned mask = 1; mask < (1u << m); ++mask) {
    Mat s = Mat::Zero(m, m);
    for (int i = 0; i < m; ++i)
      if (mask & (1u << i)) s += ms[i];
    sum += ((m - __builtin_popcount(mask)) % 2 ? -1 : 1) * s.determinant();
  }
  return sum / fact;
}

// Local ratio of surface area on the body to area on the sphere under the
// inverse Gauss map u -> grad h(u), by central differences on a tiny patch.
double gauss_map_area_ratio(const SmoothFunction& h, const Vec& u, double delta) {
  const Mat basis = orthonormal_complement(u);
  auto dir = [&](double s, double t) -> Vec {
    return (u + s * basis.col(0) + t * basis.col(1)).normalized();
  };
  const Vec us = (dir(delta, 0) - dir(-delta, 0)) / (2 * delta);
  const Vec ut = (dir(0, delta) - dir(0, -delta)) / (2 * delta);
  const Vec xs = (h.gradient(dir(delta, 0)) - h.gradient(dir(-delta, 0))) / (2 * delta);
  const Vec xt = (h.gradient(dir(0, delta)) - h.gradient(dir(0, -delta))) / (2 * delta);
  auto area = [](const Vec& a, const Vec& b) {
    return std::sqrt(a.squaredNorm() * b.squaredNorm() - a.dot(b) * a.dot(b));
  };
  return area(xs, xt) / area(us, ut);
}

}  // namespace

TEST_CASE("mixed discriminant named values") {
  const auto i2 = SymmetricMatrix::identity(2);
  CHECK(mixed_discriminant({i2, i2}) == doctest::Approx(1));
  CHECK(mixed_discriminant({SymmetricMatrix::diagonal({1, 0}), SymmetricMatrix::diagonal({0, 1})}) ==
        doctest::Approx(0.5));
  CHECK(std::abs(mixed_discriminant(
            {SymmetricMatrix::diagonal({2, 2}), SymmetricMatrix::diagonal({1, -1})})) < 1e-15);
  CHECK_THROWS_AS(mixed_discriminant({i2, SymmetricMatrix::identity(3)}), std::invalid_argument);
  CHECK_THROWS_AS(mixed_discriminant({i2}), std::invalid_argument);
  Mat asym(2, 2);
  asym << 1, 2, 3, 4;
  CHECK_THROWS_AS(SymmetricMatrix{asym}, std::invalid_argument);
}

TEST_CASE("mixed discriminant: diagonal form, symmetry, multilinearity, polarization") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> coef(-2, 2);
  for (int m = 1; m <= 4; ++m) {
    for (int trial = 0; trial < 50; ++trial) {
      const Mat a = random_symmetric(rng, m);
      std::vector<SymmetricMatrix> same(m, SymmetricMatrix(a));
      CHECK(std::abs(mixed_discriminant(same) - a.determinant()) < 1e-10);

      std::vector<Mat> raw;
      std::vector<SymmetricMatrix> ms;
      for (int i = 0; i < m; ++i) {
        raw.push_back(random_symmetric(rng, m));
        ms.emplace_back(raw.back());
      }
      const double d = mixed_discriminant(ms);
      CHECK(std::abs(d - polarized_det(raw)) < 1e-10);

      auto swapped = ms;
      std::swap(swapped.front(), swapped.back());
      CHECK(std::abs(mixed_discriminant(swapped) - d) < 1e-10);

      const Mat b = random_symmetric(rng, m);
      const double s = coef(rng), t = coef(rng);
      auto combo = ms, only_b = ms;
      combo[0] = SymmetricMatrix(s * raw[0] + t * b);
      only_b[0] = SymmetricMatrix(b);
      CHECK(std::abs(mixed_discriminant(combo) -
                     (s * d + t * mixed_discriminant(only_b))) < 1e-10);
    }
  }
}

TEST_CASE("mixed discriminant is nonnegative on PSD tuples") {
  std::mt19937_64 rng(12);
  for (int m = 2; m <= 4; ++m)
    for (int trial = 0; trial < 100; ++trial) {
      std::vector<SymmetricMatrix> ms;
      for (int i = 0; i < m; ++i) ms.emplace_back(random_psd(rng, m));
      CHECK(mixed_discriminant(ms) >= -1e-12);
    }
}

TEST_CASE("Panov criterion") {
  const auto e1 = SymmetricMatrix::diagonal({1, 0});
  auto v = panov_zero(e1, SymmetricMatrix::diagonal({2, 0}));
  CHECK(v.zero);
  CHECK(v.reason == "rank one with a shared kernel");
  CHECK_FALSE(panov_zero(e1, SymmetricMatrix::diagonal({0, 1})).zero);
  CHECK(panov_zero(e1, SymmetricMatrix::diagonal({0, 1})).d2 == doctest::Approx(0.5));
  CHECK(panov_zero(SymmetricMatrix::diagonal({0, 0}), SymmetricMatrix::identity(2)).zero);
  CHECK_THROWS_AS(panov_zero(SymmetricMatrix::diagonal({1, -1}), e1), std::invalid_argument);

  // Random rank-one pairs with equal or unequal kernels, and random PSD pairs.
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 200; ++trial) {
    const Vec p = random_unit(rng, 2), q = random_unit(rng, 2);
    const Mat a = 3 * p * p.transpose();
    CHECK(panov_zero(SymmetricMatrix(a), SymmetricMatrix(0.5 * p * p.transpose())).zero);
    if (std::abs(p.dot(q)) < 0.99)
      CHECK_FALSE(panov_zero(SymmetricMatrix(a), SymmetricMatrix(q * q.transpose())).zero);
    const auto r = panov_zero(SymmetricMatrix(random_psd(rng, 2)), SymmetricMatrix(random_psd(rng, 2)));
    CHECK(r.zero == (std::abs(r.d2) < 1e-10));
  }
}

TEST_CASE("finite-difference Hessians match closed forms") {
  std::mt19937_64 rng(14);
  std::uniform_real_distribution<double> d(-0.9, 0.9);
  for (const auto& name : registry_names()) {
    const auto f = registry(name);
    if (!f.has_closed_hessian()) continue;
    const auto fd = f.finite_difference();
    CHECK_FALSE(fd.has_closed_hessian());
    for (int trial = 0; trial < 100; ++trial) {
      Vec x(f.dim());
      for (int i = 0; i < f.dim(); ++i) x(i) = d(rng);
      // Keep away from the crease of the glued examples and the disk's axis.
      if (name.rfind("crease_", 0) == 0 && std::abs(x(0)) < 1e-3) continue;
      if (name == "disk" && std::hypot(x(0), x(1)) < 0.1) continue;
      if (f.dim() == 3 && x.norm() < 0.1) continue;
      const Mat exact = f.hessian(x);
      const double scale = std::max(1.0, exact.norm());
      CHECK_MESSAGE((exact - fd.hessian(x)).cwiseAbs().maxCoeff() < 1e-6 * scale, name);
    }
  }
  CHECK_THROWS_AS(registry("nope"), std::invalid_argument);
}

TEST_CASE("Hessian determinant of the crease example") {
  const auto h = registry("crease_h");
  std::mt19937_64 rng(15);
  std::uniform_real_distribution<double> d(-0.95, 0.95);
  for (int trial = 0; trial < 1000; ++trial) {
    const Vec x = v2(d(rng), d(rng));
    const double w = 1 - x(1) * x(1);
    const double expect = 4 * x(0) * x(0) / (w * w * w);
    CHECK(std::abs(h.hessian(x).determinant() - expect) < 1e-6 * (1 + expect));
  }
}

TEST_CASE("Householder complement") {
  std::mt19937_64 rng(16);
  for (int n = 2; n <= 4; ++n)
    for (int trial = 0; trial < 50; ++trial) {
      const Vec u = random_unit(rng, n);
      const Mat b = orthonormal_complement(u);
      CHECK(b.cols() == n - 1);
      CHECK((b.transpose() * b - Mat::Identity(n - 1, n - 1)).norm() < 1e-12);
      CHECK((b.transpose() * u).norm() < 1e-12);
    }
  const Mat b = orthonormal_complement(Vec::Unit(3, 0));
  CHECK((b.transpose() * Vec::Unit(3, 0)).norm() < 1e-15);
}

TEST_CASE("smooth density of balls and ellipsoids") {
  const auto ball = registry("ball"), ball2 = registry("ball2");
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 500; ++trial) {
    const Vec u = random_unit(rng, 3);
    CHECK(std::abs(smooth_density({ball, ball}, u) - 1) < 1e-8);
    CHECK(std::abs(smooth_density({ball, ball2}, u) - 2) < 1e-8);
    CHECK(rank_classify({ball, ball}, u));
  }
  // Product of principal radii of an ellipsoid: (abc)^2 / h(u)^4.
  const auto ell = registry("ellipsoid");
  for (int trial = 0; trial < 200; ++trial) {
    const Vec u = random_unit(rng, 3);
    const double h = ell.value(u);
    CHECK(std::abs(smooth_density({ell, ell}, u) - 1.0 / std::pow(h, 4)) < 1e-8);
  }
  CHECK_THROWS_AS(smooth_density({ball, ball}, v3(1, 1, 0)), std::invalid_argument);
  CHECK_THROWS_AS(smooth_density({ball}, v3(1, 0, 0)), std::invalid_argument);
  const SmoothFunction squared("sq", 3, [](const Vec& x) { return x.squaredNorm(); },
                               [](const Vec& x) -> Vec { return 2 * x; });
  CHECK_THROWS_AS(smooth_density({ball, squared}, v3(1, 0, 0)), std::invalid_argument);
}

TEST_CASE("ball density integrates to the sphere area") {
  const auto ball = registry("ball");
  const int nt = 200, np = 400;
  double total = 0;
  for (int i = 0; i < nt; ++i) {
    const double th = (i + 0.5) * std::numbers::pi / nt;
    for (int j = 0; j < np; ++j) {
      const double ph = (j + 0.5) * 2 * std::numbers::pi / np;
      const Vec u = v3(std::sin(th) * std::cos(ph), std::sin(th) * std::sin(ph), std::cos(th));
      total += smooth_density({ball, ball}, u) * std::sin(th) * (std::numbers::pi / nt) *
               (2 * std::numbers::pi / np);
    }
  }
  CHECK(std::abs(total / (4 * std::numbers::pi) - 1) < 1e-3);
}

TEST_CASE("smooth density agrees with the Gauss-map area ratio") {
  std::mt19937_64 rng(18);
  for (const char* name : {"ellipsoid", "smoothed_octahedron"}) {
    const auto h = registry(name);
    for (int trial = 0; trial < 50; ++trial) {
      const Vec u = random_unit(rng, 3);
      const double dens = smooth_density({h, h}, u);
      CHECK_MESSAGE(std::abs(dens - gauss_map_area_ratio(h, u, 1e-4)) < 1e-5 * (1 + dens), name);
    }
  }
  // The smoothed octahedron is infinitely curved at its corner with normal e1.
  const auto oct = registry("smoothed_octahedron");
  const Vec e1 = Vec::Unit(3, 0);
  CHECK(std::abs(smooth_density({oct, oct}, e1)) < 1e-8);
  CHECK(gauss_map_area_ratio(oct, e1, 1e-4) < 1e-7);
}

TEST_CASE("rank characterization") {
  const auto ball = registry("ball"), disk = registry("disk");
  const Vec e1 = Vec::Unit(3, 0);
  CHECK_FALSE(rank_classify({disk, disk}, e1));
  CHECK(smooth_density({disk, disk}, e1) == doctest::Approx(0).epsilon(1e-12));
  CHECK(rank_classify({ball, disk}, e1));
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 500; ++trial) {
    Vec u = random_unit(rng, 3);
    if (std::hypot(u(0), u(1)) < 1e-3) continue;
    CHECK(rank_classify({ball, disk}, u) == (smooth_density({ball, disk}, u) > 1e-10));
    CHECK(rank_classify({disk, disk}, u) == (smooth_density({disk, disk}, u) > 1e-10));
  }
}

TEST_CASE("mixed Monge-Ampere residual fields") {
  const auto sq = registry("norm2sq"), harm = registry("harmonic");
  const Box2 box{{-1, -1}, {1, 1}};
  for (const auto& v : mixed_ma_residual(sq, harm, box, 100, 100)) CHECK(std::abs(v.residual) < 1e-6);
  for (const auto& v : mixed_ma_residual(sq, sq, box, 10, 10)) CHECK(v.residual == doctest::Approx(4));

  const Box2 d{{-0.9, -0.9}, {0.9, 0.9}};
  const auto f = registry("crease_f"), g = registry("crease_g");
  for (const auto& v : mixed_ma_residual(f, g, d, 101, 101))
    if (std::abs(v.x1) > 1e-3) CHECK(std::abs(v.residual) < 1e-6);

  const auto serial = mixed_ma_residual(sq, harm, box, 37, 23, Execution::serial);
  const auto parallel = mixed_ma_residual(sq, harm, box, 37, 23, Execution::parallel);
  REQUIRE(serial.size() == parallel.size());
  for (std::size_t i = 0; i < serial.size(); ++i) {
    CHECK(serial[i].x1 == parallel[i].x1);
    CHECK(serial[i].x2 == parallel[i].x2);
    CHECK(serial[i].residual == parallel[i].residual);
  }
  CHECK_THROWS_AS(mixed_ma_residual(registry("ball"), sq, box, 5, 5), std::invalid_argument);
}

TEST_CASE("smooth rulings") {
  const auto f = registry("crease_f"), g = registry("crease_g");
  const Box2 d{{-1, -1}, {1, 1}};
  const auto r = hn_ruling(f, g, d, v2(0, 0.2));
  CHECK((r.direction - v2(0, 1)).norm() < 1e-12);
  CHECK((r.a - v2(0, -1)).norm() < 1e-12);
  CHECK((r.b - v2(0, 1)).norm() < 1e-12);
  CHECK(r.max_second_derivative < 1e-6);

  // On the open half x1 < 0, f vanishes near x.
  CHECK_THROWS_WITH_AS(hn_ruling(f, g, d, v2(-0.5, 0.2)), "x in R", std::invalid_argument);
  CHECK_THROWS_WITH_AS(hn_ruling(f, g, d, v2(2, 0)), "x not in D", std::invalid_argument);
  const auto sq = registry("norm2sq");
  CHECK_THROWS_AS(hn_ruling(sq, sq, d, v2(0, 0)), std::invalid_argument);

  const auto cyl = registry("cylinder");
  std::mt19937_64 rng(20);
  std::uniform_real_distribution<double> u(-0.99, 0.99);
  for (int trial = 0; trial < 50; ++trial) {
    const Vec x = v2(u(rng), u(rng));
    const auto c = hn_ruling(cyl, cyl, d, x);
    CHECK((c.direction - v2(0, 1)).norm() < 1e-12);
    CHECK(c.a(0) == doctest::Approx(x(0)));
    CHECK(c.a(1) == doctest::Approx(-1));
    CHECK(c.b(1) == doctest::Approx(1));
  }
}
