#include "mixvol/appendix.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <set>
#include <stdexcept>

#include "parallel.hpp"

namespace mixvol::appendix {

void Params::validate() const {
  if (n < 4) throw std::invalid_argument("appendix lab needs n >= 4");
  if (!(t > 0)) throw std::invalid_argument("t must be positive");
  if (static_cast<int>(v.size()) != n - 2)
    throw std::invalid_argument("v must have n-2 entries (v_2..v_{n-1})");
  if (std::all_of(v.begin(), v.end(), [](double x) { return x == 0; }))
    throw std::invalid_argument("v must be nonzero");
}

namespace {

// x[0] is x_1; x[k] for k >= 1 is x_{k+1} with weight k+1.
template <class S>
S f_generic(const S* x, int m) {
  S s = 0;
  for (int k = 1; k < m; ++k) s += x[k] * x[k] * x[k] + static_cast<double>(k + 1) * x[k];
  return (x[0] - 1.0) * std::exp(s);
}

template <class S>
S q_generic(const S* a, int len, double t) {
  const int m = len - 1;
  S sum = 0;
  for (int i = 0; i < m; ++i) sum += a[i] * a[i];
  const S z = a[m] - t * f_generic(a, m);
  return sum + z * z - 1.0;
}

double max_abs(const std::array<double, 3>& r) {
  return std::max({std::abs(r[0]), std::abs(r[1]), std::abs(r[2])});
}

void check_point(const Vec& a, const Params& p) {
  if (a.size() != p.n - 1) throw std::invalid_argument("point must have n-1 coordinates");
}

// Orthonormal basis of g^perp via the Householder reflection of e_1.
Mat complement(const Vec& g) {
  const long n = g.size();
  Vec w = Vec::Unit(n, 0) - g.normalized();
  Mat h = Mat::Identity(n, n);
  if (w.norm() > 1e-12) h -= 2 * w * w.transpose() / w.squaredNorm();
  return h.rightCols(n - 1);
}

std::vector<Vec> sphere_directions(int dim, int count) {
  std::vector<Vec> out;
  if (dim == 3) {
    const double golden = std::numbers::pi * (3 - std::sqrt(5.0));
    for (int i = 0; i < count; ++i) {
      const double y = 1 - 2 * (i + 0.5) / count;
      const double r = std::sqrt(1 - y * y);
      Vec d(3);
      d << r * std::cos(golden * i), r * std::sin(golden * i), y;
      out.push_back(d);
    }
    return out;
  }
  std::mt19937_64 rng(0x5eed);
  std::normal_distribution<double> g;
  for (int i = 0; i < count; ++i) {
    Vec d(dim);
    for (int k = 0; k < dim; ++k) d(k) = g(rng);
    out.push_back(d.normalized());
  }
  return out;
}

}  // namespace

double f_value(const Vec& x) { return f_generic(x.data(), static_cast<int>(x.size())); }

Vec f_gradient(const Vec& x) {
  const int m = static_cast<int>(x.size());
  double s = 0;
  for (int k = 1; k < m; ++k) s += x(k) * x(k) * x(k) + (k + 1) * x(k);
  const double e = std::exp(s), f = (x(0) - 1) * e;
  Vec g(m);
  g(0) = e;
  for (int k = 1; k < m; ++k) g(k) = f * (3 * x(k) * x(k) + (k + 1));
  return g;
}

Mat f_hessian(const Vec& x) {
  const int m = static_cast<int>(x.size());
  const double f = f_value(x);
  const double e = f_gradient(x)(0);
  Vec c(m);
  c(0) = 0;
  for (int k = 1; k < m; ++k) c(k) = 3 * x(k) * x(k) + (k + 1);
  Mat h = f * c * c.transpose();
  for (int k = 1; k < m; ++k) {
    h(k, k) += 6 * f * x(k);
    h(0, k) = h(k, 0) = e * c(k);
  }
  h(0, 0) = 0;
  return h;
}

double defining_function(const Vec& a, double t) {
  return q_generic(a.data(), static_cast<int>(a.size()), t);
}

Mat defining_hessian(const Vec& a, double t) {
  const int m = static_cast<int>(a.size()) - 1;
  const Vec x = a.head(m);
  const Vec df = f_gradient(x);
  const Mat d2f = f_hessian(x);
  const double z = a(m) - t * f_value(x);
  Mat h = Mat::Zero(m + 1, m + 1);
  h.topLeftCorner(m, m) =
      2 * Mat::Identity(m, m) + 2 * t * t * df * df.transpose() - 2 * z * t * d2f;
  h.block(0, m, m, 1) = -2 * t * df;
  h.block(m, 0, 1, m) = -2 * t * df.transpose();
  h(m, m) = 2;
  return h;
}

std::array<double, 3> residual_system(const Vec& a, const Params& p) {
  check_point(a, p);
  const int m = p.n - 2;
  const Vec x = a.head(m);
  const double f = f_value(x);
  const Vec df = f_gradient(x);
  const double z = a(m) - p.t * f;
  double sphere = x.squaredNorm() + z * z - 1;
  double linear = 0, dir = 0;
  for (int k = 0; k <= m - 1; ++k) linear += p.v[k] * a(k + 1);
  for (int k = 0; k <= m - 2; ++k) dir += p.v[k] * df(k + 1);
  return {sphere, linear, dir * z + p.v[m - 1] * f};
}

Mat residual_jacobian(const Vec& a, const Params& p) {
  check_point(a, p);
  const int m = p.n - 2;
  const Vec x = a.head(m);
  const double f = f_value(x);
  const Vec df = f_gradient(x);
  const Mat d2f = f_hessian(x);
  const double z = a(m) - p.t * f;
  double dir = 0;
  Vec ddir = Vec::Zero(m);
  for (int k = 0; k <= m - 2; ++k) {
    dir += p.v[k] * df(k + 1);
    ddir += p.v[k] * d2f.col(k + 1);
  }
  Mat j = Mat::Zero(3, m + 1);
  for (int i = 0; i < m; ++i) {
    j(0, i) = 2 * x(i) - 2 * z * p.t * df(i);
    j(2, i) = ddir(i) * z - dir * p.t * df(i) + p.v[m - 1] * df(i);
  }
  j(0, m) = 2 * z;
  for (int k = 0; k <= m - 1; ++k) j(1, k + 1) = p.v[k];
  j(2, m) = dir;
  return j;
}

std::array<Rational, 3> residual_system_exact(const RVec& a, const RVec& v, const Rational& t) {
  const int m = static_cast<int>(a.size()) - 1;
  if (m < 2 || static_cast<int>(v.size()) != m) throw std::invalid_argument("need |v| = |a| - 1 >= 2");
  if (!(t > 0)) throw std::invalid_argument("t must be positive");
  Rational s = 0;
  for (int k = 1; k < m; ++k) s += a[k] * a[k] * a[k] + (k + 1) * a[k];
  if (s != 0) throw std::domain_error("exp of a nonzero rational is irrational");
  // exp(s) = 1.
  const Rational f = a[0] - 1;
  std::vector<Rational> df(m);
  df[0] = 1;
  for (int k = 1; k < m; ++k) df[k] = f * (3 * a[k] * a[k] + (k + 1));
  const Rational z = a[m] - t * f;
  Rational sphere = z * z - 1, linear = 0, dir = 0;
  for (int k = 0; k < m; ++k) sphere += a[k] * a[k];
  for (int k = 0; k <= m - 1; ++k) linear += v[k] * a[k + 1];
  for (int k = 0; k <= m - 2; ++k) dir += v[k] * df[k + 1];
  return {sphere, linear, dir * z + v[m - 1] * f};
}

double parallelism_residual(const Vec& a, const Params& p) {
  check_point(a, p);
  const int m = p.n - 2;
  const Vec x = a.head(m);
  const Vec df = f_gradient(x);
  const double z = a(m) - p.t * f_value(x);
  Vec gamma(m + 1);
  for (int i = 0; i < m; ++i) gamma(i) = a(i) - z * p.t * df(i);
  gamma(m) = z;

  constexpr double h = 1e-30;
  Vec grad(m + 1);
  std::vector<std::complex<double>> c(a.data(), a.data() + a.size());
  for (int i = 0; i <= m; ++i) {
    c[i] += std::complex<double>(0, h);
    grad(i) = q_generic(c.data(), m + 1, p.t).imag() / h;
    c[i] = a(i);
  }
  const Vec g = grad.normalized(), gh = gamma.normalized();
  return (g - g.dot(gh) * gh).norm();
}

Vec gamma_map(const Vec& a, const Params& p) {
  check_point(a, p);
  const int m = p.n - 2;
  const Vec x = a.head(m);
  const Vec df = f_gradient(x);
  const double z = a(m) - p.t * f_value(x);
  Vec gamma(m + 1);
  for (int i = 0; i < m; ++i) gamma(i) = a(i) - z * p.t * df(i);
  gamma(m) = z;
  if (gamma.norm() > 0 && parallelism_residual(a, p) > 1e-8)
    throw VerificationError("Gamma(a) is not parallel to the normal of M");
  return gamma;
}

Vec boundary_point(const Vec& d, double t) {
  const Vec u = d.normalized();
  if (defining_function(Vec::Zero(u.size()), t) >= 0)
    throw std::invalid_argument("origin is not interior to M");
  double lo = 0, hi = 1;
  while (defining_function(hi * u, t) < 0) {
    lo = hi;
    hi *= 2;
    if (hi > 64) throw std::domain_error("M is unbounded along the ray");
  }
  for (int i = 0; i < 200 && hi - lo > 1e-17; ++i) {
    const double mid = (lo + hi) / 2;
    (defining_function(mid * u, t) < 0 ? lo : hi) = mid;
  }
  return (lo + hi) / 2 * u;
}

ConvexityCheck convexity_precheck(const Params& p, int samples) {
  p.validate();
  ConvexityCheck c;
  c.samples = samples;
  c.min_curvature = INFINITY;
  for (const Vec& d : sphere_directions(p.n - 1, samples)) {
    const Vec a = boundary_point(d, p.t);
    Vec grad(a.size());
    const int m = p.n - 2;
    const Vec df = f_gradient(a.head(m));
    const double z = a(m) - p.t * f_value(a.head(m));
    for (int i = 0; i < m; ++i) grad(i) = 2 * (a(i) - z * p.t * df(i));
    grad(m) = 2 * z;
    const Mat b = complement(grad);
    const Mat t = b.transpose() * defining_hessian(a, p.t) * b / grad.norm();
    c.min_curvature = std::min(
        c.min_curvature, Eigen::SelfAdjointEigenSolver<Mat>(t, Eigen::EigenvaluesOnly).eigenvalues()(0));
  }
  c.strictly_convex = c.min_curvature > 0;
  return c;
}

namespace {

struct NewtonResult {
  Vec a;
  double residual = INFINITY;
  bool converged = false;
};

NewtonResult newton(Vec a, const Params& p) {
  NewtonResult out;
  for (int it = 0; it < 200; ++it) {
    const auto r = residual_system(a, p);
    const double res = max_abs(r);
    if (!std::isfinite(res) || a.norm() > 1e3) return out;
    if (res < 1e-15) break;
    const Vec rv = Eigen::Map<const Eigen::Vector3d>(r.data());
    const Vec step = residual_jacobian(a, p).completeOrthogonalDecomposition().solve(-rv);
    a += step;
    if (step.norm() < 1e-16 * (1 + a.norm())) break;
  }
  out.a = a;
  out.residual = max_abs(residual_system(a, p));
  out.converged = out.residual < 1e-12;
  return out;
}

}  // namespace

ProbeReport dimension_probe(const Params& p, int seeds, std::uint64_t seed, Execution exec) {
  p.validate();
  if (seeds < 1) throw std::invalid_argument("seeds must be positive");
  ProbeReport rep;
  rep.params = p;
  rep.seeds = seeds;
  rep.convexity = convexity_precheck(p);

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> box(-1, 1);
  std::vector<Vec> starts;
  for (int s = 0; s < seeds; ++s) {
    Vec a(p.n - 1);
    for (int i = 0; i < p.n - 1; ++i) a(i) = box(rng);
    starts.push_back(a);
  }
  std::vector<NewtonResult> results(static_cast<std::size_t>(seeds));
  detail::parallel_for(exec, seeds, [&](long s) { results[s] = newton(starts[s], p); });

  constexpr double kRadius = 1e-6;
  std::vector<Vec> accepted;
  for (const auto& r : results) {
    if (!r.converged) {
      ++rep.diverged;
      continue;
    }
    ++rep.converged;
    accepted.push_back(r.a);
    auto hit = std::find_if(rep.clusters.begin(), rep.clusters.end(),
                            [&](const Cluster& c) { return (c.a - r.a).norm() <= kRadius; });
    if (hit != rep.clusters.end()) {
      ++hit->members;
    } else {
      rep.clusters.push_back({r.a, r.residual, 1});
    }
  }
  std::sort(rep.clusters.begin(), rep.clusters.end(), [](const Cluster& x, const Cluster& y) {
    return std::lexicographical_compare(x.a.data(), x.a.data() + x.a.size(), y.a.data(),
                                        y.a.data() + y.a.size());
  });
  rep.divergence_warning = rep.diverged > 0.8 * seeds;
  rep.box_dim = box_counting_slope(accepted);
  return rep;
}

double box_counting_slope(const std::vector<Vec>& points) {
  if (points.empty()) return 0;
  std::vector<double> xs, ys;
  for (int k = 4; k <= 12; ++k) {
    const double side = std::ldexp(1.0, -k);
    std::set<std::vector<long>> boxes;
    for (const Vec& p : points) {
      std::vector<long> key;
      for (long i = 0; i < p.size(); ++i) key.push_back(static_cast<long>(std::floor(p(i) / side)));
      boxes.insert(std::move(key));
    }
    xs.push_back(k * std::log(2.0));
    ys.push_back(std::log(static_cast<double>(boxes.size())));
  }
  const double n = static_cast<double>(xs.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sx += xs[i];
    sy += ys[i];
    sxx += xs[i] * xs[i];
    sxy += xs[i] * ys[i];
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

BodyLSample body_L_sample(const Params& p, int resolution) {
  p.validate();
  if (p.n != 4) throw std::invalid_argument("body_L_sample supports n = 4 only");
  if (resolution > 10000) throw std::invalid_argument("resolution too large");
  if (resolution < 8) throw std::invalid_argument("resolution too small");
  constexpr int kBits = 20;
  std::vector<RVec> pts;
  auto push = [&](const Vec& x, int last) {
    RVec q;
    for (long i = 0; i < x.size(); ++i) q.push_back(dyadic_round(x(i), kBits));
    if (q[0] >= 1 - Rational(1, 1000000)) return;  // only the exact e_1 may touch <e_1,.> = 1
    q.emplace_back(last);
    pts.push_back(std::move(q));
  };
  for (const Vec& d : sphere_directions(3, resolution / 2)) {
    push(boundary_point(d, p.t), -1);
    push(d, 1);
  }
  pts.push_back({1, 0, 0, -1});
  pts.push_back({1, 0, 0, 1});

  BodyLSample out{Polytope::hull(pts, 4)};
  const RVec lo = {1, 0, 0, -1}, hi = {1, 0, 0, 1};
  const auto& verts = out.body.vertices();
  out.segment_vertices = std::find(verts.begin(), verts.end(), lo) != verts.end() &&
                         std::find(verts.begin(), verts.end(), hi) != verts.end();
  out.origin_interior = out.body.interior_contains(zeros(4));
  const Face face = out.body.exposed_face(unit_vector(4, 0));
  std::vector<RVec> fv;
  for (int i : face.vertices) fv.push_back(verts[i]);
  std::sort(fv.begin(), fv.end());
  out.e1_face_is_segment = fv == std::vector<RVec>{lo, hi};
  return out;
}

}  // namespace mixvol::appendix
