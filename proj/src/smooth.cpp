#include "mixvol/smooth.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include "parallel.hpp"

namespace mixvol::smooth {

SymmetricMatrix::SymmetricMatrix(const Mat& m) {
  if (m.rows() != m.cols() || m.rows() == 0) throw std::invalid_argument("matrix is not square");
  const double asym = (m - m.transpose()).cwiseAbs().maxCoeff();
  if (asym > 1e-9 * (1 + m.cwiseAbs().maxCoeff()))
    throw std::invalid_argument("matrix is not symmetric");
  m_ = (m + m.transpose()) / 2;
}

SymmetricMatrix SymmetricMatrix::diagonal(const std::vector<double>& d) {
  Mat m = Mat::Zero(static_cast<long>(d.size()), static_cast<long>(d.size()));
  for (std::size_t i = 0; i < d.size(); ++i) m(static_cast<long>(i), static_cast<long>(i)) = d[i];
  return SymmetricMatrix(m);
}

double SymmetricMatrix::min_eigenvalue() const {
  return Eigen::SelfAdjointEigenSolver<Mat>(m_, Eigen::EigenvaluesOnly).eigenvalues()(0);
}

int SymmetricMatrix::rank() const {
  const Vec ev = Eigen::SelfAdjointEigenSolver<Mat>(m_, Eigen::EigenvaluesOnly).eigenvalues();
  return static_cast<int>((ev.array().abs() > kRankThreshold).count());
}

double mixed_discriminant(const std::vector<SymmetricMatrix>& ms) {
  const int m = static_cast<int>(ms.size());
  if (m == 0 || m > 4) throw std::invalid_argument("mixed discriminant of 1..4 matrices");
  for (const auto& a : ms)
    if (a.order() != m) throw std::invalid_argument("matrix order must equal the count");
  std::vector<int> perm(static_cast<std::size_t>(m));
  std::iota(perm.begin(), perm.end(), 0);
  double sum = 0;
  int count = 0;
  Mat cols(m, m);
  do {
    for (int j = 0; j < m; ++j) cols.col(j) = ms[perm[j]].matrix().col(j);
    sum += cols.determinant();
    ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return sum / count;
}

PanovVerdict panov_zero(const SymmetricMatrix& m1, const SymmetricMatrix& m2) {
  if (m1.order() != 2 || m2.order() != 2) throw std::invalid_argument("order 2 matrices expected");
  if (!m1.is_psd() || !m2.is_psd()) throw std::invalid_argument("matrix is not PSD");
  PanovVerdict v;
  v.d2 = mixed_discriminant({m1, m2});
  const int r1 = m1.rank(), r2 = m2.rank();
  if (r1 == 0 || r2 == 0) {
    v.zero = true;
    v.reason = r1 == 0 ? "first matrix is zero" : "second matrix is zero";
  } else if (r1 == 1 && r2 == 1) {
    Eigen::SelfAdjointEigenSolver<Mat> es(m1.matrix());
    const Vec k = es.eigenvectors().col(0);
    v.zero = (m2.matrix() * k).norm() <= kRankThreshold * (1 + m2.matrix().norm());
    v.reason = v.zero ? "rank one with a shared kernel" : "rank one with different kernels";
  } else {
    v.reason = "a factor has full rank";
  }
  if (v.zero != (std::abs(v.d2) < 1e-10))
    throw VerificationError("kernel criterion disagrees with the mixed discriminant");
  return v;
}

SmoothFunction::SmoothFunction(std::string name, int dim, Scalar value, Gradient gradient,
                               Hessian hessian)
    : name_(std::move(name)),
      dim_(dim),
      value_(std::move(value)),
      gradient_(std::move(gradient)),
      hessian_(std::move(hessian)) {
  if (!value_ || !gradient_) throw std::invalid_argument("value and gradient are required");
}

Mat SmoothFunction::hessian(const Vec& x) const {
  return hessian_ ? hessian_(x) : fd_hessian(x);
}

Mat SmoothFunction::fd_hessian(const Vec& x) const {
  Mat h(dim_, dim_);
  for (int j = 0; j < dim_; ++j) {
    Vec xp = x, xm = x;
    xp(j) += kFdStep;
    xm(j) -= kFdStep;
    h.col(j) = (gradient_(xp) - gradient_(xm)) / (2 * kFdStep);
  }
  return (h + h.transpose()) / 2;
}

SmoothFunction SmoothFunction::finite_difference() const {
  return SmoothFunction(name_, dim_, value_, gradient_, nullptr);
}

Mat orthonormal_complement(const Vec& u) {
  const long n = u.size();
  const Vec w = u / u.norm();
  Vec v = Vec::Unit(n, 0) - w;
  Mat h = Mat::Identity(n, n);
  if (v.norm() > 1e-12) h -= 2 * v * v.transpose() / v.squaredNorm();
  return h.rightCols(n - 1);
}

namespace {

void check_support_inputs(const std::vector<SmoothFunction>& h, const Vec& u) {
  const long n = u.size();
  if (static_cast<long>(h.size()) != n - 1)
    throw std::invalid_argument("need n-1 support functions on R^n");
  if (std::abs(u.norm() - 1) > 1e-9) throw std::invalid_argument("u must be a unit vector");
  for (const auto& f : h) {
    if (f.dim() != n) throw std::invalid_argument("support function dimension mismatch");
    const double a = f.value(u), b = f.value(2 * u);
    if (std::abs(b - 2 * a) > 1e-9 * (1 + std::abs(a)))
      throw std::invalid_argument(f.name() + " is not positively 1-homogeneous");
  }
}

SymmetricMatrix restricted_hessian(const SmoothFunction& f, const Vec& u, const Mat& basis) {
  return SymmetricMatrix(basis.transpose() * f.hessian(u) * basis);
}

}  // namespace

double smooth_density(const std::vector<SmoothFunction>& h, const Vec& u) {
  check_support_inputs(h, u);
  const Mat basis = orthonormal_complement(u);
  std::vector<SymmetricMatrix> ms;
  for (const auto& f : h) ms.push_back(restricted_hessian(f, u, basis));
  return mixed_discriminant(ms);
}

bool rank_classify(const std::vector<SmoothFunction>& h, const Vec& u) {
  check_support_inputs(h, u);
  const Mat basis = orthonormal_complement(u);
  std::vector<Mat> rs;
  for (const auto& f : h) rs.push_back(restricted_hessian(f, u, basis).matrix());
  const int m = static_cast<int>(h.size());
  for (unsigned mask = 1; mask < (1u << m); ++mask) {
    Mat sum = Mat::Zero(m, m);
    for (int i = 0; i < m; ++i)
      if (mask & (1u << i)) sum += rs[i];
    if (SymmetricMatrix(sum).rank() < __builtin_popcount(mask)) return false;
  }
  return true;
}

bool Box2::interior_contains(const Vec& x) const {
  return x.size() == 2 && x(0) > lo[0] && x(0) < hi[0] && x(1) > lo[1] && x(1) < hi[1];
}

namespace {

double kernel_angle(const Mat& hf, const Mat& hg) {
  Mat s = Mat::Zero(2, 2);
  for (const Mat* h : {&hf, &hg})
    if (h->norm() >= 1e-7) s += *h / h->norm();
  if (s.norm() == 0) return std::nan("");
  const Vec k = Eigen::SelfAdjointEigenSolver<Mat>(s).eigenvectors().col(0);
  double a = std::atan2(k(1), k(0));
  if (a < 0) a += std::numbers::pi;
  if (a >= std::numbers::pi) a -= std::numbers::pi;
  return a;
}

}  // namespace

std::vector<GridValue> mixed_ma_residual(const SmoothFunction& f, const SmoothFunction& g,
                                         const Box2& box, int nx, int ny, Execution exec) {
  if (f.dim() != 2 || g.dim() != 2) throw std::invalid_argument("planar functions expected");
  if (nx < 2 || ny < 2) throw std::invalid_argument("grid needs at least 2 nodes per axis");
  std::vector<GridValue> out(static_cast<std::size_t>(nx) * ny);
  detail::parallel_for(exec, static_cast<long>(out.size()), [&](long k) {
    const int i = static_cast<int>(k % nx), j = static_cast<int>(k / nx);
    Vec x(2);
    x << box.lo[0] + (box.hi[0] - box.lo[0]) * i / (nx - 1),
        box.lo[1] + (box.hi[1] - box.lo[1]) * j / (ny - 1);
    const Mat hf = f.hessian(x), hg = g.hessian(x);
    const double r = mixed_discriminant({SymmetricMatrix(hf), SymmetricMatrix(hg)});
    out[k] = {x(0), x(1), r, kernel_angle(hf, hg)};
  });
  return out;
}

SmoothRuling hn_ruling(const SmoothFunction& f, const SmoothFunction& g, const Box2& d,
                       const Vec& x) {
  constexpr double kResidualTol = 1e-6;
  constexpr double kFlatTol = 1e-7;
  constexpr double kNeighbourhood = 1e-3;
  Box2 inner = d;
  for (int i = 0; i < 2; ++i) {
    const double margin = kNeighbourhood * (d.hi[i] - d.lo[i]);
    inner.lo[i] += margin;
    inner.hi[i] -= margin;
  }
  for (const auto& v : mixed_ma_residual(f, g, inner, 21, 21, Execution::serial))
    if (std::abs(v.residual) > kResidualTol)
      throw std::invalid_argument("mixed Monge-Ampere residual nonzero on D");
  if (!d.interior_contains(x)) throw std::invalid_argument("x not in D");

  bool f_flat = true, g_flat = true;
  for (int i = -1; i <= 1; ++i)
    for (int j = -1; j <= 1; ++j) {
      Vec y = x;
      y(0) += i * kNeighbourhood;
      y(1) += j * kNeighbourhood;
      f_flat = f_flat && f.hessian(y).norm() < kFlatTol;
      g_flat = g_flat && g.hessian(y).norm() < kFlatTol;
    }
  if (f_flat || g_flat) throw std::invalid_argument("x in R");

  Mat s = Mat::Zero(2, 2);
  for (const Mat& h : {f.hessian(x), g.hessian(x)})
    if (h.norm() >= kFlatTol) s += h / h.norm();
  if (s.norm() == 0) throw VerificationError("both Hessians vanish at x");
  Eigen::SelfAdjointEigenSolver<Mat> es(s);
  if (std::abs(es.eigenvalues()(0)) > kResidualTol)
    throw VerificationError("Hessians of f and g have no common kernel at x");

  SmoothRuling r;
  r.direction = es.eigenvectors().col(0).normalized();
  Eigen::Index big;
  r.direction.cwiseAbs().maxCoeff(&big);
  if (r.direction(big) < 0) r.direction = -r.direction;

  double t_lo = -INFINITY, t_hi = INFINITY;
  for (int i = 0; i < 2; ++i) {
    const double di = r.direction(i);
    if (std::abs(di) < 1e-15) continue;
    const double t1 = (d.lo[i] - x(i)) / di, t2 = (d.hi[i] - x(i)) / di;
    t_lo = std::max(t_lo, std::min(t1, t2));
    t_hi = std::min(t_hi, std::max(t1, t2));
  }
  r.a = x + t_lo * r.direction;
  r.b = x + t_hi * r.direction;

  for (int k = 0; k < 50; ++k) {
    const Vec p = x + (t_lo + (k + 0.5) / 50 * (t_hi - t_lo)) * r.direction;
    for (const auto* h : {&f, &g})
      r.max_second_derivative = std::max(
          r.max_second_derivative, std::abs(r.direction.dot(h->hessian(p) * r.direction)));
  }
  if (r.max_second_derivative > kResidualTol)
    throw VerificationError("f or g bends along the ruling");
  return r;
}

namespace {

Vec v2(double a, double b) {
  Vec v(2);
  v << a, b;
  return v;
}

Mat m2(double a, double b, double c) {
  Mat m(2, 2);
  m << a, b, b, c;
  return m;
}

// h = x1^2 / (1 - x2^2); s = 1/(1-x2^2).
double crease_value(const Vec& x) { return x(0) * x(0) / (1 - x(1) * x(1)); }
Vec crease_gradient(const Vec& x) {
  const double w = 1 - x(1) * x(1);
  return v2(2 * x(0) / w, 2 * x(0) * x(0) * x(1) / (w * w));
}
Mat crease_hessian(const Vec& x) {
  const double w = 1 - x(1) * x(1);
  return m2(2 / w, 4 * x(0) * x(1) / (w * w), x(0) * x(0) * (2 + 6 * x(1) * x(1)) / (w * w * w));
}

// Support function sqrt(u^T A u) of the ellipsoid with semi-axes sqrt(diag A).
SmoothFunction quadratic_support(std::string name, const Vec& diag) {
  const Mat a = diag.asDiagonal();
  auto value = [a](const Vec& u) { return std::sqrt(u.dot(a * u)); };
  auto grad = [a](const Vec& u) -> Vec { return a * u / std::sqrt(u.dot(a * u)); };
  auto hess = [a](const Vec& u) -> Mat {
    const double h = std::sqrt(u.dot(a * u));
    const Vec au = a * u;
    return (a - au * au.transpose() / (h * h)) / h;
  };
  return SmoothFunction(std::move(name), static_cast<int>(diag.size()), value, grad, hess);
}

SmoothFunction make(const std::string& name) {
  if (name == "norm2sq")
    return SmoothFunction(
        name, 2, [](const Vec& x) { return x.squaredNorm(); },
        [](const Vec& x) -> Vec { return 2 * x; }, [](const Vec&) -> Mat { return m2(2, 0, 2); });
  if (name == "harmonic")
    return SmoothFunction(
        name, 2, [](const Vec& x) { return x(0) * x(0) - x(1) * x(1); },
        [](const Vec& x) -> Vec { return v2(2 * x(0), -2 * x(1)); },
        [](const Vec&) -> Mat { return m2(2, 0, -2); });
  if (name == "cylinder")
    return SmoothFunction(
        name, 2, [](const Vec& x) { return x(0) * x(0); },
        [](const Vec& x) -> Vec { return v2(2 * x(0), 0); },
        [](const Vec&) -> Mat { return m2(2, 0, 0); });
  if (name == "crease_h") return SmoothFunction(name, 2, crease_value, crease_gradient, crease_hessian);
  if (name == "crease_f" || name == "crease_g") {
    // Closed indicators: both one-sided pieces are kept on the crease x1 = 0,
    // where h and its gradient vanish.
    const double side = name == "crease_f" ? 1 : -1;
    auto on = [side](const Vec& x) { return side * x(0) >= 0; };
    return SmoothFunction(
        name, 2, [on](const Vec& x) { return on(x) ? crease_value(x) : 0.0; },
        [on](const Vec& x) -> Vec { return on(x) ? crease_gradient(x) : v2(0, 0); },
        [on](const Vec& x) -> Mat { return on(x) ? crease_hessian(x) : m2(0, 0, 0); });
  }
  if (name == "ball") return quadratic_support(name, Vec::Ones(3));
  if (name == "ball2") return quadratic_support(name, 4 * Vec::Ones(3));
  if (name == "ellipsoid") {
    Vec d(3);
    d << 1, 0.25, 4;
    return quadratic_support(name, d);
  }
  if (name == "disk") {
    // The unit disk in the x1x2-plane: h(u) = |(u1,u2)|.
    auto value = [](const Vec& u) { return std::hypot(u(0), u(1)); };
    auto grad = [](const Vec& u) -> Vec {
      const double r = std::hypot(u(0), u(1));
      Vec g(3);
      g << u(0) / r, u(1) / r, 0;
      return g;
    };
    auto hess = [](const Vec& u) -> Mat {
      const double r = std::hypot(u(0), u(1));
      Mat h = Mat::Zero(3, 3);
      h.topLeftCorner(2, 2) = m2(u(1) * u(1), -u(0) * u(1), u(0) * u(0)) / (r * r * r);
      return h;
    };
    return SmoothFunction(name, 3, value, grad, hess);
  }
  if (name == "smoothed_octahedron") {
    // h(u) = |u|_4, the support function of the unit ball of the 4/3-norm.
    auto value = [](const Vec& u) { return std::pow(u.array().pow(4).sum(), 0.25); };
    auto grad = [value](const Vec& u) -> Vec {
      const double h = value(u);
      return u.array().pow(3).matrix() / std::pow(h, 3);
    };
    return SmoothFunction(name, 3, value, grad);
  }
  throw std::invalid_argument("unknown function '" + name + "'");
}

}  // namespace

std::vector<std::string> registry_names() {
  return {"ball",     "ball2",    "crease_f", "crease_g", "crease_h",           "cylinder",
          "disk",     "ellipsoid", "harmonic", "norm2sq", "smoothed_octahedron"};
}

SmoothFunction registry(const std::string& name) { return make(name); }

}  // namespace mixvol::smooth
