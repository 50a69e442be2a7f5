#pragma once

#include <Eigen/Dense>
#include <functional>
#include <string>
#include <vector>

#include "mixvol/common.hpp"

namespace mixvol::smooth {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

inline constexpr double kRankThreshold = 1e-8;
inline constexpr double kFdStep = 1e-5;
inline constexpr double kPsdFloor = -1e-10;

/// Real symmetric matrix. Construction symmetrizes and rejects inputs that
/// are not symmetric up to rounding.
class SymmetricMatrix {
 public:
  explicit SymmetricMatrix(const Mat& m);
  static SymmetricMatrix identity(int m) { return SymmetricMatrix(Mat::Identity(m, m)); }
  static SymmetricMatrix diagonal(const std::vector<double>& d);

  int order() const { return static_cast<int>(m_.rows()); }
  const Mat& matrix() const { return m_; }
  double min_eigenvalue() const;
  bool is_psd() const { return min_eigenvalue() >= kPsdFloor; }
  /// Number of singular values above kRankThreshold.
  int rank() const;

 private:
  Mat m_;
};

/// D_m(M_1..M_m) = (1/m!) sum over permutations s of det[M_{s(1)} col 1 | ... | M_{s(m)} col m].
/// Requires m <= 4 matrices of order m.
double mixed_discriminant(const std::vector<SymmetricMatrix>& ms);

struct PanovVerdict {
  bool zero = false;
  std::string reason;
  double d2 = 0;
};

/// D_2(M_1,M_2) = 0 for PSD M_i iff one is 0 or both have rank 1 with the same
/// kernel. Throws std::invalid_argument on non-PSD input, VerificationError if
/// the criterion disagrees with |D_2| < 1e-10.
PanovVerdict panov_zero(const SymmetricMatrix& m1, const SymmetricMatrix& m2);

/// A C^2 function on an open subset of R^n. Value and gradient are closed
/// form; the Hessian is closed form when given, else central differences of
/// the gradient with step kFdStep.
class SmoothFunction {
 public:
  using Scalar = std::function<double(const Vec&)>;
  using Gradient = std::function<Vec(const Vec&)>;
  using Hessian = std::function<Mat(const Vec&)>;

  SmoothFunction(std::string name, int dim, Scalar value, Gradient gradient,
                 Hessian hessian = nullptr);

  const std::string& name() const { return name_; }
  int dim() const { return dim_; }
  double value(const Vec& x) const { return value_(x); }
  Vec gradient(const Vec& x) const { return gradient_(x); }
  Mat hessian(const Vec& x) const;
  Mat fd_hessian(const Vec& x) const;
  bool has_closed_hessian() const { return static_cast<bool>(hessian_); }
  /// The same function with the closed-form Hessian dropped.
  SmoothFunction finite_difference() const;

 private:
  std::string name_;
  int dim_;
  Scalar value_;
  Gradient gradient_;
  Hessian hessian_;
};

/// Orthonormal basis of u^perp (columns): the Householder reflection taking
/// e_1 to u/|u|, minus its first column.
Mat orthonormal_complement(const Vec& u);

/// D_{n-1}(D^2 h_1(u)|_{u^perp}, ...). Requires |u| = 1 and n-1 support
/// functions on R^n passing h(2u) = 2h(u); std::invalid_argument otherwise.
double smooth_density(const std::vector<SmoothFunction>& h, const Vec& u);

/// rank(D^2 h_I(u)|_{u^perp}) >= |I| for all nonempty I, h_I = sum of h_i.
bool rank_classify(const std::vector<SmoothFunction>& h, const Vec& u);

struct Box2 {
  double lo[2];
  double hi[2];
  bool interior_contains(const Vec& x) const;
};

struct GridValue {
  double x1, x2, residual;
  /// Angle in [0, pi) of the least eigenvector of the sum of the normalized
  /// nonzero Hessians; NaN when both vanish.
  double ruling_dir;
};

/// D_2(Hess f, Hess g) at the nodes of an nx by ny grid spanning the closed box.
std::vector<GridValue> mixed_ma_residual(const SmoothFunction& f, const SmoothFunction& g,
                                         const Box2& box, int nx, int ny,
                                         Execution exec = Execution::parallel);

struct SmoothRuling {
  Vec direction;  // unit, largest-magnitude coordinate positive
  Vec a, b;       // where the line through x leaves the box
  double max_second_derivative = 0;
};

/// Common kernel line of Hess f(x) and Hess g(x), traced to the boundary of D.
/// Throws std::invalid_argument if the residual is not ~0 on D or x lies in R,
/// VerificationError if there is no common kernel or f, g bend along the line.
SmoothRuling hn_ruling(const SmoothFunction& f, const SmoothFunction& g, const Box2& d,
                       const Vec& x);

/// Named examples: "norm2sq", "harmonic", "cylinder", "crease_h", "crease_f",
/// "crease_g" on R^2 and the support functions "ball", "ball2", "disk",
/// "ellipsoid", "smoothed_octahedron" on R^3.
std::vector<std::string> registry_names();
SmoothFunction registry(const std::string& name);

}  // namespace mixvol::smooth
