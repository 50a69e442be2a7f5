#pragma once

#include <Eigen/Dense>
#include <array>
#include <cstdint>
#include <vector>

#include "mixvol/common.hpp"
#include "mixvol/polytope.hpp"
#include "mixvol/rational.hpp"

namespace mixvol::appendix {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

/// n >= 4, t > 0 and v = (v_2, ..., v_{n-1}) != 0, stored as v[0] = v_2.
struct Params {
  int n = 4;
  double t = 0.1;
  std::vector<double> v{1, 1};

  /// Throws std::invalid_argument unless the fields are consistent.
  void validate() const;
};

/// f(x) = (x_1 - 1) exp(sum_{j=2}^{n-2} (x_j^3 + j x_j)) for x in R^{n-2}.
double f_value(const Vec& x);
Vec f_gradient(const Vec& x);
Mat f_hessian(const Vec& x);

/// Q(a) = a_1^2 + ... + a_{n-2}^2 + (a_{n-1} - t f(a))^2 - 1; M = {Q <= 0}.
double defining_function(const Vec& a, double t);
Mat defining_hessian(const Vec& a, double t);

/// Residuals of the sphere equation, the linear equation and the product-form
/// third equation at a in R^{n-1}.
std::array<double, 3> residual_system(const Vec& a, const Params& p);
/// 3 x (n-1) Jacobian of residual_system, closed form.
Mat residual_jacobian(const Vec& a, const Params& p);

/// Exact evaluation over the rationals. The exponential factor must be exp(0),
/// i.e. a_2 = ... = a_{n-2} = 0 after the cubic sum cancels; otherwise throws
/// std::domain_error.
std::array<Rational, 3> residual_system_exact(const RVec& a, const RVec& v, const Rational& t);

/// Gamma(a) = (a_j - (a_{n-1} - t f) t d_j f for j <= n-2, a_{n-1} - t f).
/// Throws VerificationError if it is not parallel to grad Q(a) within 1e-8.
Vec gamma_map(const Vec& a, const Params& p);
/// |g - <g,G>G| for the unit vectors G of Gamma(a) and g of grad Q(a), the
/// latter by complex-step differentiation.
double parallelism_residual(const Vec& a, const Params& p);

/// The point of bd M on the ray through d (radial bisection; M is star-shaped
/// about 0 for the admissible t).
Vec boundary_point(const Vec& d, double t);

struct ConvexityCheck {
  bool strictly_convex = false;
  double min_curvature = 0;  // smallest tangential eigenvalue of Hess Q / |grad Q|
  int samples = 0;
};

/// Samples bd M at `samples` Fibonacci directions and checks that Hess Q
/// restricted to the tangent space is positive definite.
ConvexityCheck convexity_precheck(const Params& p, int samples = 1000);

struct Cluster {
  Vec a;
  double residual = 0;  // max-norm of residual_system at a
  int members = 0;
};

struct ProbeReport {
  Params params;
  int seeds = 0;
  int converged = 0;
  int diverged = 0;
  bool divergence_warning = false;  // more than 80% of seeds diverged
  std::vector<Cluster> clusters;
  double box_dim = 0;
  ConvexityCheck convexity;
};

/// Newton refinement of residual_system from `seeds` uniform starts in
/// [-1,1]^{n-1}, clustering at radius 1e-6 and a box-counting slope.
ProbeReport dimension_probe(const Params& p, int seeds, std::uint64_t seed,
                            Execution exec = Execution::parallel);

/// Box-counting slope of a point set over box sides 2^-4 .. 2^-12.
double box_counting_slope(const std::vector<Vec>& points);

struct BodyLSample {
  Polytope body;
  bool segment_vertices = false;  // e_1 - e_n and e_1 + e_n are vertices
  bool origin_interior = false;
  bool e1_face_is_segment = false;  // F(L, e_1) = [e_1 - e_n, e_1 + e_n]
};

/// Rational hull of `resolution` boundary samples of M - e_n and of U + e_n
/// (half each, dyadic coordinates), for n = 4. Rounded samples with first
/// coordinate >= 1 - 1e-6 are dropped; e_1 -+ e_n are added exactly.
BodyLSample body_L_sample(const Params& p, int resolution);

}  // namespace mixvol::appendix
