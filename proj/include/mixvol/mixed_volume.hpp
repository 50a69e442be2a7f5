#pragma once

#include <map>
#include <optional>
#include <vector>

#include "mixvol/common.hpp"
#include "mixvol/polytope.hpp"

namespace mixvol {

/// Finite atomic measure on S^{n-1}. The atom at ray w has true mass q*|w|,
/// so integrating a support function gives sum q*h(w), which stays rational.
class SphereMeasure {
 public:
  explicit SphereMeasure(int n = 0) : n_(n) {}

  int ambient_dim() const { return n_; }
  /// Accumulates q at w; atoms whose scale becomes zero are removed.
  void add(const Direction& w, const Rational& q);
  const std::map<Direction, Rational>& atoms() const { return atoms_; }
  Rational scale_at(const Direction& w) const;
  std::vector<Direction> support() const;
  bool empty() const { return atoms_.empty(); }
  SphereMeasure scaled(const Rational& s) const;

  friend bool operator==(const SphereMeasure& a, const SphereMeasure& b) {
    return a.n_ == b.n_ && a.atoms_ == b.atoms_;
  }

 private:
  int n_;
  std::map<Direction, Rational> atoms_;
};

/// V_d(C_1,...,C_d) for d bodies in Q^d, by polarization of volumes of subset sums.
Rational mixed_volume_polarized(const std::vector<Polytope>& bodies);

/// Same value read off from exact interpolation of Vol(l_1 C_1 + ... + l_d C_d)
/// on the points l = a + (1,...,1), |a| = d.
Rational mixed_volume_interpolated(const std::vector<Polytope>& bodies,
                                   Execution exec = Execution::parallel);

struct MixedVolumeReport {
  Rational value;
  Rational method_a;  // interpolation
  Rational method_b;  // (1/n) * integral of h_{C_n} against S_{C_1..C_{n-1}}
};

/// Throws VerificationError if the two methods disagree.
MixedVolumeReport mixed_volume(const std::vector<Polytope>& bodies,
                               Execution exec = Execution::parallel);

/// Scale q of the atom of S_{C_1..C_{n-1}} at u: q*|u| = V_{n-1}(F(C_1,u),...)
/// measured in u^perp. Zero when u carries no atom.
Rational atom_scale(const std::vector<Polytope>& bodies, const Direction& u);

/// S_{C_1..C_{n-1}}, evaluated at every facet direction of C_1+...+C_{n-1}
/// (no other ray can carry mass).
SphereMeasure mixed_area_atoms(const std::vector<Polytope>& bodies,
                               Execution exec = Execution::parallel);

struct Segment {
  RVec a, b;
};

struct PositivityReport {
  bool positive = false;
  /// Segments I_i in C_i with linearly independent directions (when positive).
  std::vector<Segment> segments;
  /// First I (0-based, ordered by size then lexicographically) with
  /// dim(sum_{i in I} C_i) < |I| (when not positive).
  std::vector<int> failing_set;
};

/// Three-way positivity test; throws VerificationError if the segment,
/// dimension and mixed-volume criteria disagree.
PositivityReport positivity(const std::vector<Polytope>& bodies);

/// h_K - h_L, a difference of support functions.
struct SupportDifference {
  Polytope plus;
  Polytope minus;
};

Rational integrate_support(const Polytope& k, const SphereMeasure& s);
Rational integrate_support(const SupportDifference& f, const SphereMeasure& s);

struct MonotonicityReport {
  bool equal = false;
  bool support_agreement = false;
  Rational v_k, v_l;
  /// Atoms of S_C at which h_K and h_L differ.
  std::vector<Direction> disagreements;
};

/// For K in L: V(K,C) = V(L,C) iff h_K = h_L on supp S_C. Throws
/// std::invalid_argument if K is not contained in L.
MonotonicityReport monotonicity_equality(const Polytope& k, const Polytope& l,
                                         const std::vector<Polytope>& c);

struct AFReport {
  Rational lhs;  // V(K,L,C)^2
  Rational rhs;  // V(K,K,C) V(L,L,C)
  bool equality = false;
  /// Set when V(K,L,C) > 0 and lhs == rhs: whether
  /// S_{K,C} = V(K,K,C)/V(K,L,C) * S_{L,C} atom by atom.
  std::optional<bool> equality_measure_match;
};

/// Throws VerificationError if the inequality or the equality statement fails.
AFReport af_check(const Polytope& k, const Polytope& l, const std::vector<Polytope>& c);

struct ProjectionAtom {
  Direction u;
  // Squared masses of (n-1) S_{[0,v],C} and S_{P C} at u, both times |v|^2.
  Rational lhs_sq;
  Rational rhs_sq;
};

struct ProjectionReport {
  int n = 0;
  Direction v;
  /// n V_n([0,v],C_1..C_{n-1}) computed directly and from the projections.
  /// Absent when C has n-2 bodies.
  std::optional<Rational> volume_lhs, volume_rhs;
  std::vector<ProjectionAtom> atoms;
  bool volume_ok = true;
  bool measure_ok = true;
};

/// Checks n V_n([0,v],C_1..C_{n-1}) = V_{n-1}(P C_1,...) when C has n-1
/// bodies, and (n-1) S_{[0,v],C_1..C_{n-2}} = S_{P C_1..P C_{n-2}} (for n >= 3)
/// on the first n-2 bodies. Throws VerificationError on a mismatch.
ProjectionReport projection_identities(const std::vector<Polytope>& c, const Direction& v);

}  // namespace mixvol
