#pragma once

#include <map>
#include <vector>

#include "mixvol/common.hpp"
#include "mixvol/extremality.hpp"
#include "mixvol/polytope.hpp"

namespace mixvol {

/// The affine function x -> <a,x> - b.
struct AffinePiece {
  RVec a;
  Rational b;
};

/// Closed box [lo_1,hi_1] x ... x [lo_n,hi_n].
struct Box {
  RVec lo, hi;
  int dim() const { return static_cast<int>(lo.size()); }
  bool contains(const RVec& x) const;
  bool interior_contains(const RVec& x) const;
  std::vector<Halfspace> halfspaces() const;
};

/// f = max_i (<a_i,.> - b_i) on R^n, with a box standing in for the domain.
class PiecewiseAffineConvex {
 public:
  PiecewiseAffineConvex(std::vector<AffinePiece> pieces, Box box);

  int dim() const { return static_cast<int>(box_.lo.size()); }
  const std::vector<AffinePiece>& pieces() const { return pieces_; }
  const Box& box() const { return box_; }

  Rational operator()(const RVec& x) const;
  /// Indices of the pieces attaining the max at x.
  std::vector<int> active(const RVec& x) const;

  /// Pointwise sum; pieces are all pairwise sums, the box is this one's.
  friend PiecewiseAffineConvex operator+(const PiecewiseAffineConvex& f,
                                         const PiecewiseAffineConvex& g);

 private:
  std::vector<AffinePiece> pieces_;
  Box box_;
};

namespace functions {
PiecewiseAffineConvex max_norm(int n, const Box& box);
PiecewiseAffineConvex abs_coordinate(int n, int i, const Box& box);
/// |<c,x> - d|.
PiecewiseAffineConvex abs_affine(const RVec& c, const Rational& d, const Box& box);
Box cube_box(int n, const Rational& r);  // [-r,r]^n
}  // namespace functions

struct Conjugate {
  /// dom f* = conv{a_i}.
  Polytope domain;
  /// f* on its domain as a max of affine pieces (box is the domain bounding box).
  std::vector<AffinePiece> pieces;
  /// Vertices (y, f*(y)) of the lower hull of {(a_i, b_i)}.
  std::vector<RVec> lower_vertices;
  /// max of f* over the vertices of dom f*.
  Rational r_f;

  Rational value(const RVec& y) const;  // y must lie in the domain
};

/// f* as the lower convex hull of {(a_i,b_i)}; checks biconjugation f** = f
/// at the box corners and on a fixed sample of box points.
Conjugate conjugate(const PiecewiseAffineConvex& f);

/// K_f = conv({(y, f*(y)) lower vertices} + {(v, r_f + cap_offset) : v vertex of dom f*})
/// in Q^{n+1}. Asserts f(x) = h_{K_f}(x,-1) on a fixed sample of box points.
Polytope lift_body(const PiecewiseAffineConvex& f, const Rational& cap_offset = 0);

/// Primitive ray of (x,-1).
Direction sphere_map(const RVec& x);
/// -(w_1..w_n)/w_{n+1}; throws std::invalid_argument unless w_{n+1} < 0.
RVec sphere_map_inv(const Direction& w);

/// Finite measure on R^n with rational point masses.
class PlaneMeasure {
 public:
  explicit PlaneMeasure(int n = 0) : n_(n) {}
  int dim() const { return n_; }
  void add(const RVec& x, const Rational& mass);
  const std::map<RVec, Rational>& atoms() const { return atoms_; }
  Rational mass_at(const RVec& x) const;
  std::vector<RVec> support() const;
  bool empty() const { return atoms_.empty(); }
  friend bool operator==(const PlaneMeasure& a, const PlaneMeasure& b) {
    return a.n_ == b.n_ && a.atoms_ == b.atoms_;
  }

 private:
  int n_;
  std::map<RVec, Rational> atoms_;
};

/// H_{f_1..f_n} from S_{K_{f_1}..K_{f_n}}: lower-hemisphere atoms moved to the
/// plane by sphere_map_inv, with mass q*|w_{n+1}| for an atom of scale q at w.
PlaneMeasure mixed_hessian_atoms(const std::vector<PiecewiseAffineConvex>& f,
                                 Execution exec = Execution::parallel);

/// Points where n crease hyperplanes <a_i - a_j, x> = b_i - b_j (pieces of one
/// function) meet in a single point; every vertex of every cell complex of a
/// subset sum is among them. Sorted, without duplicates.
std::vector<RVec> crease_vertices(const std::vector<PiecewiseAffineConvex>& f);

/// Monge-Ampere measure of a single function: |conv of active slopes| at each
/// candidate point.
PlaneMeasure monge_ampere(const PiecewiseAffineConvex& f, const std::vector<RVec>& candidates,
                          Execution exec = Execution::parallel);

/// (1/n!) sum over nonempty S of (-1)^{n-|S|} MA(sum_{i in S} f_i).
PlaneMeasure ma_oracle(const std::vector<PiecewiseAffineConvex>& f,
                       Execution exec = Execution::parallel);

struct AffineCell {
  RVec x;
  Polytope cell;
  RMat direction_space;
  int dim() const { return cell.dim(); }
};

/// L(f,x) clipped to the box. Throws std::invalid_argument if x is outside it.
AffineCell affine_cell(const PiecewiseAffineConvex& f, const RVec& x);
/// Same with an explicit clipping box.
AffineCell affine_cell(const PiecewiseAffineConvex& f, const RVec& x, const Box& box);

struct FunctionVerdict {
  RVec x;
  bool extreme = false;
  /// Subsets I (0-based) with dim L(f_I,x)^perp < |I|.
  std::vector<std::vector<int>> failing_sets;
  /// One line direction in each L(f_i,x)^perp, independent; empty unless extreme.
  std::vector<Direction> line_witness;
};

/// Checks L(f_I,x) = intersection of L(f_i,x) and the line-witness form;
/// throws VerificationError on disagreement.
FunctionVerdict fcn_classify(const std::vector<PiecewiseAffineConvex>& f, const RVec& x);

struct FunctionSchneiderReport {
  PlaneMeasure measure;
  std::vector<RVec> atom_points;     // in the open box of f_1
  std::vector<RVec> extreme_points;  // crease vertices in the open box passing fcn_classify
  bool equal = false;
  bool inclusion = false;  // atoms are extreme points
  /// Equality for n = 2, inclusion otherwise.
  bool ok() const;
  int n = 0;
};

FunctionSchneiderReport fcn_schneider_verify(const std::vector<PiecewiseAffineConvex>& f,
                                             Execution exec = Execution::parallel);

struct RulingSegment {
  RVec a, b;  // endpoints on the closure of D
  Direction direction;
};

/// For n = 2: the component through x of the common affine line of f and g in
/// D. Throws std::invalid_argument("measure nonzero on D") if H_{f,g} has an
/// atom in the open box D, and std::invalid_argument("x in R") if f or g is
/// affine on a neighbourhood of x.
RulingSegment ruling(const PiecewiseAffineConvex& f, const PiecewiseAffineConvex& g, const Box& d,
                     const RVec& x);

}  // namespace mixvol
