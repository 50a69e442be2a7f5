#pragma once

#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "mixvol/cone.hpp"
#include "mixvol/direction.hpp"
#include "mixvol/linalg.hpp"

namespace mixvol {

inline constexpr int kMaxAmbientDim = 4;

/// Closed halfspace {x : <normal,x> <= offset}.
struct Halfspace {
  Direction normal;
  Rational offset;
  bool contains(const RVec& x) const { return dot(normal, x) <= offset; }
};

/// A face handle: sorted indices into Polytope::vertices().
struct Face {
  std::vector<int> vertices;
  int dim = -1;
  friend bool operator==(const Face& a, const Face& b) { return a.vertices == b.vertices; }
  friend bool operator<(const Face& a, const Face& b) {
    return a.dim != b.dim ? a.dim < b.dim : a.vertices < b.vertices;
  }
};

/// A facet of K relative to aff K. The normal lies in the direction space of
/// aff K, so for lower-dimensional K it is only one generator of the normal
/// cone; the rest is the lineality (aff K)^perp.
struct Facet {
  Direction normal;
  Rational offset;
  std::vector<int> vertices;
};

/// Convex polytope in Q^n (1 <= n <= 4) in vertex representation.
/// Vertices are irredundant and sorted lexicographically. Facets are computed
/// at construction; the face lattice is built on first use and then shared
/// read-only, so a Polytope may be used from several threads.
class Polytope {
 public:
  static Polytope hull(const std::vector<RVec>& points, int n);

  int ambient_dim() const;
  int dim() const;
  const std::vector<RVec>& vertices() const;
  const std::vector<Facet>& facets() const;
  /// Basis of the linear space parallel to aff K.
  const RMat& direction_basis() const;
  /// Canonical basis of (aff K)^perp.
  const RMat& lineality() const;

  Rational support_value(const RVec& w) const;
  Face exposed_face(const RVec& w) const;
  Polytope face_polytope(const Face& f) const;
  Face whole() const;
  bool is_face(const Face& f) const;
  /// All nonempty faces, sorted by dimension then vertex set; includes K.
  const std::vector<Face>& faces() const;

  /// Directions u with dim F(K,u) = n-1, sorted.
  std::vector<Direction> facet_directions() const;

  bool contains(const RVec& x) const;
  bool interior_contains(const RVec& x) const;
  std::vector<Halfspace> halfspaces() const;

  Rational volume() const;
  Polytope translated(const RVec& t) const;
  Polytope scaled(const Rational& s) const;

  friend bool operator==(const Polytope& a, const Polytope& b) {
    return a.ambient_dim() == b.ambient_dim() && a.vertices() == b.vertices();
  }

 private:
  struct Impl;
  std::shared_ptr<const Impl> impl_;
};

/// Value h_K(w) and exposed face F(K,w).
std::pair<Rational, Polytope> support(const Polytope& k, const Direction& w);

/// N(K,F); carries the lineality (aff K)^perp. Throws if F is not a face.
Cone normal_cone(const Polytope& k, const Face& f);

/// T(K,u): the face of N(K,F(K,u)) containing u in its relative interior.
/// Throws std::logic_error if it differs from N(K,F(K,u)), which is
/// impossible for polytopes.
Cone touching_cone(const Polytope& k, const Direction& u);

Polytope minkowski_sum(const Polytope& a, const Polytope& b);
Polytope minkowski_sum(const std::vector<Polytope>& bodies);

/// Orthonormal-free coordinates on the hyperplane v^perp.
///
/// The basis is the integer kernel basis b_j = (v_p e_j - v_j e_p)/gcd, j != p,
/// where p is the first nonzero coordinate of v.
class HyperplaneFrame {
 public:
  explicit HyperplaneFrame(const Direction& v);

  const Direction& normal() const { return normal_; }
  const RMat& basis() const { return basis_; }
  /// Coordinates of the orthogonal projection of x onto v^perp.
  RVec coords(const RVec& x) const;
  /// The functional y -> <u, B y> on frame coordinates.
  RVec functional(const RVec& u) const;
  /// The unique w in v^perp with <w, B y> = <c, y>.
  RVec ambient_functional(const RVec& c) const;
  /// Rational m with sqrt(det B^T B) = m * |v|: Euclidean (n-1)-volume in v^perp
  /// is m * |v| times volume in frame coordinates.
  const Rational& gram_factor() const { return gram_factor_; }
  /// det(B^T B).
  const Rational& gram_det() const { return gram_det_; }

 private:
  Direction normal_;
  RMat basis_;
  RMat gram_inv_;
  Rational gram_det_;
  Rational gram_factor_;
};

/// P_{v^perp} K in the coordinates of HyperplaneFrame(v).
Polytope project(const Polytope& k, const Direction& v);
Polytope project(const Polytope& k, const HyperplaneFrame& frame);

/// Polar body. Requires K full-dimensional with the origin in its interior.
Polytope polar(const Polytope& k);

Rational volume(const Polytope& k);

/// Bounded intersection of halfspaces and hyperplanes <e.normal,x> = e.offset.
/// Returns nullopt when empty. Throws std::invalid_argument when the recession
/// cone is nontrivial, whether or not the system is feasible.
std::optional<Polytope> polytope_from_halfspaces(int n, const std::vector<Halfspace>& halfspaces,
                                                 const std::vector<Halfspace>& equalities = {});

namespace shapes {
Polytope point(const RVec& p);
Polytope segment(const RVec& a, const RVec& b);
Polytope box(const RVec& lo, const RVec& hi);
Polytope unit_cube(int n);                  // [0,1]^n
Polytope cross_polytope(int n);             // conv{±e_i}
Polytope standard_simplex(int n);           // conv{0, e_1, ..., e_n}
}  // namespace shapes

}  // namespace mixvol
