#pragma once

#include <memory>
#include <mutex>
#include <vector>

#include "mixvol/direction.hpp"
#include "mixvol/linalg.hpp"

namespace mixvol {

/// Polyhedral cone  cone(generators) + span(lineality)  in Q^n.
///
/// Canonical form: lineality is the canonical basis of the lineality space,
/// generators are the extreme rays modulo lineality, each taken in the
/// orthogonal complement of the lineality space, primitive, and sorted.
/// Two cones are equal iff their canonical forms are equal.
class Cone {
 public:
  Cone() = default;

  /// Canonicalizes an arbitrary V-description.
  static Cone from_generators(int n, const RMat& generators, const RMat& lineality);
  /// {w : <a,w> >= 0 for a in inequalities, <e,w> = 0 for e in equalities}.
  static Cone from_constraints(int n, const RMat& inequalities, const RMat& equalities);
  /// Caller guarantees the canonical form (used by the polytope fan).
  static Cone from_canonical(int n, std::vector<Direction> generators, RMat lineality);

  int ambient_dim() const { return n_; }
  const std::vector<Direction>& generators() const { return gens_; }
  const RMat& lineality() const { return lin_; }

  int dim() const;
  RMat span_basis() const;
  /// Canonical basis of span(C)^perp.
  RMat orthogonal_basis() const;

  bool contains(const RVec& w) const;
  bool relint_contains(const RVec& w) const;
  /// The unique face whose relative interior contains w (w must lie in C).
  Cone face_containing(const RVec& w) const;

  /// {w : <w,x> >= 0 for all x in C}.
  Cone dual() const;
  Cone intersect(const Cone& other) const;
  Cone intersect_subspace(const RMat& normals) const;  // C ∩ {w : <e,w>=0}
  bool subset_of(const Cone& other) const;

  friend bool operator==(const Cone& a, const Cone& b) {
    return a.n_ == b.n_ && a.gens_ == b.gens_ && a.lin_ == b.lin_;
  }
  friend bool operator!=(const Cone& a, const Cone& b) { return !(a == b); }

 private:
  struct DualCache {
    std::once_flag once;
    std::vector<Direction> rays;
    RMat lineality;
  };
  const DualCache& dual_data() const;

  int n_ = 0;
  std::vector<Direction> gens_;
  RMat lin_;
  std::shared_ptr<DualCache> dual_ = std::make_shared<DualCache>();
};

}  // namespace mixvol
