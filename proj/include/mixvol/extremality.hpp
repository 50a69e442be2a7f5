#pragma once

#include <vector>

#include "mixvol/common.hpp"
#include "mixvol/mixed_volume.hpp"
#include "mixvol/polytope.hpp"

namespace mixvol {

/// A tuple C_1..C_m with all partial sums C_I precomputed.
class TupleContext {
 public:
  explicit TupleContext(std::vector<Polytope> bodies);

  int ambient_dim() const { return n_; }
  int size() const { return static_cast<int>(bodies_.size()); }
  const std::vector<Polytope>& bodies() const { return bodies_; }
  /// C_I for a nonempty subset given as sorted 0-based indices.
  const Polytope& partial_sum(const std::vector<int>& subset) const;
  const Polytope& total() const { return sums_.back(); }

 private:
  int n_;
  std::vector<Polytope> bodies_;
  std::vector<Polytope> sums_;  // indexed by bitmask - 1
};

struct ExtremalityVerdict {
  Direction direction;
  bool extreme = false;
  bool exposed = false;
  /// Subsets I (0-based) with dim T(C_I,u)^perp < |I|.
  std::vector<std::vector<int>> failing_sets;
  /// Lines L_i in T(C_i,u)^perp with independent directions; empty unless extreme.
  std::vector<Direction> line_witness;
};

/// Evaluates the definition (touching cones of partial sums), the span form
/// dim(sum_{i in I} T(C_i,u)^perp) >= |I|, the line-witness form and the
/// exposed variant. Throws VerificationError if they disagree.
ExtremalityVerdict classify(const TupleContext& c, const Direction& u);
ExtremalityVerdict classify(const std::vector<Polytope>& c, const Direction& u);

/// Extreme directions among the facet directions of C_1+...+C_{n-1}; no other
/// direction can be extreme (take I = [n-1]).
std::vector<Direction> extreme_set(const TupleContext& c, Execution exec = Execution::parallel);
std::vector<Direction> extreme_set(const std::vector<Polytope>& c,
                                   Execution exec = Execution::parallel);

/// Every ray of the normal fan of K: generators of all normal cones, plus both
/// orientations of each lineality basis vector when K is lower-dimensional.
std::vector<Direction> normal_fan_rays(const Polytope& k);

struct SchneiderReport {
  std::vector<Polytope> tuple;
  SphereMeasure measure;
  std::vector<Direction> atom_support;
  std::vector<Direction> extreme_set;
  bool equal = false;
  /// Symmetric difference of the two sets.
  std::vector<Direction> discrepancies;
  /// Fan rays of C_1+...+C_{n-1} carrying mass without being exposed.
  std::vector<Direction> nonexposed_atoms;
  /// Fan rays carrying mass that the atom enumeration missed.
  std::vector<Direction> unlisted_atoms;
  int fan_rays_checked = 0;

  bool ok() const { return equal && nonexposed_atoms.empty() && unlisted_atoms.empty(); }
};

/// Compares supp S_{C_1..C_{n-1}} with the extreme set, and scans every fan
/// ray of the sum for mass at non-exposed directions. Never throws on a
/// mismatch; the report records it.
SchneiderReport schneider_verify(const std::vector<Polytope>& c,
                                 Execution exec = Execution::parallel);

struct ProjectionWitness {
  Direction v;
  /// u (as a functional on the frame of v^perp) classified for P_{v^perp}C.
  ExtremalityVerdict projected;
};

/// For u (K,C_1..C_{n-2})-extreme, finds v in T(K,u)^perp with u
/// (P C_1..P C_{n-2})-extreme. Throws std::invalid_argument if u is not
/// extreme, VerificationError if no candidate works.
ProjectionWitness projection_witness(const Polytope& k, const std::vector<Polytope>& c,
                                     const Direction& u);

struct ProjectionSupportReport {
  bool projected_atom = false;  // u in supp S_{P C_1..P C_{n-2}}
  bool atom = false;            // u in supp S_{K,C_1..C_{n-2}}
  bool holds = true;            // projected_atom implies atom
};

/// Requires dim T(K,u) = 1 and v in T(K,u)^perp (std::invalid_argument otherwise).
ProjectionSupportReport dim1_projection_support(const Polytope& k, const std::vector<Polytope>& c,
                                                const Direction& u, const Direction& v);

struct AreaSupportReport {
  std::vector<Direction> atoms;
  std::vector<Direction> dim1_rays;
};

/// supp S_{K[n-1]} against {fan rays u : dim T(K,u) = 1}. Throws
/// VerificationError if they differ.
AreaSupportReport area_support(const Polytope& k);

/// True iff w lies in the open cap {|w/|w| - u/|u|| < eps}.
bool in_cap(const Direction& w, const Direction& u, const Rational& eps);

/// A polytope K' containing K with h_{K'}(u) > h_K(u) and h_{K'} = h_K at
/// every fan ray of K and K' outside the eps-cap around u. Requires
/// dim T(K,u) = 1 and 0 < eps^2 < 2 (std::invalid_argument otherwise).
/// Throws std::domain_error if no cut inside the cap is found.
Polytope cap_extend(const Polytope& k, const Direction& u, const Rational& eps);

}  // namespace mixvol
