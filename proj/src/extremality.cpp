#include "mixvol/extremality.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "combinatorics.hpp"
#include "parallel.hpp"

namespace mixvol {

using detail::subsets_by_size;

TupleContext::TupleContext(std::vector<Polytope> bodies) : bodies_(std::move(bodies)) {
  if (bodies_.empty()) throw std::invalid_argument("empty tuple");
  if (bodies_.size() > 16) throw std::invalid_argument("tuple too long");
  n_ = bodies_.front().ambient_dim();
  for (const auto& b : bodies_)
    if (b.ambient_dim() != n_) throw std::invalid_argument("bodies live in different spaces");
  const unsigned count = 1u << bodies_.size();
  sums_.reserve(count - 1);
  for (unsigned mask = 1; mask < count; ++mask) {
    int low = 0;
    while (!(mask & (1u << low))) ++low;
    const unsigned rest = mask & ~(1u << low);
    sums_.push_back(rest == 0 ? bodies_[low] : minkowski_sum(sums_[rest - 1], bodies_[low]));
  }
}

const Polytope& TupleContext::partial_sum(const std::vector<int>& subset) const {
  if (subset.empty()) throw std::invalid_argument("empty subset");
  unsigned mask = 0;
  for (int i : subset) {
    if (i < 0 || i >= size()) throw std::out_of_range("subset index");
    mask |= 1u << i;
  }
  return sums_[mask - 1];
}

ExtremalityVerdict classify(const TupleContext& c, const Direction& u) {
  const int n = c.ambient_dim();
  const int m = c.size();
  if (u.dim() != n) throw std::invalid_argument("direction has the wrong dimension");
  const RVec uv = u.vec();

  std::vector<RMat> perp;
  for (const auto& b : c.bodies()) perp.push_back(touching_cone(b, u).orthogonal_basis());

  ExtremalityVerdict v;
  v.direction = u;
  bool exposed = true;
  for (const auto& subset : subsets_by_size(m)) {
    const Polytope& sum = c.partial_sum(subset);
    const int need = static_cast<int>(subset.size());
    const int by_cone = n - touching_cone(sum, u).dim();
    RMat span;
    for (int i : subset) span.insert(span.end(), perp[i].begin(), perp[i].end());
    const int by_span = rank(span, n);
    const int by_face = sum.exposed_face(uv).dim;
    if (by_cone != by_span || by_cone != by_face)
      throw VerificationError("extremality characterizations disagree at " + u.str());
    if (by_cone < need) v.failing_sets.push_back(subset);
    if (by_face < need) exposed = false;
  }
  v.extreme = v.failing_sets.empty();
  v.exposed = exposed;

  const std::vector<int> picks = detail::independent_transversal(perp, n);
  if (picks.empty() == v.extreme || v.exposed != v.extreme)
    throw VerificationError("line witness disagrees with extremality at " + u.str());
  if (v.extreme)
    for (int i = 0; i < m; ++i) v.line_witness.emplace_back(perp[i][picks[i]]);
  return v;
}

ExtremalityVerdict classify(const std::vector<Polytope>& c, const Direction& u) {
  return classify(TupleContext(c), u);
}

namespace {

std::vector<Direction> extreme_among(const TupleContext& c, const std::vector<Direction>& cands,
                                     Execution exec) {
  std::vector<char> keep(cands.size(), 0);
  detail::parallel_for(exec, static_cast<long>(cands.size()),
                       [&](long i) { keep[i] = classify(c, cands[i]).extreme ? 1 : 0; });
  std::vector<Direction> out;
  for (std::size_t i = 0; i < cands.size(); ++i)
    if (keep[i]) out.push_back(cands[i]);
  return out;
}

// One direction in the relative interior of every cone of the normal fan,
// together with all rays.
std::vector<Direction> fan_probes(const Polytope& k) {
  const int n = k.ambient_dim();
  std::set<Direction> out;
  for (const auto& l : k.lineality()) {
    out.insert(Direction(l));
    out.insert(-Direction(l));
  }
  for (const auto& f : k.faces()) {
    if (f.vertices.size() == k.vertices().size()) continue;
    const Cone cone = normal_cone(k, f);
    RVec sum = zeros(n);
    for (const auto& g : cone.generators()) {
      out.insert(g);
      sum = add(sum, g.vec());
    }
    out.insert(Direction(sum));
  }
  return std::vector<Direction>(out.begin(), out.end());
}

std::vector<Direction> sorted_difference(const std::vector<Direction>& a,
                                         const std::vector<Direction>& b) {
  std::vector<Direction> out;
  std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

Rational norm2(const RVec& v) { return dot(v, v); }

}  // namespace

std::vector<Direction> extreme_set(const TupleContext& c, Execution exec) {
  return extreme_among(c, c.total().facet_directions(), exec);
}

std::vector<Direction> extreme_set(const std::vector<Polytope>& c, Execution exec) {
  return extreme_set(TupleContext(c), exec);
}

std::vector<Direction> normal_fan_rays(const Polytope& k) {
  std::set<Direction> out;
  for (const auto& l : k.lineality()) {
    out.insert(Direction(l));
    out.insert(-Direction(l));
  }
  for (const auto& f : k.faces()) {
    const Cone cone = normal_cone(k, f);
    for (const auto& g : cone.generators()) out.insert(g);
  }
  return std::vector<Direction>(out.begin(), out.end());
}

SchneiderReport schneider_verify(const std::vector<Polytope>& c, Execution exec) {
  const TupleContext ctx(c);
  if (ctx.size() != ctx.ambient_dim() - 1)
    throw std::invalid_argument("Schneider comparison needs n-1 bodies");
  SchneiderReport r;
  r.tuple = c;
  r.measure = mixed_area_atoms(c, exec);
  r.atom_support = r.measure.support();

  // Every cone of the fan of the sum is probed, so an extreme direction
  // outside the facet directions would surface as a discrepancy.
  const std::vector<Direction> probes = fan_probes(ctx.total());
  r.fan_rays_checked = static_cast<int>(probes.size());
  std::vector<char> extreme(probes.size(), 0), exposed(probes.size(), 0);
  std::vector<Rational> scales(probes.size());
  detail::parallel_for(exec, static_cast<long>(probes.size()), [&](long i) {
    const ExtremalityVerdict v = classify(ctx, probes[i]);
    extreme[i] = v.extreme;
    exposed[i] = v.exposed;
    scales[i] = atom_scale(c, probes[i]);
  });
  for (std::size_t i = 0; i < probes.size(); ++i) {
    if (extreme[i]) r.extreme_set.push_back(probes[i]);
    if (scales[i] != 0 && !exposed[i]) r.nonexposed_atoms.push_back(probes[i]);
    if (scales[i] != r.measure.scale_at(probes[i])) r.unlisted_atoms.push_back(probes[i]);
  }
  r.discrepancies = sorted_difference(r.atom_support, r.extreme_set);
  r.equal = r.discrepancies.empty();
  return r;
}

ProjectionWitness projection_witness(const Polytope& k, const std::vector<Polytope>& c,
                                     const Direction& u) {
  const int n = k.ambient_dim();
  if (n < 3) throw std::invalid_argument("projection witness needs n >= 3");
  if (static_cast<int>(c.size()) != n - 2)
    throw std::invalid_argument("projection witness needs n-2 further bodies");
  std::vector<Polytope> tuple{k};
  tuple.insert(tuple.end(), c.begin(), c.end());
  const ExtremalityVerdict verdict = classify(tuple, u);
  if (!verdict.extreme) throw std::invalid_argument("direction " + u.str() + " is not extreme");

  const RMat perp = touching_cone(k, u).orthogonal_basis();
  std::vector<RVec> cands{verdict.line_witness.front().vec()};
  cands.insert(cands.end(), perp.begin(), perp.end());
  for (std::size_t i = 0; i < perp.size(); ++i)
    for (std::size_t j = i + 1; j < perp.size(); ++j)
      for (int a = 1; a <= 3; ++a)
        for (int b = -3; b <= 3; ++b)
          if (b != 0) cands.push_back(add(scale(perp[i], a), scale(perp[j], b)));

  std::set<Direction> tried;
  for (const auto& cand : cands) {
    if (is_zero(cand)) continue;
    const Direction v(cand);
    if (!tried.insert(v).second) continue;
    const HyperplaneFrame frame(v);
    std::vector<Polytope> projected;
    for (const auto& b : c) projected.push_back(project(b, frame));
    ExtremalityVerdict pv = classify(projected, Direction(frame.functional(u.vec())));
    if (pv.extreme) return {v, std::move(pv)};
  }
  throw VerificationError("no projection witness found for " + u.str());
}

ProjectionSupportReport dim1_projection_support(const Polytope& k, const std::vector<Polytope>& c,
                                                const Direction& u, const Direction& v) {
  const int n = k.ambient_dim();
  if (n < 3) throw std::invalid_argument("projection support needs n >= 3");
  if (static_cast<int>(c.size()) != n - 2)
    throw std::invalid_argument("projection support needs n-2 further bodies");
  const Cone t = touching_cone(k, u);
  if (t.dim() != 1)
    throw std::invalid_argument("dim T(K,u) = " + std::to_string(t.dim()) + ", expected 1");
  const RVec vv = v.vec();
  for (const auto& row : t.span_basis())
    if (dot(row, vv) != 0) throw std::invalid_argument("v is not orthogonal to T(K,u)");

  const HyperplaneFrame frame(v);
  std::vector<Polytope> projected;
  for (const auto& b : c) projected.push_back(project(b, frame));
  std::vector<Polytope> tuple{k};
  tuple.insert(tuple.end(), c.begin(), c.end());

  ProjectionSupportReport r;
  r.projected_atom = atom_scale(projected, Direction(frame.functional(u.vec()))) > 0;
  r.atom = atom_scale(tuple, u) > 0;
  r.holds = !r.projected_atom || r.atom;
  return r;
}

AreaSupportReport area_support(const Polytope& k) {
  const int n = k.ambient_dim();
  if (n < 2) throw std::invalid_argument("area measure needs n >= 2");
  AreaSupportReport r;
  r.atoms = mixed_area_atoms(std::vector<Polytope>(static_cast<std::size_t>(n - 1), k)).support();
  for (const auto& ray : normal_fan_rays(k))
    if (touching_cone(k, ray).dim() == 1) r.dim1_rays.push_back(ray);
  if (r.atoms != r.dim1_rays)
    throw VerificationError("area measure support differs from the dim-1 touching cones");
  return r;
}

bool in_cap(const Direction& w, const Direction& u, const Rational& eps) {
  const RVec wv = w.vec(), uv = u.vec();
  const Rational c = 1 - eps * eps / 2;
  const Rational d = dot(wv, uv);
  const Rational bound = c * c * norm2(wv) * norm2(uv);
  if (c >= 0) return d > 0 && d * d > bound;
  return d >= 0 || d * d < bound;
}

namespace {

constexpr int kMaxHalvings = 200;

RVec centroid(const std::vector<RVec>& pts) {
  RVec c = zeros(static_cast<int>(pts.front().size()));
  for (const auto& p : pts) c = add(c, p);
  return scale(c, Rational(1, static_cast<long>(pts.size())));
}

// Facets of the new hull through p must point into the cap.
bool cut_inside_cap(const Polytope& kp, const RVec& p, const Direction& u, const Rational& eps) {
  const auto& verts = kp.vertices();
  const auto it = std::find(verts.begin(), verts.end(), p);
  if (it == verts.end()) return false;
  const int idx = static_cast<int>(it - verts.begin());
  for (const auto& f : kp.facets())
    if (std::binary_search(f.vertices.begin(), f.vertices.end(), idx) &&
        !in_cap(f.normal, u, eps))
      return false;
  return true;
}

void check_cap_postconditions(const Polytope& k, const Polytope& kp, const Direction& u,
                              const Rational& eps) {
  for (const auto& x : k.vertices())
    if (!kp.contains(x)) throw VerificationError("cap extension does not contain K");
  if (kp.support_value(u.vec()) <= k.support_value(u.vec()))
    throw VerificationError("cap extension did not push h(u)");
  std::set<Direction> rays;
  for (const auto& r : normal_fan_rays(k)) rays.insert(r);
  for (const auto& r : normal_fan_rays(kp)) rays.insert(r);
  for (const auto& r : rays)
    if (!in_cap(r, u, eps) && kp.support_value(r.vec()) != k.support_value(r.vec()))
      throw VerificationError("cap extension changed h at " + r.str() + " outside the cap");
}

}  // namespace

Polytope cap_extend(const Polytope& k, const Direction& u, const Rational& eps) {
  const int n = k.ambient_dim();
  if (u.dim() != n) throw std::invalid_argument("direction has the wrong dimension");
  if (eps <= 0 || eps * eps >= 2) throw std::invalid_argument("need 0 < eps^2 < 2");
  const int tdim = touching_cone(k, u).dim();
  if (tdim != 1)
    throw std::invalid_argument("dim T(K,u) = " + std::to_string(tdim) + ", expected 1");

  const RVec uv = u.vec();
  if (k.dim() == n) {
    // Work with the origin at the vertex centroid. Cutting the polar vertex
    // u/h(u) by {<c,y> <= t}, c the centroid of F(K,u), adds the point c/t.
    const RVec shift = centroid(k.vertices());
    const Polytope k0 = k.translated(scale(shift, -1));
    const Face face = k0.exposed_face(uv);
    std::vector<RVec> fpts;
    for (int i : face.vertices) fpts.push_back(k0.vertices()[i]);
    const RVec c = centroid(fpts);
    Rational second = 0;
    bool first = true;
    for (const auto& f : k0.facets()) {
      if (f.normal == u) continue;
      const Rational s = dot(f.normal, c) / f.offset;
      if (first || s > second) second = s;
      first = false;
    }
    Rational delta(1, 2);
    for (int it = 0; it < kMaxHalvings; ++it, delta /= 2) {
      const Rational t = 1 - delta * (1 - second);
      const RVec p = scale(c, 1 / t);
      std::vector<RVec> pts = k0.vertices();
      pts.push_back(p);
      const Polytope kp0 = Polytope::hull(pts, n);
      if (!cut_inside_cap(kp0, p, u, eps)) continue;
      const Polytope kp = kp0.translated(shift);
      check_cap_postconditions(k, kp, u, eps);
      return kp;
    }
  } else {
    // dim T(K,u) = 1 forces dim K = n-1 and u normal to aff K.
    const RVec c = centroid(k.vertices());
    Rational t = 1;
    for (int it = 0; it < kMaxHalvings; ++it, t /= 2) {
      const RVec p = add(c, scale(uv, t));
      std::vector<RVec> pts = k.vertices();
      pts.push_back(p);
      const Polytope kp = Polytope::hull(pts, n);
      if (!cut_inside_cap(kp, p, u, eps)) continue;
      check_cap_postconditions(k, kp, u, eps);
      return kp;
    }
  }
  throw std::domain_error("cap cut leaks outside the eps-cap; retry with a smaller eps");
}

}  // namespace mixvol
