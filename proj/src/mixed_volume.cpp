#include "mixvol/mixed_volume.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "combinatorics.hpp"
#include "parallel.hpp"

namespace mixvol {

using detail::factorial;
using detail::subsets_by_size;

void SphereMeasure::add(const Direction& w, const Rational& q) {
  if (w.dim() != n_) throw std::invalid_argument("atom dimension mismatch");
  if (q == 0) return;
  auto [it, inserted] = atoms_.emplace(w, q);
  if (!inserted) {
    it->second += q;
    if (it->second == 0) atoms_.erase(it);
  }
}

Rational SphereMeasure::scale_at(const Direction& w) const {
  auto it = atoms_.find(w);
  return it == atoms_.end() ? Rational(0) : it->second;
}

std::vector<Direction> SphereMeasure::support() const {
  std::vector<Direction> out;
  out.reserve(atoms_.size());
  for (const auto& [w, q] : atoms_)
    if (q > 0) out.push_back(w);
  return out;
}

SphereMeasure SphereMeasure::scaled(const Rational& s) const {
  SphereMeasure out(n_);
  for (const auto& [w, q] : atoms_) out.add(w, q * s);
  return out;
}

namespace {

void require_ambient(const std::vector<Polytope>& bodies, int n) {
  for (const auto& b : bodies)
    if (b.ambient_dim() != n) throw std::invalid_argument("ambient dimension mismatch");
}

// Dimension of the Minkowski sum of the bodies indexed by `subset`.
int sum_dim(const std::vector<Polytope>& bodies, const std::vector<int>& subset) {
  RMat dirs;
  for (int i : subset)
    for (const auto& d : bodies[i].direction_basis()) dirs.push_back(d);
  return rank(dirs, bodies.front().ambient_dim());
}

// Exponent vectors a in N^d with |a| = d.
std::vector<std::vector<int>> compositions(int d) {
  std::vector<std::vector<int>> out;
  std::vector<int> a(static_cast<std::size_t>(d), 0);
  auto rec = [&](auto&& self, int pos, int left) -> void {
    if (pos == d - 1) {
      a[pos] = left;
      out.push_back(a);
      return;
    }
    for (int v = left; v >= 0; --v) {
      a[pos] = v;
      self(self, pos + 1, left - v);
    }
  };
  rec(rec, 0, d);
  return out;
}

// Coordinates on a rational subspace W with integer basis B:
// z = (B^T B)^{-1} B^T x, so Euclidean volume in W is sqrt(det B^T B) times
// volume in z.
struct SubspaceChart {
  RMat basis;
  RMat gram_inv;
  Rational gram_det;

  explicit SubspaceChart(RMat b) : basis(std::move(b)) {
    const int k = static_cast<int>(basis.size());
    RMat gram(static_cast<std::size_t>(k), RVec(static_cast<std::size_t>(k)));
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) gram[i][j] = dot(basis[i], basis[j]);
    gram_det = determinant(gram);
    gram_inv.assign(static_cast<std::size_t>(k), RVec(static_cast<std::size_t>(k)));
    for (int c = 0; c < k; ++c) {
      const RVec col = *solve(gram, unit_vector(k, c));
      for (int r = 0; r < k; ++r) gram_inv[r][c] = col[r];
    }
  }

  RVec coords(const RVec& x) const {
    RVec bx;
    for (const auto& b : basis) bx.push_back(dot(b, x));
    RVec z;
    for (const auto& row : gram_inv) z.push_back(dot(row, bx));
    return z;
  }

  Polytope chart(const Polytope& k) const {
    std::vector<RVec> pts;
    for (const auto& v : k.vertices()) pts.push_back(coords(v));
    return Polytope::hull(pts, static_cast<int>(basis.size()));
  }
};

Rational polarize(const std::vector<Polytope>& bodies, bool dimension_shortcut) {
  const int d = static_cast<int>(bodies.size());
  if (d == 0) throw std::invalid_argument("mixed volume of no bodies");
  require_ambient(bodies, d);
  // V = 0 iff some subset sum is too thin.
  if (dimension_shortcut)
    for (const auto& subset : subsets_by_size(d))
      if (sum_dim(bodies, subset) < static_cast<int>(subset.size())) return 0;

  const int masks = 1 << d;
  std::vector<std::optional<Polytope>> sums(static_cast<std::size_t>(masks));
  Rational total = 0;
  for (int mask = 1; mask < masks; ++mask) {
    int top = 31 - __builtin_clz(static_cast<unsigned>(mask));
    const int rest = mask & ~(1 << top);
    sums[mask] = rest == 0 ? bodies[top] : minkowski_sum(*sums[rest], bodies[top]);
    const int size = __builtin_popcount(static_cast<unsigned>(mask));
    const Rational vol = sums[mask]->volume();
    if ((d - size) % 2 == 0)
      total += vol;
    else
      total -= vol;
  }
  return total / factorial(d);
}

}  // namespace

Rational mixed_volume_polarized(const std::vector<Polytope>& bodies) {
  return polarize(bodies, true);
}

Rational mixed_volume_interpolated(const std::vector<Polytope>& bodies, Execution exec) {
  const int d = static_cast<int>(bodies.size());
  if (d == 0) throw std::invalid_argument("mixed volume of no bodies");
  require_ambient(bodies, d);
  const auto exps = compositions(d);
  const long m = static_cast<long>(exps.size());

  std::vector<RVec> lambdas(static_cast<std::size_t>(m));
  for (long p = 0; p < m; ++p)
    for (int i = 0; i < d; ++i) lambdas[p].emplace_back(exps[p][i] + 1);

  std::vector<Rational> vols(static_cast<std::size_t>(m));
  detail::parallel_for(exec, m, [&](long p) {
    std::vector<Polytope> scaled;
    for (int i = 0; i < d; ++i) scaled.push_back(bodies[i].scaled(lambdas[p][i]));
    vols[p] = minkowski_sum(scaled).volume();
  });

  // Vol(sum l_i C_i) = sum_b c_b l^b over |b| = d; solve for c.
  RMat system(static_cast<std::size_t>(m), RVec(static_cast<std::size_t>(m)));
  for (long p = 0; p < m; ++p)
    for (long b = 0; b < m; ++b) {
      Rational term = 1;
      for (int i = 0; i < d; ++i)
        for (int e = 0; e < exps[b][i]; ++e) term *= lambdas[p][i];
      system[p][b] = term;
    }
  const auto coeffs = solve(system, vols);
  if (!coeffs) throw std::logic_error("interpolation system is singular");
  const std::vector<int> ones(static_cast<std::size_t>(d), 1);
  const long idx = std::find(exps.begin(), exps.end(), ones) - exps.begin();
  return (*coeffs)[idx] / factorial(d);
}

MixedVolumeReport mixed_volume(const std::vector<Polytope>& bodies, Execution exec) {
  const int n = static_cast<int>(bodies.size());
  if (n < 2 || n > kMaxAmbientDim)
    throw std::invalid_argument("mixed volume needs 2 to 4 bodies");
  require_ambient(bodies, n);
  MixedVolumeReport r;
  r.method_a = mixed_volume_interpolated(bodies, exec);
  const std::vector<Polytope> head(bodies.begin(), bodies.end() - 1);
  r.method_b = integrate_support(bodies.back(), mixed_area_atoms(head, exec)) / n;
  if (r.method_a != r.method_b)
    throw VerificationError("mixed volume methods disagree: " + to_string(r.method_a) + " vs " +
                            to_string(r.method_b));
  r.value = r.method_a;
  return r;
}

Rational atom_scale(const std::vector<Polytope>& bodies, const Direction& u) {
  const int n = u.dim();
  if (static_cast<int>(bodies.size()) != n - 1)
    throw std::invalid_argument("area measure needs n-1 bodies");
  require_ambient(bodies, n);
  const RVec uv = u.vec();
  std::vector<Polytope> faces;
  for (const auto& b : bodies) faces.push_back(b.face_polytope(b.exposed_face(uv)));
  std::vector<int> all(faces.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
  if (sum_dim(faces, all) < n - 1) return 0;
  const HyperplaneFrame frame(u);
  std::vector<Polytope> projected;
  for (const auto& f : faces) projected.push_back(project(f, frame));
  return frame.gram_factor() * mixed_volume_polarized(projected);
}

SphereMeasure mixed_area_atoms(const std::vector<Polytope>& bodies, Execution exec) {
  if (bodies.empty()) throw std::invalid_argument("area measure needs n-1 bodies");
  const int n = bodies.front().ambient_dim();
  if (static_cast<int>(bodies.size()) != n - 1)
    throw std::invalid_argument("area measure needs n-1 bodies");
  require_ambient(bodies, n);
  const std::vector<Direction> cands = minkowski_sum(bodies).facet_directions();
  std::vector<Rational> scales(cands.size());
  detail::parallel_for(exec, static_cast<long>(cands.size()),
                       [&](long i) { scales[i] = atom_scale(bodies, cands[i]); });
  SphereMeasure s(n);
  for (std::size_t i = 0; i < cands.size(); ++i) s.add(cands[i], scales[i]);
  return s;
}

PositivityReport positivity(const std::vector<Polytope>& bodies) {
  const int n = static_cast<int>(bodies.size());
  if (n == 0) throw std::invalid_argument("positivity of no bodies");
  require_ambient(bodies, n);
  PositivityReport r;
  for (const auto& subset : subsets_by_size(n))
    if (sum_dim(bodies, subset) < static_cast<int>(subset.size())) {
      r.failing_set = subset;
      break;
    }
  std::vector<RMat> cands;
  for (const auto& b : bodies) cands.push_back(b.direction_basis());
  const std::vector<int> picks = detail::independent_transversal(cands, n);
  const bool segments_exist = !picks.empty();
  r.positive = polarize(bodies, false) > 0;
  if (segments_exist != r.positive || r.failing_set.empty() != r.positive)
    throw VerificationError("positivity criteria disagree");
  if (r.positive)
    for (int i = 0; i < n; ++i) {
      const RVec& a = bodies[i].vertices().front();
      r.segments.push_back({a, add(a, cands[i][picks[i]])});
    }
  return r;
}

Rational integrate_support(const Polytope& k, const SphereMeasure& s) {
  if (!s.empty() && k.ambient_dim() != s.ambient_dim())
    throw std::invalid_argument("ambient dimension mismatch");
  Rational total = 0;
  for (const auto& [w, q] : s.atoms()) total += q * k.support_value(w.vec());
  return total;
}

Rational integrate_support(const SupportDifference& f, const SphereMeasure& s) {
  return integrate_support(f.plus, s) - integrate_support(f.minus, s);
}

MonotonicityReport monotonicity_equality(const Polytope& k, const Polytope& l,
                                         const std::vector<Polytope>& c) {
  const int n = k.ambient_dim();
  if (l.ambient_dim() != n || static_cast<int>(c.size()) != n - 1)
    throw std::invalid_argument("monotonicity needs K, L and n-1 bodies in the same space");
  require_ambient(c, n);
  for (const auto& v : k.vertices())
    if (!l.contains(v)) throw std::invalid_argument("K is not contained in L");
  MonotonicityReport r;
  std::vector<Polytope> with_k{k}, with_l{l};
  with_k.insert(with_k.end(), c.begin(), c.end());
  with_l.insert(with_l.end(), c.begin(), c.end());
  r.v_k = mixed_volume_polarized(with_k);
  r.v_l = mixed_volume_polarized(with_l);
  r.equal = r.v_k == r.v_l;
  const SphereMeasure s = mixed_area_atoms(c);
  for (const auto& [w, q] : s.atoms())
    if (k.support_value(w.vec()) != l.support_value(w.vec())) r.disagreements.push_back(w);
  r.support_agreement = r.disagreements.empty();
  if (r.equal != r.support_agreement)
    throw VerificationError("monotonicity equality and support agreement disagree");
  return r;
}

AFReport af_check(const Polytope& k, const Polytope& l, const std::vector<Polytope>& c) {
  const int n = k.ambient_dim();
  if (l.ambient_dim() != n || static_cast<int>(c.size()) != n - 2)
    throw std::invalid_argument("Alexandrov-Fenchel check needs K, L and n-2 bodies");
  require_ambient(c, n);
  auto tuple = [&](const Polytope& a, const Polytope& b) {
    std::vector<Polytope> t{a, b};
    t.insert(t.end(), c.begin(), c.end());
    return t;
  };
  const Rational vkl = mixed_volume_polarized(tuple(k, l));
  const Rational vkk = mixed_volume_polarized(tuple(k, k));
  const Rational vll = mixed_volume_polarized(tuple(l, l));
  AFReport r;
  r.lhs = vkl * vkl;
  r.rhs = vkk * vll;
  r.equality = r.lhs == r.rhs;
  if (r.lhs < r.rhs) throw VerificationError("Alexandrov-Fenchel inequality violated");
  if (vkl > 0) {
    std::vector<Polytope> kc{k}, lc{l};
    kc.insert(kc.end(), c.begin(), c.end());
    lc.insert(lc.end(), c.begin(), c.end());
    const bool match = mixed_area_atoms(kc) == mixed_area_atoms(lc).scaled(vkk / vkl);
    if (match != r.equality)
      throw VerificationError("Alexandrov-Fenchel equality case and measure proportionality disagree");
    r.equality_measure_match = match;
  }
  return r;
}

ProjectionReport projection_identities(const std::vector<Polytope>& c, const Direction& v) {
  const int n = v.dim();
  const int m = static_cast<int>(c.size());
  if (m != n - 1 && m != n - 2)
    throw std::invalid_argument("projection identities need n-1 or n-2 bodies");
  require_ambient(c, n);
  ProjectionReport r;
  r.n = n;
  r.v = v;
  const Polytope seg = shapes::segment(zeros(n), v.vec());
  const HyperplaneFrame frame(v);
  const Rational vnorm2(v.norm2());

  if (m == n - 1) {
    // n V_n([0,v],C) = |v| V_{n-1}(P C) and the Euclidean volume in v^perp is
    // m |v| times frame volume, so both sides below equal n V_n([0,v],C).
    std::vector<Polytope> tuple{seg};
    tuple.insert(tuple.end(), c.begin(), c.end());
    std::vector<Polytope> projected;
    for (const auto& b : c) projected.push_back(project(b, frame));
    r.volume_lhs = n * mixed_volume_polarized(tuple);
    r.volume_rhs = frame.gram_factor() * vnorm2 * mixed_volume_polarized(projected);
    r.volume_ok = *r.volume_lhs == *r.volume_rhs;
  }

  if (n >= 3) {
    const std::vector<Polytope> head(c.begin(), c.begin() + (n - 2));
    std::vector<Polytope> tuple{seg};
    tuple.insert(tuple.end(), head.begin(), head.end());
    const SphereMeasure lhs = mixed_area_atoms(tuple);

    std::set<Direction> cands;
    for (const auto& [w, q] : lhs.atoms()) cands.insert(w);
    std::vector<Polytope> projected;
    for (const auto& b : head) projected.push_back(project(b, frame));
    for (const auto& d : minkowski_sum(projected).facet_directions())
      cands.insert(Direction(frame.ambient_functional(d.vec())));

    for (const auto& u : cands) {
      ProjectionAtom a{u, 0, 0};
      // (n-1) S_{[0,v],C}({u}) = (n-1) q |u| / |v|; squared and times |v|^2.
      const Rational q = lhs.scale_at(u);
      a.lhs_sq = (n - 1) * (n - 1) * q * q * Rational(u.norm2());
      // S_{P C}({u}) = sqrt(det G_W) V_z(P_W F(C_i,u)) with W = u^perp ∩ v^perp.
      if (dot(u, v.vec()) == 0) {
        const SubspaceChart w(kernel({u.vec(), v.vec()}, n));
        std::vector<Polytope> faces;
        for (const auto& b : head) faces.push_back(w.chart(b.face_polytope(b.exposed_face(u.vec()))));
        const Rational vz = mixed_volume_polarized(faces);
        a.rhs_sq = vnorm2 * w.gram_det * vz * vz;
      }
      if (a.lhs_sq != a.rhs_sq) r.measure_ok = false;
      r.atoms.push_back(std::move(a));
    }
  }
  if (!r.volume_ok || !r.measure_ok)
    throw VerificationError("projection identity fails for v = " + v.str());
  return r;
}

}  // namespace mixvol
