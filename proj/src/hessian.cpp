#include "mixvol/hessian.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

#include "combinatorics.hpp"
#include "parallel.hpp"

namespace mixvol {

namespace {

// {y : <c,y> <= rhs} with a primitive normal, or nullopt when c = 0.
std::optional<Halfspace> make_halfspace(const RVec& c, const Rational& rhs) {
  if (is_zero(c)) return std::nullopt;
  const RVec p = primitive(c);
  int k = 0;
  while (c[k] == 0) ++k;
  return Halfspace{Direction(p), rhs * p[k] / c[k]};
}

struct CellConstraints {
  std::vector<Halfspace> halfspaces;
  std::vector<Halfspace> equalities;
};

// The region where every piece active at x stays active.
void add_cell_constraints(const PiecewiseAffineConvex& f, const RVec& x, CellConstraints& out) {
  const auto act = f.active(x);
  const auto& ps = f.pieces();
  const AffinePiece& p0 = ps[act.front()];
  for (std::size_t j = 1; j < act.size(); ++j) {
    const AffinePiece& p = ps[act[j]];
    if (auto h = make_halfspace(sub(p.a, p0.a), p.b - p0.b)) out.equalities.push_back(*h);
  }
  std::vector<char> is_active(ps.size(), 0);
  for (int i : act) is_active[i] = 1;
  for (std::size_t k = 0; k < ps.size(); ++k)
    if (!is_active[k])
      if (auto h = make_halfspace(sub(ps[k].a, p0.a), ps[k].b - p0.b))
        out.halfspaces.push_back(*h);
}

// When x satisfies every inequality strictly, the cell around x is the polar
// of conv{n_i / slack_i} inside the solution space of the equalities, so its
// vertices come from the facets of that hull.
std::optional<Polytope> cell_by_polarity(int n, const RVec& x, const std::vector<Halfspace>& hs,
                                         const std::vector<Halfspace>& eqs) {
  RMat eq_rows;
  for (const auto& e : eqs) eq_rows.push_back(e.normal.vec());
  const RMat basis = kernel(eq_rows, n);
  const int d = static_cast<int>(basis.size());
  if (d == 0) return Polytope::hull({x}, n);
  std::vector<RVec> polar_pts;
  for (const auto& h : hs) {
    const Rational slack = h.offset - dot(h.normal, x);
    if (slack <= 0) return std::nullopt;
    RVec p;
    for (const auto& b : basis) p.push_back(dot(h.normal, b) / slack);
    polar_pts.push_back(std::move(p));
  }
  const Polytope polar_body = Polytope::hull(polar_pts, d);
  if (polar_body.dim() < d) return std::nullopt;
  std::vector<RVec> verts;
  for (const auto& f : polar_body.facets()) {
    RVec y = x;
    for (int j = 0; j < d; ++j) y = add(y, scale(basis[j], Rational(f.normal[j]) / f.offset));
    verts.push_back(std::move(y));
  }
  return Polytope::hull(verts, n);
}

Polytope solve_cell(int n, const RVec& x, CellConstraints c, const Box& box) {
  for (const auto& h : box.halfspaces()) c.halfspaces.push_back(h);
  // Only the tightest offset per normal matters.
  std::map<Direction, Rational> tight;
  for (const auto& h : c.halfspaces) {
    auto [it, fresh] = tight.emplace(h.normal, h.offset);
    if (!fresh && h.offset < it->second) it->second = h.offset;
  }
  std::vector<Halfspace> hs;
  for (const auto& [d, o] : tight) hs.push_back({d, o});
  RMat eq_rows;
  std::vector<Halfspace> eqs;
  for (const auto& e : c.equalities) {
    eq_rows.push_back(e.normal.vec());
    if (rank(eq_rows, n) == static_cast<int>(eq_rows.size())) {
      eqs.push_back(e);
    } else {
      eq_rows.pop_back();
    }
  }
  if (auto p = cell_by_polarity(n, x, hs, eqs)) return *p;
  auto p = polytope_from_halfspaces(n, hs, eqs);
  if (!p) throw std::logic_error("empty affine cell");
  return *p;
}

std::vector<RVec> sample_points(const Box& box) {
  const int n = box.dim();
  std::vector<RVec> pts;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    RVec x;
    for (int i = 0; i < n; ++i) x.push_back(mask & (1u << i) ? box.hi[i] : box.lo[i]);
    pts.push_back(x);
  }
  std::mt19937_64 rng(0x5eed);
  std::uniform_int_distribution<int> step(0, 64);
  while (pts.size() < 100) {
    RVec x;
    for (int i = 0; i < n; ++i)
      x.push_back(box.lo[i] + (box.hi[i] - box.lo[i]) * ratio(step(rng), 64));
    pts.push_back(x);
  }
  return pts;
}

PiecewiseAffineConvex sum_of(const std::vector<PiecewiseAffineConvex>& f,
                             const std::vector<int>& subset) {
  PiecewiseAffineConvex acc = f[subset.front()];
  for (std::size_t j = 1; j < subset.size(); ++j) acc = acc + f[subset[j]];
  return acc;
}

void require_common_dim(const std::vector<PiecewiseAffineConvex>& f, bool n_functions) {
  if (f.empty()) throw std::invalid_argument("no functions");
  const int n = f.front().dim();
  for (const auto& g : f)
    if (g.dim() != n) throw std::invalid_argument("functions live in different dimensions");
  if (n_functions && static_cast<int>(f.size()) != n)
    throw std::invalid_argument("need n functions on R^n");
}

}  // namespace

bool Box::contains(const RVec& x) const {
  if (static_cast<int>(x.size()) != dim()) return false;
  for (int i = 0; i < dim(); ++i)
    if (x[i] < lo[i] || x[i] > hi[i]) return false;
  return true;
}

bool Box::interior_contains(const RVec& x) const {
  if (static_cast<int>(x.size()) != dim()) return false;
  for (int i = 0; i < dim(); ++i)
    if (x[i] <= lo[i] || x[i] >= hi[i]) return false;
  return true;
}

std::vector<Halfspace> Box::halfspaces() const {
  std::vector<Halfspace> out;
  for (int i = 0; i < dim(); ++i) {
    out.push_back({Direction(unit_vector(dim(), i)), hi[i]});
    out.push_back({Direction(scale(unit_vector(dim(), i), -1)), -lo[i]});
  }
  return out;
}

PiecewiseAffineConvex::PiecewiseAffineConvex(std::vector<AffinePiece> pieces, Box box)
    : pieces_(std::move(pieces)), box_(std::move(box)) {
  const int n = box_.dim();
  if (n < 1 || n > 3) throw std::invalid_argument("functions live on R^1..R^3");
  if (static_cast<int>(box_.hi.size()) != n) throw std::invalid_argument("malformed box");
  for (int i = 0; i < n; ++i)
    if (box_.lo[i] >= box_.hi[i]) throw std::invalid_argument("empty box");
  if (pieces_.empty()) throw std::invalid_argument("no affine pieces");
  for (const auto& p : pieces_)
    if (static_cast<int>(p.a.size()) != n) throw std::invalid_argument("slope dimension mismatch");
}

Rational PiecewiseAffineConvex::operator()(const RVec& x) const {
  Rational best = dot(pieces_.front().a, x) - pieces_.front().b;
  for (const auto& p : pieces_) best = std::max(best, Rational(dot(p.a, x) - p.b));
  return best;
}

std::vector<int> PiecewiseAffineConvex::active(const RVec& x) const {
  const Rational v = (*this)(x);
  std::vector<int> out;
  for (std::size_t i = 0; i < pieces_.size(); ++i)
    if (dot(pieces_[i].a, x) - pieces_[i].b == v) out.push_back(static_cast<int>(i));
  return out;
}

PiecewiseAffineConvex operator+(const PiecewiseAffineConvex& f, const PiecewiseAffineConvex& g) {
  if (f.dim() != g.dim()) throw std::invalid_argument("dimension mismatch");
  std::set<std::pair<RVec, Rational>> seen;
  std::vector<AffinePiece> out;
  for (const auto& p : f.pieces())
    for (const auto& q : g.pieces()) {
      AffinePiece s{add(p.a, q.a), p.b + q.b};
      if (seen.emplace(s.a, s.b).second) out.push_back(std::move(s));
    }
  return {std::move(out), f.box()};
}

namespace functions {

Box cube_box(int n, const Rational& r) {
  Box b;
  for (int i = 0; i < n; ++i) {
    b.lo.push_back(-r);
    b.hi.push_back(r);
  }
  return b;
}

PiecewiseAffineConvex max_norm(int n, const Box& box) {
  std::vector<AffinePiece> ps;
  for (int i = 0; i < n; ++i) {
    ps.push_back({unit_vector(n, i), 0});
    ps.push_back({scale(unit_vector(n, i), -1), 0});
  }
  return {std::move(ps), box};
}

PiecewiseAffineConvex abs_coordinate(int n, int i, const Box& box) {
  return abs_affine(unit_vector(n, i), 0, box);
}

PiecewiseAffineConvex abs_affine(const RVec& c, const Rational& d, const Box& box) {
  return {{{c, d}, {scale(c, -1), -d}}, box};
}

}  // namespace functions

Rational Conjugate::value(const RVec& y) const {
  Rational best = dot(pieces.front().a, y) - pieces.front().b;
  for (const auto& p : pieces) best = std::max(best, Rational(dot(p.a, y) - p.b));
  return best;
}

Conjugate conjugate(const PiecewiseAffineConvex& f) {
  const int n = f.dim();
  Rational top = f.pieces().front().b;
  for (const auto& p : f.pieces()) top = std::max(top, p.b);
  top += 1;
  // Vertical segments above every (a_i,b_i) make the lower facets of the hull
  // exactly the affine pieces of f*.
  std::vector<RVec> pts, slopes;
  for (const auto& p : f.pieces()) {
    RVec lo = p.a, hi = p.a;
    lo.push_back(p.b);
    hi.push_back(top);
    pts.push_back(lo);
    pts.push_back(hi);
    slopes.push_back(p.a);
  }
  const Polytope q = Polytope::hull(pts, n + 1);
  Conjugate c{Polytope::hull(slopes, n), {}, {}, 0};
  for (const auto& facet : q.facets()) {
    const Integer& s = facet.normal[n];
    if (s >= 0) continue;
    RVec a;
    for (int i = 0; i < n; ++i) a.push_back(Rational(facet.normal[i]) / Rational(-s));
    c.pieces.push_back({a, facet.offset / Rational(-s)});
  }
  for (const auto& v : q.vertices())
    if (v[n] < top) c.lower_vertices.push_back(v);
  bool first = true;
  for (const auto& v : c.domain.vertices()) {
    const Rational val = c.value(v);
    if (first || val > c.r_f) c.r_f = val;
    first = false;
  }
  for (const auto& x : sample_points(f.box())) {
    Rational best;
    bool init = false;
    for (const auto& v : c.lower_vertices) {
      RVec y(v.begin(), v.begin() + n);
      const Rational val = dot(x, y) - v[n];
      if (!init || val > best) best = val;
      init = true;
    }
    if (best != f(x)) throw VerificationError("biconjugate differs from f at " + to_string(x));
  }
  return c;
}

Polytope lift_body(const PiecewiseAffineConvex& f, const Rational& cap_offset) {
  const int n = f.dim();
  const Conjugate c = conjugate(f);
  std::vector<RVec> pts = c.lower_vertices;
  for (const auto& v : c.domain.vertices()) {
    RVec p = v;
    p.push_back(c.r_f + cap_offset);
    pts.push_back(p);
  }
  const Polytope k = Polytope::hull(pts, n + 1);
  for (RVec x : sample_points(f.box())) {
    const Rational fx = f(x);
    x.push_back(-1);
    if (k.support_value(x) != fx) throw VerificationError("support identity fails for the lift");
  }
  return k;
}

Direction sphere_map(const RVec& x) {
  RVec w = x;
  w.push_back(-1);
  return Direction(w);
}

RVec sphere_map_inv(const Direction& w) {
  const int n = w.dim() - 1;
  if (n < 1 || w[n] >= 0) throw std::invalid_argument("direction is not in the lower hemisphere");
  RVec x;
  for (int i = 0; i < n; ++i) x.push_back(-Rational(w[i]) / Rational(w[n]));
  return x;
}

void PlaneMeasure::add(const RVec& x, const Rational& mass) {
  if (static_cast<int>(x.size()) != n_) throw std::invalid_argument("point dimension mismatch");
  if (mass == 0) return;
  auto [it, fresh] = atoms_.emplace(x, mass);
  if (!fresh) {
    it->second += mass;
    if (it->second == 0) atoms_.erase(it);
  }
}

Rational PlaneMeasure::mass_at(const RVec& x) const {
  const auto it = atoms_.find(x);
  return it == atoms_.end() ? Rational(0) : it->second;
}

std::vector<RVec> PlaneMeasure::support() const {
  std::vector<RVec> out;
  for (const auto& [x, m] : atoms_) out.push_back(x);
  return out;
}

PlaneMeasure mixed_hessian_atoms(const std::vector<PiecewiseAffineConvex>& f, Execution exec) {
  require_common_dim(f, true);
  const int n = f.front().dim();
  std::vector<Polytope> lifts;
  for (const auto& g : f) lifts.push_back(lift_body(g));
  const SphereMeasure s = mixed_area_atoms(lifts, exec);
  PlaneMeasure h(n);
  for (const auto& [w, q] : s.atoms())
    if (w[n] < 0) h.add(sphere_map_inv(w), q * Rational(abs(w[n])));
  return h;
}

std::vector<RVec> crease_vertices(const std::vector<PiecewiseAffineConvex>& f) {
  require_common_dim(f, false);
  const int n = f.front().dim();
  std::set<std::pair<Direction, Rational>> planes;
  for (const auto& g : f) {
    const auto& ps = g.pieces();
    for (std::size_t i = 0; i < ps.size(); ++i)
      for (std::size_t j = i + 1; j < ps.size(); ++j)
        if (auto h = make_halfspace(sub(ps[i].a, ps[j].a), ps[i].b - ps[j].b)) {
          // Orient so that hyperplanes compare equal regardless of order.
          Halfspace e = *h;
          if (e.normal < -e.normal) e = {-e.normal, -e.offset};
          planes.emplace(e.normal, e.offset);
        }
  }
  const std::vector<std::pair<Direction, Rational>> list(planes.begin(), planes.end());
  const int m = static_cast<int>(list.size());
  std::set<RVec> out;
  if (m < n) return {};
  std::vector<int> idx(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) idx[i] = i;
  while (true) {
    RMat a;
    RVec b;
    for (int i : idx) {
      a.push_back(list[i].first.vec());
      b.push_back(list[i].second);
    }
    if (auto x = solve(a, b)) out.insert(*x);
    int i = n - 1;
    while (i >= 0 && idx[i] == m - n + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < n; ++j) idx[j] = idx[j - 1] + 1;
  }
  return std::vector<RVec>(out.begin(), out.end());
}

PlaneMeasure monge_ampere(const PiecewiseAffineConvex& f, const std::vector<RVec>& candidates,
                          Execution exec) {
  const int n = f.dim();
  std::vector<Rational> mass(candidates.size());
  detail::parallel_for(exec, static_cast<long>(candidates.size()), [&](long i) {
    std::vector<RVec> slopes;
    for (int k : f.active(candidates[i])) slopes.push_back(f.pieces()[k].a);
    mass[i] = Polytope::hull(slopes, n).volume();
  });
  PlaneMeasure out(n);
  for (std::size_t i = 0; i < candidates.size(); ++i) out.add(candidates[i], mass[i]);
  return out;
}

PlaneMeasure ma_oracle(const std::vector<PiecewiseAffineConvex>& f, Execution exec) {
  require_common_dim(f, true);
  const int n = f.front().dim();
  const std::vector<RVec> cands = crease_vertices(f);
  const Rational inv_fact = 1 / detail::factorial(n);
  PlaneMeasure h(n);
  for (const auto& subset : detail::subsets_by_size(n)) {
    const Rational sign = (n - static_cast<int>(subset.size())) % 2 == 0 ? 1 : -1;
    const PlaneMeasure ma = monge_ampere(sum_of(f, subset), cands, exec);
    for (const auto& [x, m] : ma.atoms())
      h.add(x, sign * inv_fact * m);
  }
  return h;
}

AffineCell affine_cell(const PiecewiseAffineConvex& f, const RVec& x) {
  return affine_cell(f, x, f.box());
}

AffineCell affine_cell(const PiecewiseAffineConvex& f, const RVec& x, const Box& box) {
  if (!box.contains(x)) throw std::invalid_argument("point outside the domain box");
  CellConstraints c;
  add_cell_constraints(f, x, c);
  Polytope cell = solve_cell(f.dim(), x, std::move(c), box);
  RMat dirs = cell.direction_basis();
  return {x, std::move(cell), std::move(dirs)};
}

FunctionVerdict fcn_classify(const std::vector<PiecewiseAffineConvex>& f, const RVec& x) {
  require_common_dim(f, false);
  const int n = f.front().dim();
  const int m = static_cast<int>(f.size());
  const Box& box = f.front().box();
  std::vector<RMat> perp;
  for (const auto& g : f)
    perp.push_back(orthogonal_complement(affine_cell(g, x, box).direction_space, n));

  FunctionVerdict v;
  v.x = x;
  for (const auto& subset : detail::subsets_by_size(m)) {
    const AffineCell sum_cell = affine_cell(sum_of(f, subset), x, box);
    CellConstraints meet;
    for (int i : subset) add_cell_constraints(f[i], x, meet);
    if (!(solve_cell(n, x, std::move(meet), box) == sum_cell.cell))
      throw VerificationError("affine cell of a sum differs from the intersection at " +
                              to_string(x));
    if (n - sum_cell.dim() < static_cast<int>(subset.size())) v.failing_sets.push_back(subset);
  }
  v.extreme = v.failing_sets.empty();
  const std::vector<int> picks = detail::independent_transversal(perp, n);
  if (picks.empty() == v.extreme)
    throw VerificationError("line witness disagrees with function extremality at " +
                            to_string(x));
  if (v.extreme)
    for (int i = 0; i < m; ++i) v.line_witness.emplace_back(perp[i][picks[i]]);
  return v;
}

bool FunctionSchneiderReport::ok() const { return n == 2 ? equal : inclusion; }

FunctionSchneiderReport fcn_schneider_verify(const std::vector<PiecewiseAffineConvex>& f,
                                             Execution exec) {
  require_common_dim(f, true);
  FunctionSchneiderReport r;
  r.n = f.front().dim();
  const Box& box = f.front().box();
  r.measure = mixed_hessian_atoms(f, exec);
  for (const auto& x : r.measure.support())
    if (box.interior_contains(x)) r.atom_points.push_back(x);

  std::vector<RVec> cands;
  for (const auto& x : crease_vertices(f))
    if (box.interior_contains(x)) cands.push_back(x);
  std::vector<char> extreme(cands.size(), 0);
  detail::parallel_for(exec, static_cast<long>(cands.size()),
                       [&](long i) { extreme[i] = fcn_classify(f, cands[i]).extreme; });
  for (std::size_t i = 0; i < cands.size(); ++i)
    if (extreme[i]) r.extreme_points.push_back(cands[i]);
  r.equal = r.atom_points == r.extreme_points;
  r.inclusion = std::includes(r.extreme_points.begin(), r.extreme_points.end(),
                              r.atom_points.begin(), r.atom_points.end());
  return r;
}

RulingSegment ruling(const PiecewiseAffineConvex& f, const PiecewiseAffineConvex& g, const Box& d,
                     const RVec& x) {
  if (f.dim() != 2 || g.dim() != 2 || d.dim() != 2)
    throw std::invalid_argument("ruling works in the plane");
  for (const auto& p : mixed_hessian_atoms({f, g}).support())
    if (d.interior_contains(p)) throw std::invalid_argument("measure nonzero on D");
  if (!d.interior_contains(x)) throw std::invalid_argument("x not in D");
  if (affine_cell(f, x, d).dim() == 2 || affine_cell(g, x, d).dim() == 2)
    throw std::invalid_argument("x in R");

  const AffineCell common = affine_cell(f + g, x, d);
  if (common.dim() != 1) throw VerificationError("no common affine line through " + to_string(x));
  RulingSegment s{common.cell.vertices()[0], common.cell.vertices()[1], {}};
  s.direction = Direction(sub(s.b, s.a));

  // A convex function meeting its chord at the midpoint equals the chord.
  const RVec mid = scale(add(s.a, s.b), Rational(1, 2));
  for (const auto* h : {&f, &g}) {
    if ((*h)(mid) * 2 != (*h)(s.a) + (*h)(s.b))
      throw VerificationError("function not affine on the ruling segment");
    if (affine_cell(*h, mid, d).dim() == 2)
      throw VerificationError("ruling segment meets the planar region");
  }
  return s;
}

}  // namespace mixvol
