#include "mixvol/polytope.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <mutex>
#include <set>
#include <stdexcept>

namespace mixvol {

struct Polytope::Impl {
  int n = 0;
  int k = 0;  // affine dimension
  std::vector<RVec> vertices;
  std::vector<Facet> facets;
  RMat direction_basis;
  RMat lineality;
  Rational volume;  // zero unless k == n

  mutable std::once_flag faces_once;
  mutable std::vector<Face> faces;
};

namespace {

using Wide = __int128;

Rational to_rational(const Rational& x) { return x; }
Rational to_rational(Wide x) {
  const bool neg = x < 0;
  unsigned __int128 m = neg ? -static_cast<unsigned __int128>(x) : static_cast<unsigned __int128>(x);
  Integer hi(static_cast<unsigned long>(m >> 64));
  Integer lo(static_cast<unsigned long>(m & ~0UL));
  Integer v = (hi << 64) + lo;
  return Rational(neg ? Integer(-v) : v);
}

Wide abs_value(Wide x) { return x < 0 ? -x : x; }
Rational abs_value(const Rational& x) { return abs(x); }

template <class T>
using TVec = std::vector<T>;

template <class T>
T tdot(const TVec<T>& a, const TVec<T>& b) {
  T s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

template <class T>
using Rows = std::array<std::array<T, kMaxAmbientDim>, kMaxAmbientDim>;

// Laplace expansion of the minor formed by rows [row, nrows) and the columns
// below ncols that are not in `used`; at most 4x4, no allocation.
template <class T>
T minor_det(const Rows<T>& m, int nrows, int row, unsigned used, int ncols) {
  if (row == nrows) return T(1);
  T total = 0;
  bool negative = false;
  for (int c = 0; c < ncols; ++c) {
    if (used >> c & 1u) continue;
    if (m[row][c] != 0) {
      const T term = m[row][c] * minor_det(m, nrows, row + 1, used | (1u << c), ncols);
      if (negative)
        total -= term;
      else
        total += term;
    }
    negative = !negative;
  }
  return total;
}

void normalize(TVec<Wide>& v) {
  Wide g = 0;
  for (Wide x : v) {
    Wide a = abs_value(x);
    while (a != 0) {
      const Wide t = g % a;
      g = a;
      a = t;
    }
  }
  if (g > 1)
    for (auto& x : v) x /= g;
}
void normalize(TVec<Rational>& v) { v = primitive(v); }

template <class T>
struct Simplex {
  std::vector<int> v;
  TVec<T> normal;
  T offset;
  bool alive = true;
};

// Placing triangulation of the boundary of conv(points) in k dimensions,
// exact in T. `init` holds k+1 affinely independent point indices.
template <class T>
std::vector<Simplex<T>> beneath_beyond(const std::vector<TVec<T>>& pts, int k,
                                       const std::vector<int>& init) {
  // Orientation reference: the centroid of the initial simplex, kept scaled
  // by k+1 so it stays integral.
  TVec<T> interior(static_cast<std::size_t>(k), T(0));
  for (int i : init)
    for (int c = 0; c < k; ++c) interior[c] += pts[i][c];
  const T count = static_cast<long>(init.size());

  auto make = [&](std::vector<int> verts) {
    std::sort(verts.begin(), verts.end());
    Rows<T> diffs;
    for (int i = 1; i < k; ++i)
      for (int c = 0; c < k; ++c) diffs[i - 1][c] = pts[verts[i]][c] - pts[verts[0]][c];
    Simplex<T> s;
    s.normal.resize(static_cast<std::size_t>(k));
    for (int j = 0; j < k; ++j) {
      const T m = minor_det(diffs, k - 1, 0, 1u << j, k);
      s.normal[j] = j % 2 == 0 ? m : T(-m);
    }
    normalize(s.normal);
    s.offset = tdot(s.normal, pts[verts[0]]);
    if (tdot(s.normal, interior) > count * s.offset) {
      for (auto& x : s.normal) x = -x;
      s.offset = -s.offset;
    }
    s.v = std::move(verts);
    return s;
  };

  std::vector<Simplex<T>> facets;
  for (std::size_t omit = 0; omit < init.size(); ++omit) {
    std::vector<int> verts;
    for (std::size_t i = 0; i < init.size(); ++i)
      if (i != omit) verts.push_back(init[i]);
    facets.push_back(make(std::move(verts)));
  }

  std::vector<bool> used(pts.size(), false);
  for (int i : init) used[i] = true;

  std::map<std::vector<int>, int> ridges;
  for (int p = 0; p < static_cast<int>(pts.size()); ++p) {
    if (used[p]) continue;
    bool any = false;
    for (auto& f : facets)
      if (tdot(f.normal, pts[p]) > f.offset) {
        f.alive = false;
        any = true;
      }
    if (!any) continue;
    ridges.clear();
    for (const auto& f : facets) {
      if (f.alive) continue;
      for (std::size_t omit = 0; omit < f.v.size(); ++omit) {
        std::vector<int> ridge;
        ridge.reserve(f.v.size());
        for (std::size_t i = 0; i < f.v.size(); ++i)
          if (i != omit) ridge.push_back(f.v[i]);
        ++ridges[std::move(ridge)];
      }
    }
    std::vector<Simplex<T>> next;
    next.reserve(facets.size() + ridges.size());
    for (auto& f : facets)
      if (f.alive) next.push_back(std::move(f));
    for (const auto& [ridge, c] : ridges) {
      if (c != 1) continue;
      std::vector<int> verts = ridge;
      verts.push_back(p);
      next.push_back(make(std::move(verts)));
    }
    facets = std::move(next);
  }
  return facets;
}

struct ChartHull {
  // Supporting hyperplanes of the facets in chart coordinates, with the
  // indices of the input points on each.
  struct Plane {
    RVec normal;
    Rational offset;
    std::vector<int> points;
  };
  std::vector<Plane> planes;
  std::vector<int> boundary;
  Rational volume;  // k-volume in chart units (only meaningful when k == n)
};

template <class T>
ChartHull chart_hull(const std::vector<TVec<T>>& pts, int k, const std::vector<int>& init,
                     const Rational& unit) {
  const auto tri = beneath_beyond(pts, k, init);
  std::map<TVec<T>, T> planes;
  std::set<int> boundary;
  for (const auto& s : tri) {
    planes.emplace(s.normal, s.offset);
    boundary.insert(s.v.begin(), s.v.end());
  }
  ChartHull out;
  out.boundary.assign(boundary.begin(), boundary.end());
  for (const auto& [normal, offset] : planes) {
    ChartHull::Plane g;
    for (const auto& x : normal) g.normal.push_back(to_rational(x));
    g.offset = to_rational(offset);
    for (int b : out.boundary)
      if (tdot(normal, pts[b]) == offset) g.points.push_back(b);
    out.planes.push_back(std::move(g));
  }
  // Cone over the boundary from point 0, the lexicographically least vertex.
  out.volume = 0;
  for (const auto& s : tri) {
    Rows<T> m;
    for (int i = 0; i < k; ++i)
      for (int c = 0; c < k; ++c) m[i][c] = pts[s.v[i]][c] - pts[0][c];
    const T det = minor_det(m, k, 0, 0u, k);
    if (det != 0) out.volume += to_rational(abs_value(det));
  }
  out.volume *= unit;
  return out;
}

// Chart coordinates scaled to a common denominator, if they are small enough
// for 128-bit arithmetic: normals are 3x3 minors and volumes 4x4 determinants.
bool integral_chart(const std::vector<RVec>& chart, std::vector<TVec<Wide>>& out, Integer& scale) {
  scale = 1;
  for (const auto& p : chart)
    for (const auto& x : p) scale = lcm(scale, Integer(x.get_den()));
  const Integer bound = Integer(1) << 24;
  out.clear();
  out.reserve(chart.size());
  for (const auto& p : chart) {
    TVec<Wide> q;
    for (const auto& x : p) {
      const Integer v = x.get_num() * (scale / x.get_den());
      if (abs(v) >= bound) return false;
      q.push_back(static_cast<Wide>(v.get_si()));
    }
    out.push_back(std::move(q));
  }
  return true;
}

RVec restrict_coords(const RVec& x, const std::vector<int>& pivots) {
  RVec y;
  y.reserve(pivots.size());
  for (int p : pivots) y.push_back(x[p]);
  return y;
}

Rational factorial(int k) {
  Rational f = 1;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

int affine_rank(const std::vector<RVec>& pts, int n) {
  if (pts.empty()) return -1;
  RMat diffs;
  for (std::size_t i = 1; i < pts.size(); ++i) diffs.push_back(sub(pts[i], pts[0]));
  return rank(diffs, n);
}

}  // namespace

Polytope Polytope::hull(const std::vector<RVec>& points, int n) {
  if (n < 1 || n > kMaxAmbientDim)
    throw std::invalid_argument("unsupported ambient dimension " + std::to_string(n));
  if (points.empty()) throw std::invalid_argument("hull of an empty point set");
  for (const auto& p : points)
    if (static_cast<int>(p.size()) != n) throw std::invalid_argument("point dimension mismatch");

  std::vector<RVec> pts = points;
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

  auto impl = std::make_shared<Impl>();
  impl->n = n;

  // Affine hull and an initial simplex.
  std::vector<int> init{0};
  RMat dirs;
  for (int i = 1; i < static_cast<int>(pts.size()) && static_cast<int>(dirs.size()) < n; ++i) {
    RMat trial = dirs;
    trial.push_back(sub(pts[i], pts[0]));
    if (rank(trial, n) > static_cast<int>(dirs.size())) {
      dirs = std::move(trial);
      init.push_back(i);
    }
  }
  const int k = static_cast<int>(dirs.size());
  impl->k = k;
  impl->direction_basis = dirs;
  impl->lineality = canonical_basis(kernel(dirs, n), n);

  if (k == 0) {
    impl->vertices = {pts[0]};
    Polytope out;
    out.impl_ = std::move(impl);
    return out;
  }

  const std::vector<int> pivots = rref(dirs, n).pivots;
  std::vector<RVec> chart;
  chart.reserve(pts.size());
  for (const auto& p : pts) chart.push_back(restrict_coords(p, pivots));

  ChartHull ch;
  std::vector<TVec<Wide>> ichart;
  Integer denom;
  if (integral_chart(chart, ichart, denom)) {
    Rational unit = 1;
    for (int i = 0; i < k; ++i) unit /= Rational(denom);
    ch = chart_hull(ichart, k, init, unit);
  } else {
    ch = chart_hull(chart, k, init, Rational(1));
  }
  auto& groups = ch.planes;
  const auto& boundary = ch.boundary;

  std::map<int, int> vertex_index;  // pts index -> vertex index
  for (int b : boundary) {
    RMat normals;
    for (const auto& g : groups)
      if (std::binary_search(g.points.begin(), g.points.end(), b)) normals.push_back(g.normal);
    if (rank(normals, k) == k) {
      const int idx = static_cast<int>(impl->vertices.size());
      vertex_index[b] = idx;
      impl->vertices.push_back(pts[b]);
    }
  }

  RMat gram;
  if (k < n) {
    gram.assign(static_cast<std::size_t>(k), RVec(static_cast<std::size_t>(k)));
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) gram[i][j] = dot(dirs[i], dirs[j]);
  }
  for (const auto& g : groups) {
    Facet f;
    if (k == n) {
      f.normal = Direction(g.normal);
    } else {
      RVec rhs(static_cast<std::size_t>(k));
      for (int i = 0; i < k; ++i) rhs[i] = dot(g.normal, restrict_coords(dirs[i], pivots));
      const RVec alpha = *solve(gram, rhs);
      RVec w = zeros(n);
      for (int i = 0; i < k; ++i) w = add(w, scale(dirs[i], alpha[i]));
      f.normal = Direction(w);
    }
    for (int b : g.points) {
      auto it = vertex_index.find(b);
      if (it != vertex_index.end()) f.vertices.push_back(it->second);
    }
    f.offset = dot(f.normal, impl->vertices[f.vertices.front()]);
    impl->facets.push_back(std::move(f));
  }
  std::sort(impl->facets.begin(), impl->facets.end(),
            [](const Facet& a, const Facet& b) { return a.normal < b.normal; });

  if (k == n) impl->volume = ch.volume / factorial(n);

  Polytope out;
  out.impl_ = std::move(impl);
  return out;
}

int Polytope::ambient_dim() const { return impl_->n; }
int Polytope::dim() const { return impl_->k; }
const std::vector<RVec>& Polytope::vertices() const { return impl_->vertices; }
const std::vector<Facet>& Polytope::facets() const { return impl_->facets; }
const RMat& Polytope::direction_basis() const { return impl_->direction_basis; }
const RMat& Polytope::lineality() const { return impl_->lineality; }

Rational Polytope::support_value(const RVec& w) const {
  const auto& vs = impl_->vertices;
  Rational best = dot(w, vs[0]);
  for (std::size_t i = 1; i < vs.size(); ++i) {
    Rational v = dot(w, vs[i]);
    if (v > best) best = v;
  }
  return best;
}

Face Polytope::exposed_face(const RVec& w) const {
  const Rational h = support_value(w);
  Face f;
  std::vector<RVec> pts;
  for (int i = 0; i < static_cast<int>(impl_->vertices.size()); ++i)
    if (dot(w, impl_->vertices[i]) == h) {
      f.vertices.push_back(i);
      pts.push_back(impl_->vertices[i]);
    }
  f.dim = affine_rank(pts, impl_->n);
  return f;
}

Polytope Polytope::face_polytope(const Face& f) const {
  std::vector<RVec> pts;
  for (int i : f.vertices) pts.push_back(impl_->vertices.at(static_cast<std::size_t>(i)));
  return hull(pts, impl_->n);
}

Face Polytope::whole() const {
  Face f;
  for (int i = 0; i < static_cast<int>(impl_->vertices.size()); ++i) f.vertices.push_back(i);
  f.dim = impl_->k;
  return f;
}

bool Polytope::is_face(const Face& f) const {
  if (f.vertices.empty()) return false;
  for (int i : f.vertices)
    if (i < 0 || i >= static_cast<int>(impl_->vertices.size())) return false;
  RVec w = zeros(impl_->n);
  for (const auto& facet : impl_->facets)
    if (std::includes(facet.vertices.begin(), facet.vertices.end(), f.vertices.begin(),
                      f.vertices.end()))
      w = add(w, facet.normal.vec());
  return exposed_face(w).vertices == f.vertices;
}

const std::vector<Face>& Polytope::faces() const {
  std::call_once(impl_->faces_once, [this] {
    std::set<std::vector<int>> seen;
    std::vector<std::vector<int>> queue;
    const Face all = whole();
    seen.insert(all.vertices);
    queue.push_back(all.vertices);
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      const std::vector<int> cur = queue[qi];
      for (const auto& facet : impl_->facets) {
        std::vector<int> meet;
        std::set_intersection(cur.begin(), cur.end(), facet.vertices.begin(), facet.vertices.end(),
                              std::back_inserter(meet));
        if (meet.empty() || meet == cur) continue;
        if (seen.insert(meet).second) queue.push_back(meet);
      }
    }
    std::vector<Face> out;
    for (const auto& vs : seen) {
      Face f;
      f.vertices = vs;
      std::vector<RVec> pts;
      for (int i : vs) pts.push_back(impl_->vertices[i]);
      f.dim = affine_rank(pts, impl_->n);
      out.push_back(std::move(f));
    }
    std::sort(out.begin(), out.end());
    impl_->faces = std::move(out);
  });
  return impl_->faces;
}

std::vector<Direction> Polytope::facet_directions() const {
  std::vector<Direction> out;
  if (impl_->k == impl_->n) {
    for (const auto& f : impl_->facets) out.push_back(f.normal);
  } else if (impl_->k == impl_->n - 1) {
    const Direction d(impl_->lineality.front());
    out.push_back(d);
    out.push_back(-d);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool Polytope::contains(const RVec& x) const {
  const RVec& x0 = impl_->vertices.front();
  for (const auto& l : impl_->lineality)
    if (dot(l, x) != dot(l, x0)) return false;
  for (const auto& f : impl_->facets)
    if (dot(f.normal, x) > f.offset) return false;
  return true;
}

bool Polytope::interior_contains(const RVec& x) const {
  if (impl_->k != impl_->n) return false;
  for (const auto& f : impl_->facets)
    if (dot(f.normal, x) >= f.offset) return false;
  return true;
}

std::vector<Halfspace> Polytope::halfspaces() const {
  std::vector<Halfspace> out;
  for (const auto& f : impl_->facets) out.push_back({f.normal, f.offset});
  return out;
}

Rational Polytope::volume() const { return impl_->volume; }

Polytope Polytope::translated(const RVec& t) const {
  std::vector<RVec> pts;
  for (const auto& v : impl_->vertices) pts.push_back(add(v, t));
  return hull(pts, impl_->n);
}

Polytope Polytope::scaled(const Rational& s) const {
  std::vector<RVec> pts;
  for (const auto& v : impl_->vertices) pts.push_back(scale(v, s));
  return hull(pts, impl_->n);
}

std::pair<Rational, Polytope> support(const Polytope& k, const Direction& w) {
  const RVec wv = w.vec();
  return {k.support_value(wv), k.face_polytope(k.exposed_face(wv))};
}

Cone normal_cone(const Polytope& k, const Face& f) {
  if (!k.is_face(f)) throw std::invalid_argument("not a face of the polytope");
  std::vector<Direction> gens;
  for (const auto& facet : k.facets())
    if (std::includes(facet.vertices.begin(), facet.vertices.end(), f.vertices.begin(),
                      f.vertices.end()))
      gens.push_back(facet.normal);
  return Cone::from_canonical(k.ambient_dim(), std::move(gens), k.lineality());
}

Cone touching_cone(const Polytope& k, const Direction& u) {
  const RVec uv = u.vec();
  const Cone n = normal_cone(k, k.exposed_face(uv));
  Cone t = n.face_containing(uv);
  if (t != n) throw std::logic_error("touching cone differs from normal cone for " + u.str());
  return t;
}

Polytope minkowski_sum(const Polytope& a, const Polytope& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw std::invalid_argument("dimension mismatch");
  std::vector<RVec> pts;
  pts.reserve(a.vertices().size() * b.vertices().size());
  for (const auto& x : a.vertices())
    for (const auto& y : b.vertices()) pts.push_back(add(x, y));
  return Polytope::hull(pts, a.ambient_dim());
}

Polytope minkowski_sum(const std::vector<Polytope>& bodies) {
  if (bodies.empty()) throw std::invalid_argument("empty Minkowski sum");
  Polytope acc = bodies.front();
  for (std::size_t i = 1; i < bodies.size(); ++i) acc = minkowski_sum(acc, bodies[i]);
  return acc;
}

HyperplaneFrame::HyperplaneFrame(const Direction& v) : normal_(v) {
  const int n = v.dim();
  int p = 0;
  while (v[p] == 0) ++p;
  const RVec vv = v.vec();
  for (int j = 0; j < n; ++j) {
    if (j == p) continue;
    RVec b = zeros(n);
    b[j] = vv[p];
    b[p] = -vv[j];
    basis_.push_back(primitive(b));
  }
  const int m = n - 1;
  RMat gram(static_cast<std::size_t>(m), RVec(static_cast<std::size_t>(m)));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) gram[i][j] = dot(basis_[i], basis_[j]);
  gram_det_ = determinant(gram);
  gram_inv_.assign(static_cast<std::size_t>(m), RVec(static_cast<std::size_t>(m)));
  for (int c = 0; c < m; ++c) {
    const RVec col = *solve(gram, unit_vector(m, c));
    for (int r = 0; r < m; ++r) gram_inv_[r][c] = col[r];
  }
  // det(B^T B) = index^2 |v|^2 for a full-rank sublattice of v^perp ∩ Z^n.
  const Rational sq = gram_det_ / Rational(v.norm2());
  if (sq.get_den() != 1) throw std::logic_error("non-integral lattice index");
  Integer root;
  mpz_sqrt(root.get_mpz_t(), sq.get_num_mpz_t());
  if (root * root != sq.get_num()) throw std::logic_error("lattice index is not a perfect square");
  gram_factor_ = Rational(root);
}

RVec HyperplaneFrame::functional(const RVec& u) const {
  RVec out;
  out.reserve(basis_.size());
  for (const auto& b : basis_) out.push_back(dot(b, u));
  return out;
}

RVec HyperplaneFrame::coords(const RVec& x) const {
  const RVec bx = functional(x);
  RVec y(bx.size());
  for (std::size_t i = 0; i < bx.size(); ++i) y[i] = dot(gram_inv_[i], bx);
  return y;
}

RVec HyperplaneFrame::ambient_functional(const RVec& c) const {
  RVec g(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) g[i] = dot(gram_inv_[i], c);
  RVec w = zeros(normal_.dim());
  for (std::size_t i = 0; i < basis_.size(); ++i) w = add(w, scale(basis_[i], g[i]));
  return w;
}

Polytope project(const Polytope& k, const Direction& v) { return project(k, HyperplaneFrame(v)); }

Polytope project(const Polytope& k, const HyperplaneFrame& frame) {
  std::vector<RVec> pts;
  pts.reserve(k.vertices().size());
  for (const auto& x : k.vertices()) pts.push_back(frame.coords(x));
  return Polytope::hull(pts, k.ambient_dim() - 1);
}

Polytope polar(const Polytope& k) {
  const RVec origin = zeros(k.ambient_dim());
  if (!k.interior_contains(origin))
    throw std::invalid_argument("polar requires the origin in the interior");
  std::vector<RVec> pts;
  for (const auto& f : k.facets()) pts.push_back(scale(f.normal.vec(), 1 / f.offset));
  return Polytope::hull(pts, k.ambient_dim());
}

Rational volume(const Polytope& k) { return k.volume(); }

std::optional<Polytope> polytope_from_halfspaces(int n, const std::vector<Halfspace>& halfspaces,
                                                 const std::vector<Halfspace>& equalities) {
  RMat ineq_dirs, eq_rows;
  for (const auto& h : halfspaces) ineq_dirs.push_back(scale(h.normal.vec(), -1));
  for (const auto& e : equalities) eq_rows.push_back(e.normal.vec());
  const Cone recession = Cone::from_constraints(n, ineq_dirs, eq_rows);
  if (!recession.generators().empty() || !recession.lineality().empty())
    throw std::invalid_argument("halfspace system is unbounded");

  const int free = n - rank(eq_rows, n);
  RMat base;
  RVec base_rhs;
  for (const auto& e : equalities) {
    base.push_back(e.normal.vec());
    base_rhs.push_back(e.offset);
  }
  auto feasible = [&](const RVec& x) {
    for (const auto& e : equalities)
      if (dot(e.normal, x) != e.offset) return false;
    for (const auto& h : halfspaces)
      if (!h.contains(x)) return false;
    return true;
  };

  std::set<RVec> pts;
  const int m = static_cast<int>(halfspaces.size());
  if (free == 0) {
    if (auto x = solve(base, base_rhs); x && feasible(*x)) pts.insert(*x);
  } else if (free <= m) {
    std::vector<int> idx(static_cast<std::size_t>(free));
    for (int i = 0; i < free; ++i) idx[i] = i;
    while (true) {
      RMat a = base;
      RVec b = base_rhs;
      for (int i : idx) {
        a.push_back(halfspaces[i].normal.vec());
        b.push_back(halfspaces[i].offset);
      }
      if (rank(a, n) == n)
        if (auto x = solve(a, b); x && feasible(*x)) pts.insert(*x);
      int i = free - 1;
      while (i >= 0 && idx[i] == m - free + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < free; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  if (pts.empty()) return std::nullopt;
  return Polytope::hull(std::vector<RVec>(pts.begin(), pts.end()), n);
}

namespace shapes {

Polytope point(const RVec& p) { return Polytope::hull({p}, static_cast<int>(p.size())); }

Polytope segment(const RVec& a, const RVec& b) {
  return Polytope::hull({a, b}, static_cast<int>(a.size()));
}

Polytope box(const RVec& lo, const RVec& hi) {
  const int n = static_cast<int>(lo.size());
  std::vector<RVec> pts;
  for (int mask = 0; mask < (1 << n); ++mask) {
    RVec p(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) p[i] = (mask >> i & 1) ? hi[i] : lo[i];
    pts.push_back(std::move(p));
  }
  return Polytope::hull(pts, n);
}

Polytope unit_cube(int n) { return box(zeros(n), RVec(static_cast<std::size_t>(n), Rational(1))); }

Polytope cross_polytope(int n) {
  std::vector<RVec> pts;
  for (int i = 0; i < n; ++i) {
    pts.push_back(unit_vector(n, i));
    pts.push_back(scale(unit_vector(n, i), -1));
  }
  return Polytope::hull(pts, n);
}

Polytope standard_simplex(int n) {
  std::vector<RVec> pts{zeros(n)};
  for (int i = 0; i < n; ++i) pts.push_back(unit_vector(n, i));
  return Polytope::hull(pts, n);
}

}  // namespace shapes

}  // namespace mixvol
