#include "mixvol/cone.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace mixvol {

namespace {

void for_each_combination(int n, int k, const std::function<void(const std::vector<int>&)>& fn) {
  if (k < 0 || k > n) return;
  std::vector<int> idx(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    fn(idx);
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) return;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

bool satisfies(const RMat& ineq, const RVec& w) {
  for (const auto& a : ineq)
    if (dot(a, w) < 0) return false;
  return true;
}

}  // namespace

Cone Cone::from_canonical(int n, std::vector<Direction> generators, RMat lineality) {
  Cone c;
  c.n_ = n;
  std::sort(generators.begin(), generators.end());
  generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
  c.gens_ = std::move(generators);
  c.lin_ = std::move(lineality);
  return c;
}

Cone Cone::from_constraints(int n, const RMat& inequalities, const RMat& equalities) {
  RMat all;
  std::set<Direction> distinct;
  for (const auto& a : inequalities)
    if (!is_zero(a)) distinct.insert(Direction(a));
  RMat ineq;
  for (const auto& d : distinct) ineq.push_back(d.vec());
  all = ineq;
  for (const auto& e : equalities) all.push_back(e);

  RMat lin = canonical_basis(kernel(all, n), n);
  RMat fixed = equalities;
  for (const auto& l : lin) fixed.push_back(l);
  const int free_dim = n - rank(fixed, n);

  std::set<Direction> rays;
  if (free_dim >= 1) {
    const int k = free_dim - 1;
    for_each_combination(static_cast<int>(ineq.size()), k, [&](const std::vector<int>& subset) {
      RMat m = fixed;
      for (int i : subset) m.push_back(ineq[i]);
      if (rank(m, n) != n - 1) return;
      const RMat ker = kernel(m, n);
      const RVec& r = ker.front();
      if (satisfies(ineq, r)) rays.insert(Direction(r));
      const RVec neg = scale(r, -1);
      if (satisfies(ineq, neg)) rays.insert(Direction(neg));
    });
  }
  return from_canonical(n, std::vector<Direction>(rays.begin(), rays.end()), std::move(lin));
}

Cone Cone::from_generators(int n, const RMat& generators, const RMat& lineality) {
  const Cone d = from_constraints(n, generators, lineality);
  RMat rays;
  for (const auto& g : d.gens_) rays.push_back(g.vec());
  return from_constraints(n, rays, d.lin_);
}

int Cone::dim() const { return static_cast<int>(span_basis().size()); }

RMat Cone::span_basis() const {
  RMat all = lin_;
  for (const auto& g : gens_) all.push_back(g.vec());
  return canonical_basis(all, n_);
}

RMat Cone::orthogonal_basis() const {
  RMat all = lin_;
  for (const auto& g : gens_) all.push_back(g.vec());
  return canonical_basis(kernel(all, n_), n_);
}

const Cone::DualCache& Cone::dual_data() const {
  std::call_once(dual_->once, [this] {
    RMat g;
    for (const auto& d : gens_) g.push_back(d.vec());
    const Cone d = from_constraints(n_, g, lin_);
    dual_->rays = d.gens_;
    dual_->lineality = d.lin_;
  });
  return *dual_;
}

bool Cone::contains(const RVec& w) const {
  const auto& d = dual_data();
  for (const auto& l : d.lineality)
    if (dot(l, w) != 0) return false;
  for (const auto& r : d.rays)
    if (dot(r, w) < 0) return false;
  return true;
}

bool Cone::relint_contains(const RVec& w) const {
  const auto& d = dual_data();
  for (const auto& l : d.lineality)
    if (dot(l, w) != 0) return false;
  for (const auto& r : d.rays)
    if (dot(r, w) <= 0) return false;
  return true;
}

Cone Cone::face_containing(const RVec& w) const {
  const auto& d = dual_data();
  std::vector<RVec> tight;
  for (const auto& r : d.rays)
    if (dot(r, w) == 0) tight.push_back(r.vec());
  std::vector<Direction> face_gens;
  for (const auto& g : gens_) {
    const RVec gv = g.vec();
    bool in_face = true;
    for (const auto& t : tight)
      if (dot(t, gv) != 0) {
        in_face = false;
        break;
      }
    if (in_face) face_gens.push_back(g);
  }
  return from_canonical(n_, std::move(face_gens), lin_);
}

Cone Cone::dual() const {
  const auto& d = dual_data();
  return from_canonical(n_, d.rays, d.lineality);
}

Cone Cone::intersect(const Cone& other) const {
  const auto& a = dual_data();
  const auto& b = other.dual_data();
  RMat ineq, eq;
  for (const auto& r : a.rays) ineq.push_back(r.vec());
  for (const auto& r : b.rays) ineq.push_back(r.vec());
  eq = a.lineality;
  for (const auto& l : b.lineality) eq.push_back(l);
  return from_constraints(n_, ineq, eq);
}

Cone Cone::intersect_subspace(const RMat& normals) const {
  const auto& a = dual_data();
  RMat ineq;
  for (const auto& r : a.rays) ineq.push_back(r.vec());
  RMat eq = a.lineality;
  for (const auto& e : normals) eq.push_back(e);
  return from_constraints(n_, ineq, eq);
}

bool Cone::subset_of(const Cone& other) const {
  for (const auto& g : gens_)
    if (!other.contains(g.vec())) return false;
  for (const auto& l : lin_)
    if (!other.contains(l) || !other.contains(scale(l, -1))) return false;
  return true;
}

}  // namespace mixvol
