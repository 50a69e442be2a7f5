// Acceptance suite: one PASS/FAIL line per criterion. The whole suite runs
// twice with the same seed and the two reports must match byte for byte.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "mixvol/appendix.hpp"
#include "mixvol/extremality.hpp"
#include "mixvol/hessian.hpp"
#include "mixvol/io.hpp"
#include "mixvol/mixed_volume.hpp"
#include "mixvol/smooth.hpp"
#include "support.hpp"

using namespace mixvol;
using io::Json;
using testing::random_body;
using testing::random_pa_function;
using testing::random_point;
using testing::random_polytope;
using testing::random_ridge;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
  void expect(bool ok, const std::string& why) {
    if (!ok) fail(why);
  }
};

struct SuiteResult {
  std::vector<Outcome> outcomes;  // criteria 1..9
  Json report;
  double schneider_seconds = 0;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::vector<Polytope> random_tuple(std::mt19937_64& rng, int n, int count, int max_points) {
  std::vector<Polytope> out;
  for (int i = 0; i < count; ++i) out.push_back(random_body(rng, n, max_points));
  return out;
}

RVec random_box_point(std::mt19937_64& rng, const Box& box) {
  std::uniform_int_distribution<int> step(1, 127);
  RVec x;
  for (int i = 0; i < box.dim(); ++i)
    x.push_back(box.lo[i] + (box.hi[i] - box.lo[i]) * ratio(step(rng), 128));
  return x;
}

Json measure_json(const PlaneMeasure& m) { return io::to_json(m); }

// Criteria 1-3 share the instances of the Schneider suite.
void schneider_suite(std::uint64_t seed, SuiteResult& s) {
  Outcome c1, c2, c3;
  std::mt19937_64 rng(seed);
  struct Family {
    int n, count, tuples, max_points;
    bool repeated;  // (C, C) rather than (C1, C2)
  };
  const std::vector<Family> families = {
      {2, 1, 80, 7, false}, {3, 2, 50, 6, true}, {3, 2, 50, 6, false}, {4, 3, 20, 5, false}};
  Json instances = Json::array();
  int total = 0;
  const auto t0 = Clock::now();
  for (const auto& fam : families)
    for (int k = 0; k < fam.tuples; ++k) {
      std::vector<Polytope> tuple = random_tuple(rng, fam.n, fam.count, fam.max_points);
      if (fam.repeated) tuple.back() = tuple.front();
      const std::string tag = "R^" + std::to_string(fam.n) + " tuple " + std::to_string(k);
      ++total;
      Json entry = {{"n", fam.n}};
      try {
        const SchneiderReport r = schneider_verify(tuple);
        c1.expect(r.equal, tag + ": atom support differs from the extreme set");
        c3.expect(r.nonexposed_atoms.empty() && r.unlisted_atoms.empty(),
                  tag + ": mass at a non-exposed fan ray");
        entry["atom_support"] = io::directions_to_json(r.atom_support);
        entry["extreme_set"] = io::directions_to_json(r.extreme_set);
        entry["nonexposed_atoms"] = r.nonexposed_atoms.size();
        entry["fan_rays_checked"] = r.fan_rays_checked;
      } catch (const std::exception& e) {
        c1.fail(tag + ": " + e.what());
        c3.fail(tag + ": " + e.what());
      }
      std::vector<Polytope> full = tuple;
      full.push_back(tuple.front());
      try {
        const MixedVolumeReport mv = mixed_volume(full);
        c2.expect(mv.method_a == mv.method_b, tag + ": interpolation and integration differ");
        entry["interpolation"] = io::to_json(mv.method_a);
        entry["integration"] = io::to_json(mv.method_b);
      } catch (const std::exception& e) {
        c2.fail(tag + ": " + e.what());
      }
      instances.push_back(entry);
    }
  s.schneider_seconds = seconds_since(t0);
  c1.expect(total >= 200, "fewer than 200 tuples");

  const auto e = [](int n, int i) {
    RVec v(n, Rational(0));
    v[i] = 1;
    return v;
  };
  const Rational v_i1_i2 = mixed_volume({shapes::segment(e(2, 0), RVec(2, 0)),
                                         shapes::segment(RVec(2, 0), e(2, 1))})
                               .value;
  const Rational v_cube = mixed_volume({shapes::unit_cube(3), shapes::unit_cube(3),
                                        shapes::segment(RVec(3, 0), e(3, 2))})
                              .value;
  c2.expect(v_i1_i2 == ratio(1, 2), "V(I1,I2) != 1/2");
  c2.expect(v_cube == ratio(1, 3), "V(cube,cube,[0,e3]) != 1/3");

  s.report["schneider"] = {{"instances", instances},
                           {"V(I1,I2)", io::to_json(v_i1_i2)},
                           {"V(cube,cube,[0,e3])", io::to_json(v_cube)}};
  s.outcomes[0] = c1;
  s.outcomes[1] = c2;
  s.outcomes[2] = c3;
}

// Equality case: S_{K,C} = V(K,K,C)/V(K,L,C) S_{L,C} at every atom, with the
// mixed volumes taken from interpolation rather than polarization.
bool proportional_measures(const Polytope& k, const Polytope& l, const std::vector<Polytope>& c) {
  std::vector<Polytope> kl{k, l}, kk{k, k}, kc{k}, lc{l};
  for (const auto& p : c) {
    kl.push_back(p);
    kk.push_back(p);
    kc.push_back(p);
    lc.push_back(p);
  }
  const Rational ratio_kl = mixed_volume_interpolated(kk) / mixed_volume_interpolated(kl);
  const SphereMeasure sk = mixed_area_atoms(kc), sl = mixed_area_atoms(lc);
  std::set<Direction> dirs;
  for (const auto& w : sk.support()) dirs.insert(w);
  for (const auto& w : sl.support()) dirs.insert(w);
  for (const auto& w : dirs)
    if (sk.scale_at(w) != ratio_kl * sl.scale_at(w)) return false;
  return true;
}

void af_suite(std::uint64_t seed, SuiteResult& s) {
  Outcome c4;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coin(0, 3), factor(1, 3);
  int equalities = 0, positive_equalities = 0;
  Json log = Json::array();
  for (int trial = 0; trial < 500; ++trial) {
    const int n = 2 + trial % 2;
    const std::string tag = "triple " + std::to_string(trial);
    const Polytope k = random_body(rng, n, n + 3);
    // A quarter of the pairs are homothetic, so equality cases do occur.
    const Polytope l = coin(rng) == 0 ? k.scaled(factor(rng)).translated(random_point(rng, n, 2))
                                      : random_body(rng, n, n + 3);
    std::vector<Polytope> c;
    for (int i = 0; i < n - 2; ++i) c.push_back(random_body(rng, n, n + 3));
    try {
      const AFReport r = af_check(k, l, c);
      c4.expect(r.lhs >= r.rhs, tag + ": inequality fails");
      if (r.equality) {
        ++equalities;
        if (r.equality_measure_match.has_value()) {
          ++positive_equalities;
          c4.expect(proportional_measures(k, l, c), tag + ": equality without proportional measures");
        }
      }
      log.push_back(Json::array({io::to_json(r.lhs), io::to_json(r.rhs)}));
    } catch (const std::exception& e) {
      c4.fail(tag + ": " + e.what());
    }
  }
  c4.expect(positive_equalities > 0, "no equality case with V(K,L,C) > 0 was exercised");
  s.report["alexandrov_fenchel"] = {
      {"pairs", log}, {"equalities", equalities}, {"positive_equalities", positive_equalities}};
  s.outcomes[3] = c4;
}

void hessian_suite(std::uint64_t seed, SuiteResult& s) {
  Outcome c5;
  std::mt19937_64 rng(seed);
  Json log = Json::array();
  for (int trial = 0; trial < 100; ++trial) {
    const int n = trial < 80 ? 2 : 3;
    const std::string tag = "instance " + std::to_string(trial);
    std::vector<PiecewiseAffineConvex> fs;
    for (int i = 0; i < n; ++i) fs.push_back(random_pa_function(rng, n, n == 2 ? 2 + trial % 4 : 3));
    try {
      const PlaneMeasure h = mixed_hessian_atoms(fs);
      c5.expect(h == ma_oracle(fs), tag + ": sphere route differs from the Monge-Ampere oracle");
      log.push_back(measure_json(h));
      for (const auto& f : fs) {
        const Polytope lift = lift_body(f);
        for (int i = 0; i < 100; ++i) {
          RVec x = random_box_point(rng, f.box());
          const Rational fx = f(x);
          x.push_back(-1);
          c5.expect(lift.support_value(x) == fx, tag + ": support identity fails");
        }
      }
    } catch (const std::exception& e) {
      c5.fail(tag + ": " + e.what());
    }
  }
  const Box unit = functions::cube_box(2, 1);
  const auto mx = functions::max_norm(2, unit), ab = functions::abs_coordinate(2, 0, unit);
  const RVec origin(2, Rational(0));
  const Rational mm = mixed_hessian_atoms({mx, mx}).mass_at(origin);
  const Rational ma = mixed_hessian_atoms({mx, ab}).mass_at(origin);
  c5.expect(mm == 2, "H(max,max)({0}) != 2");
  c5.expect(ma == 2, "H(max,|x1|)({0}) != 2");
  s.report["hessian"] = {{"measures", log}, {"H(max,max)", io::to_json(mm)}, {"H(max,abs)", io::to_json(ma)}};
  s.outcomes[4] = c5;
}

void function_schneider_suite(std::uint64_t seed, SuiteResult& s) {
  Outcome c6;
  std::mt19937_64 rng(seed);
  Json log = Json::array();
  for (int trial = 0; trial < 150; ++trial) {
    const bool pair = trial < 100;
    const std::string tag = (pair ? "pair " : "triple ") + std::to_string(trial);
    std::vector<PiecewiseAffineConvex> fs;
    if (pair) {
      fs = {random_pa_function(rng, 2, 2 + trial % 4), random_pa_function(rng, 2, 3)};
    } else {
      for (int i = 0; i < 3; ++i) fs.push_back(random_pa_function(rng, 3, 3));
    }
    try {
      const FunctionSchneiderReport r = fcn_schneider_verify(fs);
      c6.expect(pair ? r.equal : r.inclusion, tag + (pair ? ": sets differ" : ": atom not extreme"));
      log.push_back(io::to_json(r));
    } catch (const std::exception& e) {
      c6.fail(tag + ": " + e.what());
    }
  }
  s.report["function_schneider"] = log;
  s.outcomes[5] = c6;
}

bool on_boundary(const RVec& x, const Box& d) {
  for (int i = 0; i < d.dim(); ++i)
    if (x[i] == d.lo[i] || x[i] == d.hi[i]) return true;
  return false;
}

void ruling_suite(std::uint64_t seed, SuiteResult& s) {
  Outcome c7;
  std::mt19937_64 rng(seed);
  const Box d = functions::cube_box(2, 4);
  Json segments = Json::array();
  int found = 0;
  for (int trial = 0; trial < 40; ++trial) {
    const RVec c = primitive(random_point(rng, 2, 2));
    if (is_zero(c)) continue;
    const auto f = random_ridge(rng, c, d);
    const auto g = f + random_ridge(rng, c, d);
    for (std::size_t i = 0; i < f.pieces().size(); ++i)
      for (std::size_t j = i + 1; j < f.pieces().size(); ++j) {
        const Rational dc = dot(sub(f.pieces()[i].a, f.pieces()[j].a), c);
        if (dc == 0) continue;
        const RVec x = scale(c, (f.pieces()[i].b - f.pieces()[j].b) / dc / dot(c, c));
        if (!d.interior_contains(x) || affine_cell(f, x, d).dim() == 2) continue;
        if (affine_cell(g, x, d).dim() == 2) continue;
        const std::string tag = "ridge pair " + std::to_string(trial);
        try {
          const RulingSegment r = ruling(f, g, d, x);
          ++found;
          c7.expect(on_boundary(r.a, d) && on_boundary(r.b, d), tag + ": segment stops inside D");
          // Exact affinity along the segment: all second differences vanish.
          const RVec step = scale(sub(r.b, r.a), ratio(1, 16));
          std::vector<RVec> pts;
          for (int k = 0; k <= 16; ++k) pts.push_back(add(r.a, scale(step, k)));
          for (int k = 1; k < 16; ++k) {
            c7.expect(f(pts[k - 1]) + f(pts[k + 1]) == 2 * f(pts[k]), tag + ": f bends");
            c7.expect(g(pts[k - 1]) + g(pts[k + 1]) == 2 * g(pts[k]), tag + ": g bends");
            // No point of the segment lies where f or g is locally affine.
            c7.expect(affine_cell(f, pts[k], d).dim() < 2 && affine_cell(g, pts[k], d).dim() < 2,
                      tag + ": segment meets R");
          }
          segments.push_back(Json::array({io::to_json(r.a), io::to_json(r.b)}));
        } catch (const std::exception& e) {
          c7.fail(tag + ": " + e.what());
        }
      }
  }
  c7.expect(found >= 10, "too few ridge rulings exercised");

  const auto ef = smooth::registry("crease_f"), eg = smooth::registry("crease_g");
  const smooth::Box2 box{{-1, -1}, {1, 1}};
  Json smooth_rulings = Json::array();
  for (double x2 : {-0.6, 0.0, 0.2, 0.7}) {
    smooth::Vec x(2);
    x << 0, x2;
    try {
      const auto r = smooth::hn_ruling(ef, eg, box, x);
      c7.expect((r.direction - smooth::Vec::Unit(2, 1)).norm() < 1e-12, "crease-pair ruling is not e2");
      c7.expect(r.max_second_derivative < 1e-6, "crease-pair second difference too large");
      smooth_rulings.push_back({{"direction", Json::array({r.direction(0), r.direction(1)})},
                                {"second_difference", r.max_second_derivative}});
    } catch (const std::exception& e) {
      c7.fail(std::string("crease-pair ruling: ") + e.what());
    }
  }

  const auto h = smooth::registry("crease_h");
  std::uniform_real_distribution<double> u(-0.95, 0.95);
  double worst = 0;
  for (int i = 0; i < 1000; ++i) {
    smooth::Vec x(2);
    x << u(rng), u(rng);
    const double w = 1 - x(1) * x(1);
    worst = std::max(worst, std::abs(h.hessian(x).determinant() - 4 * x(0) * x(0) / (w * w * w)));
  }
  c7.expect(worst < 1e-6, "det of the Hessian misses 4x1^2/(1-x2^2)^3");
  s.report["ruling"] = {{"segments", segments}, {"smooth", smooth_rulings}, {"det_error", worst}};
  s.outcomes[6] = c7;
}

void smooth_suite(std::uint64_t seed, SuiteResult& s) {
  Outcome c8;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> entry(-1, 1), coef(-2, 2);
  auto random_symmetric = [&](int m) {
    smooth::Mat a(m, m);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) a(i, j) = entry(rng);
    return smooth::Mat((a + a.transpose()) / 2);
  };
  double sym = 0, lin = 0;
  for (int m = 1; m <= 4; ++m)
    for (int trial = 0; trial < 100; ++trial) {
      std::vector<smooth::Mat> raw;
      std::vector<smooth::SymmetricMatrix> ms;
      for (int i = 0; i < m; ++i) {
        raw.push_back(random_symmetric(m));
        ms.emplace_back(raw.back());
      }
      const double d = smooth::mixed_discriminant(ms);
      std::vector<int> perm(m);
      for (int i = 0; i < m; ++i) perm[i] = i;
      std::shuffle(perm.begin(), perm.end(), rng);
      std::vector<smooth::SymmetricMatrix> permuted;
      for (int i : perm) permuted.push_back(ms[i]);
      sym = std::max(sym, std::abs(smooth::mixed_discriminant(permuted) - d));

      const smooth::Mat b = random_symmetric(m);
      const double a1 = coef(rng), a2 = coef(rng);
      auto combo = ms, only_b = ms;
      combo[0] = smooth::SymmetricMatrix(a1 * raw[0] + a2 * b);
      only_b[0] = smooth::SymmetricMatrix(b);
      lin = std::max(lin, std::abs(smooth::mixed_discriminant(combo) -
                                   (a1 * d + a2 * smooth::mixed_discriminant(only_b))));
    }
  c8.expect(sym < 1e-10, "symmetry residual too large");
  c8.expect(lin < 1e-10, "multilinearity residual too large");

  const auto ball = smooth::registry("ball");
  std::normal_distribution<double> g;
  double ball_err = 0;
  for (int i = 0; i < 500; ++i) {
    smooth::Vec u(3);
    u << g(rng), g(rng), g(rng);
    u.normalize();
    ball_err = std::max(ball_err, std::abs(smooth::smooth_density({ball, ball}, u) - 1));
  }
  c8.expect(ball_err < 1e-8, "ball density off by more than 1e-8");

  double harmonic = 0;
  const auto field = smooth::mixed_ma_residual(smooth::registry("norm2sq"), smooth::registry("harmonic"),
                                               {{-1, -1}, {1, 1}}, 100, 100);
  for (const auto& v : field) harmonic = std::max(harmonic, std::abs(v.residual));
  c8.expect(field.size() == 10000, "harmonic grid has the wrong size");
  c8.expect(harmonic < 1e-6, "harmonic-pair residual too large");
  s.report["smooth"] = {{"symmetry", sym}, {"multilinearity", lin}, {"ball_density_error", ball_err},
                        {"harmonic_residual", harmonic}};
  s.outcomes[7] = c8;
}

appendix::Params params(std::vector<double> v, double t) {
  appendix::Params p;
  p.n = static_cast<int>(v.size()) + 2;
  p.v = std::move(v);
  p.t = t;
  return p;
}

void appendix_suite(std::uint64_t seed, SuiteResult& s) {
  Outcome c9;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> num(-20, 20), den(1, 20);
  for (int trial = 0; trial < 50; ++trial) {
    RVec v;
    while (v.empty() || is_zero(v)) {
      v.clear();
      for (int i = 0; i < 2; ++i) v.push_back(ratio(num(rng), den(rng)));
    }
    const Rational t = ratio(1 + den(rng) % 10, 100);
    const auto r = appendix::residual_system_exact({1, 0, 0}, v, t);
    c9.expect(r[0] == 0 && r[1] == 0 && r[2] == 0, "nonzero exact residual at e1");
  }

  std::uniform_real_distribution<double> vd(-2, 2), td(0.01, 0.2), unit(-1, 1);
  double gamma = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const auto p = params({vd(rng), vd(rng)}, td(rng));
    appendix::Vec dir(3);
    do {
      dir << unit(rng), unit(rng), unit(rng);
    } while (dir.norm() <= 0.1);
    gamma = std::max(gamma, appendix::parallelism_residual(appendix::boundary_point(dir, p.t), p));
  }
  c9.expect(gamma < 1e-8, "Gamma-parallelism residual too large");

  Json probes = Json::array();
  for (const auto& p : {params({1, 1}, 0.1), params({0, 1}, 0.05), params({2, -1}, 0.1)}) {
    const auto rep = appendix::dimension_probe(p, 10000, seed);
    c9.expect(!rep.clusters.empty() && rep.clusters.size() < static_cast<std::size_t>(rep.seeds),
              "probe cluster count not finite");
    for (const auto& c : rep.clusters) c9.expect(c.residual < 1e-10, "cluster residual too large");
    probes.push_back(io::to_json(rep));
  }
  s.report["appendix"] = {{"gamma_residual", gamma}, {"probes", probes}};
  s.outcomes[8] = c9;
}

SuiteResult run_suite(std::uint64_t seed) {
  SuiteResult s;
  s.outcomes.resize(9);
  s.report = {{"seed", seed}};
  schneider_suite(seed + 1, s);
  af_suite(seed + 2, s);
  hessian_suite(seed + 3, s);
  function_schneider_suite(seed + 4, s);
  ruling_suite(seed + 5, s);
  smooth_suite(seed + 6, s);
  appendix_suite(seed + 7, s);
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  constexpr std::uint64_t kSeed = 20;
  const auto t0 = Clock::now();
  const SuiteResult first = run_suite(kSeed);
  const double first_seconds = seconds_since(t0);
  const SuiteResult second = run_suite(kSeed);
  const std::string a = first.report.dump(), b = second.report.dump();
  if (argc > 1) std::ofstream(argv[1], std::ios::binary) << a;

  std::vector<Outcome> all = first.outcomes;
  all[0].expect(first.schneider_seconds <= 300, "Schneider suite took longer than 5 minutes");
  Outcome c10;
  c10.expect(a == b, "reports differ between runs");
  all.push_back(c10);

  const char* names[] = {"Schneider suite: atom support equals extreme set",
                         "mixed volume: interpolation equals measure integration",
                         "no atoms at non-exposed directions",
                         "Alexandrov-Fenchel inequality and equality measures",
                         "Hessian measure equals Monge-Ampere polarization",
                         "function-level Schneider equality and inclusion",
                         "ruling extraction",
                         "smooth lab residuals",
                         "appendix lab residuals and probes",
                         "byte-identical reruns"};
  int failed = 0;
  for (std::size_t i = 0; i < all.size(); ++i) {
    std::printf("criterion %2zu: %s  %s%s%s\n", i + 1, all[i].pass ? "PASS" : "FAIL", names[i],
                all[i].detail.empty() ? "" : "  -- ", all[i].detail.c_str());
    failed += all[i].pass ? 0 : 1;
  }
  std::printf("Schneider suite %.1f s, full suite %.1f s per run, report %zu bytes\n",
              first.schneider_seconds, first_seconds, a.size());
  return failed == 0 ? 0 : 1;
}
