#include "mixvol/io.hpp"

#include <fstream>
#include <sstream>

namespace mixvol::io {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw InputError(what);
}

const Json& field(const Json& j, const char* key) {
  require(j.is_object(), std::string("expected an object with key '") + key + "'");
  const auto it = j.find(key);
  require(it != j.end(), std::string("missing key '") + key + "'");
  return *it;
}

int dim_field(const Json& j) {
  const Json& d = field(j, "dim");
  require(d.is_number_integer(), "'dim' must be an integer");
  const int n = d.get<int>();
  require(n >= 1 && n <= 4, "unsupported dimension " + std::to_string(n));
  return n;
}

}  // namespace

Json parse_text(const std::string& text, const std::string& origin) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(origin + ": malformed JSON at byte " + std::to_string(e.byte) + ": " + e.what());
  }
}

Json read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  require(static_cast<bool>(in), path + ": cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_text(buf.str(), path);
}

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  require(j.is_string(), "rational must be an integer or a \"p/q\" string");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
}

Json to_json(const Rational& q) { return to_string(q); }

RVec rvec_from_json(const Json& j) {
  require(j.is_array(), "expected an array of rationals");
  RVec v;
  for (const auto& x : j) v.push_back(rational_from_json(x));
  return v;
}

Json to_json(const RVec& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

Json to_json(const Direction& d) {
  Json out = Json::array();
  for (const auto& c : d.coords()) {
    require(c.fits_slong_p(), "direction coordinate too large for output");
    out.push_back(c.get_si());
  }
  return out;
}

Polytope polytope_from_json(const Json& j) {
  const int n = dim_field(j);
  const Json& vs = field(j, "vertices");
  require(vs.is_array() && !vs.empty(), "'vertices' must be a nonempty array");
  std::vector<RVec> pts;
  for (const auto& v : vs) {
    pts.push_back(rvec_from_json(v));
    require(static_cast<int>(pts.back().size()) == n,
            "vertex has " + std::to_string(pts.back().size()) + " coordinates, dim is " +
                std::to_string(n));
  }
  return Polytope::hull(pts, n);
}

Json to_json(const Polytope& p) {
  Json vs = Json::array();
  for (const auto& v : p.vertices()) vs.push_back(to_json(v));
  return {{"dim", p.ambient_dim()}, {"vertices", vs}};
}

PiecewiseAffineConvex function_from_json(const Json& j) {
  const int n = dim_field(j);
  require(n <= 3, "functions are supported on R^1..R^3");
  std::vector<AffinePiece> pieces;
  const Json& ps = field(j, "pieces");
  require(ps.is_array() && !ps.empty(), "'pieces' must be a nonempty array");
  for (const auto& p : ps) {
    AffinePiece a{rvec_from_json(field(p, "a")), rational_from_json(field(p, "b"))};
    require(static_cast<int>(a.a.size()) == n, "piece slope dimension mismatch");
    pieces.push_back(std::move(a));
  }
  Box box;
  const Json& bj = field(j, "box");
  require(bj.is_array() && static_cast<int>(bj.size()) == n, "'box' needs one [lo, hi] per axis");
  for (const auto& side : bj) {
    require(side.is_array() && side.size() == 2, "box side must be [lo, hi]");
    box.lo.push_back(rational_from_json(side[0]));
    box.hi.push_back(rational_from_json(side[1]));
    require(box.lo.back() < box.hi.back(), "box side must have lo < hi");
  }
  return PiecewiseAffineConvex(std::move(pieces), std::move(box));
}

Json to_json(const PiecewiseAffineConvex& f) {
  Json ps = Json::array(), box = Json::array();
  for (const auto& p : f.pieces()) ps.push_back({{"a", to_json(p.a)}, {"b", to_json(p.b)}});
  for (int i = 0; i < f.dim(); ++i) box.push_back(Json::array({to_json(f.box().lo[i]), to_json(f.box().hi[i])}));
  return {{"dim", f.dim()}, {"pieces", ps}, {"box", box}};
}

Json to_json(const Cone& c) {
  Json lin = Json::array();
  for (const auto& row : c.lineality()) lin.push_back(to_json(row));
  return {{"generators", directions_to_json(c.generators())}, {"lineality", lin}};
}

Json to_json(const SphereMeasure& s) {
  Json atoms = Json::array();
  for (const auto& [w, q] : s.atoms())
    atoms.push_back({{"dir", to_json(w)}, {"scale", to_json(q)}, {"mass_numeric", to_double(q) * w.norm()}});
  return {{"dim", s.ambient_dim()}, {"atoms", atoms}};
}

Json to_json(const PlaneMeasure& m) {
  Json atoms = Json::array();
  for (const auto& [x, q] : m.atoms())
    atoms.push_back({{"x", to_json(x)}, {"mass", to_json(q)}, {"mass_numeric", to_double(q)}});
  return {{"dim", m.dim()}, {"atoms", atoms}};
}

Json subsets_to_json(const std::vector<std::vector<int>>& sets) {
  Json out = Json::array();
  for (const auto& s : sets) {
    Json one = Json::array();
    for (int i : s) one.push_back(i + 1);
    out.push_back(one);
  }
  return out;
}

Json directions_to_json(const std::vector<Direction>& ds) {
  Json out = Json::array();
  for (const auto& d : ds) out.push_back(to_json(d));
  return out;
}

Json to_json(const ExtremalityVerdict& v) {
  return {{"direction", to_json(v.direction)},
          {"extreme", v.extreme},
          {"exposed", v.exposed},
          {"failing_sets", subsets_to_json(v.failing_sets)},
          {"line_witness", directions_to_json(v.line_witness)}};
}

Json to_json(const SchneiderReport& r) {
  Json tuple = Json::array();
  for (const auto& p : r.tuple) tuple.push_back(to_json(p));
  return {{"tuple", tuple},
          {"measure", to_json(r.measure)},
          {"atom_support", directions_to_json(r.atom_support)},
          {"extreme_set", directions_to_json(r.extreme_set)},
          {"equal", r.equal},
          {"discrepancies", directions_to_json(r.discrepancies)},
          {"nonexposed_atoms", directions_to_json(r.nonexposed_atoms)},
          {"unlisted_atoms", directions_to_json(r.unlisted_atoms)},
          {"fan_rays_checked", r.fan_rays_checked}};
}

Json to_json(const FunctionSchneiderReport& r) {
  Json atoms = Json::array(), extreme = Json::array();
  for (const auto& x : r.atom_points) atoms.push_back(to_json(x));
  for (const auto& x : r.extreme_points) extreme.push_back(to_json(x));
  return {{"measure", to_json(r.measure)},
          {"atom_points", atoms},
          {"extreme_points", extreme},
          {"equal", r.equal},
          {"inclusion", r.inclusion},
          {"claim", r.n == 2 ? "equality" : "inclusion"},
          {"ok", r.ok()}};
}

Json to_json(const ProjectionReport& r) {
  Json atoms = Json::array();
  for (const auto& a : r.atoms)
    atoms.push_back({{"dir", to_json(a.u)}, {"lhs_sq", to_json(a.lhs_sq)}, {"rhs_sq", to_json(a.rhs_sq)}});
  Json out = {{"n", r.n},
              {"v", to_json(r.v)},
              {"atoms", atoms},
              {"volume_ok", r.volume_ok},
              {"measure_ok", r.measure_ok}};
  if (r.volume_lhs) out["volume_lhs"] = to_json(*r.volume_lhs);
  if (r.volume_rhs) out["volume_rhs"] = to_json(*r.volume_rhs);
  return out;
}

Json to_json(const appendix::ProbeReport& r) {
  auto vec = [](const appendix::Vec& v) {
    Json out = Json::array();
    for (long i = 0; i < v.size(); ++i) out.push_back(v(i));
    return out;
  };
  Json clusters = Json::array();
  for (const auto& c : r.clusters)
    clusters.push_back({{"a", vec(c.a)}, {"residual", c.residual}, {"members", c.members}});
  return {{"n", r.params.n},
          {"v", r.params.v},
          {"t", r.params.t},
          {"seeds", r.seeds},
          {"converged", r.converged},
          {"diverged", r.diverged},
          {"divergence_warning", r.divergence_warning},
          {"clusters", clusters},
          {"box_dim", r.box_dim},
          {"heuristic", true},
          {"convexity_precheck",
           {{"strictly_convex", r.convexity.strictly_convex},
            {"min_curvature", r.convexity.min_curvature},
            {"samples", r.convexity.samples}}}};
}

Json report(const std::string& verb) { return {{"schema_version", kSchemaVersion}, {"verb", verb}}; }

}  // namespace mixvol::io
