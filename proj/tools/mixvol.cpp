#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "mixvol/appendix.hpp"
#include "mixvol/extremality.hpp"
#include "mixvol/hessian.hpp"
#include "mixvol/io.hpp"
#include "mixvol/mixed_volume.hpp"
#include "mixvol/smooth.hpp"

using namespace mixvol;
using io::InputError;
using io::Json;

namespace {

struct Options {
  std::uint64_t seed = 1;
  std::string format = "json";
  std::string output;
  double tol = 1e-6;
  std::vector<std::string> files;
  std::string dir, point, domain, smooth, functions, v;
  double t = 0.1;
  int seeds = 10000, nx = 100, ny = 100;
  bool grid = false;
};

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::stringstream in(text);
  std::string tok;
  while (std::getline(in, tok, sep))
    if (!tok.empty()) out.push_back(tok);
  return out;
}

std::vector<double> doubles(const std::string& text, const char* what) {
  std::vector<double> out;
  for (const auto& tok : split(text, ',')) {
    std::size_t used = 0;
    double x = 0;
    try {
      x = std::stod(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != tok.size()) throw InputError(std::string("malformed number in ") + what + ": '" + tok + "'");
    out.push_back(x);
  }
  return out;
}

RVec rationals(const std::string& text) {
  RVec out;
  for (const auto& tok : split(text, ',')) out.push_back(io::rational_from_json(tok));
  return out;
}

std::vector<Polytope> load_bodies(const std::vector<std::string>& files) {
  std::vector<Polytope> out;
  for (const auto& f : files) {
    try {
      out.push_back(io::polytope_from_json(io::read_file(f)));
    } catch (const InputError& e) {
      const std::string msg = e.what();
      throw InputError(msg.rfind(f, 0) == 0 ? msg : f + ": " + msg);
    }
  }
  for (const auto& p : out)
    if (p.ambient_dim() != out.front().ambient_dim()) throw InputError("dimension mismatch between bodies");
  return out;
}

std::vector<PiecewiseAffineConvex> load_functions(const std::vector<std::string>& files) {
  std::vector<PiecewiseAffineConvex> out;
  for (const auto& f : files) {
    try {
      out.push_back(io::function_from_json(io::read_file(f)));
    } catch (const InputError& e) {
      const std::string msg = e.what();
      throw InputError(msg.rfind(f, 0) == 0 ? msg : f + ": " + msg);
    }
  }
  for (const auto& f : out)
    if (f.dim() != out.front().dim()) throw InputError("dimension mismatch between functions");
  return out;
}

void require_count(std::size_t have, std::size_t want, const std::string& what) {
  if (have != want)
    throw InputError("expected " + std::to_string(want) + " " + what + ", got " + std::to_string(have));
}

smooth::Box2 parse_box2(const std::string& text) {
  const auto d = doubles(text, "--domain");
  if (d.size() != 4 || !(d[0] < d[1]) || !(d[2] < d[3]))
    throw InputError("--domain must be lo1,hi1,lo2,hi2 with lo < hi");
  return {{d[0], d[2]}, {d[1], d[3]}};
}

smooth::Vec to_vec(const std::vector<double>& xs) {
  return Eigen::Map<const smooth::Vec>(xs.data(), static_cast<long>(xs.size()));
}

std::vector<smooth::SmoothFunction> registry_list(const std::string& names) {
  std::vector<smooth::SmoothFunction> out;
  for (const auto& n : split(names, ',')) {
    try {
      out.push_back(smooth::registry(n));
    } catch (const std::invalid_argument& e) {
      throw InputError(e.what());
    }
  }
  return out;
}

// Each verb fills `out` and returns a CSV rendering when one exists.
using Csv = std::string;

Csv measure_csv(const Json& m) {
  std::string s = "dir,scale,mass_numeric\n";
  for (const auto& a : m["atoms"]) {
    std::string dir;
    for (const auto& c : a["dir"]) dir += (dir.empty() ? "" : " ") + c.dump();
    s += "\"" + dir + "\"," + a["scale"].get<std::string>() + "," + a["mass_numeric"].dump() + "\n";
  }
  return s;
}

Csv plane_csv(const Json& m) {
  std::string s = "x,mass,mass_numeric\n";
  for (const auto& a : m["atoms"]) {
    std::string x;
    for (const auto& c : a["x"]) x += (x.empty() ? "" : " ") + c.get<std::string>();
    s += "\"" + x + "\"," + a["mass"].get<std::string>() + "," + a["mass_numeric"].dump() + "\n";
  }
  return s;
}

int verb_mixed_volume(const Options& o, Json& out, Csv&) {
  const auto bodies = load_bodies(o.files);
  require_count(bodies.size(), static_cast<std::size_t>(bodies.front().ambient_dim()), "bodies");
  const auto r = mixed_volume(bodies);
  out["value"] = io::to_json(r.value);
  out["interpolation"] = io::to_json(r.method_a);
  out["measure_integration"] = io::to_json(r.method_b);
  return 0;
}

int verb_area_measure(const Options& o, Json& out, Csv& csv) {
  const auto bodies = load_bodies(o.files);
  require_count(bodies.size(), static_cast<std::size_t>(bodies.front().ambient_dim() - 1), "bodies");
  out["measure"] = io::to_json(mixed_area_atoms(bodies));
  csv = measure_csv(out["measure"]);
  return 0;
}

int verb_classify(const Options& o, Json& out, Csv&) {
  const auto bodies = load_bodies(o.files);
  const int n = bodies.front().ambient_dim();
  require_count(bodies.size(), static_cast<std::size_t>(n - 1), "bodies");
  Direction u;
  try {
    u = parse_direction(o.dir);
  } catch (const std::invalid_argument& e) {
    throw InputError(std::string("--dir: ") + e.what());
  }
  if (u.dim() != n) throw InputError("--dir has the wrong dimension");
  out["verdict"] = io::to_json(classify(bodies, u));
  return 0;
}

int verb_schneider(const Options& o, Json& out, Csv& csv) {
  const auto bodies = load_bodies(o.files);
  require_count(bodies.size(), static_cast<std::size_t>(bodies.front().ambient_dim() - 1), "bodies");
  const auto r = schneider_verify(bodies);
  out["report"] = io::to_json(r);
  csv = measure_csv(out["report"]["measure"]);
  return r.ok() ? 0 : 2;
}

int verb_hessian(const Options& o, Json& out, Csv& csv) {
  const auto fs = load_functions(o.files);
  require_count(fs.size(), static_cast<std::size_t>(fs.front().dim()), "functions");
  const auto atoms = mixed_hessian_atoms(fs);
  const auto oracle = ma_oracle(fs);
  out["measure"] = io::to_json(atoms);
  out["oracle_equal"] = atoms == oracle;
  const auto support = fcn_schneider_verify(fs);
  out["support"] = io::to_json(support);
  csv = plane_csv(out["measure"]);
  if (!(atoms == oracle)) {
    out["oracle"] = io::to_json(oracle);
    return 2;
  }
  return support.ok() ? 0 : 2;
}

int verb_ruling(const Options& o, Json& out, Csv&) {
  if (!o.smooth.empty()) {
    const auto fs = registry_list(o.smooth);
    require_count(fs.size(), 2, "smooth functions");
    const auto x = doubles(o.point, "--point");
    if (x.size() != 2) throw InputError("--point needs 2 coordinates");
    const smooth::Box2 d = parse_box2(o.domain.empty() ? "-1,1,-1,1" : o.domain);
    const auto r = smooth::hn_ruling(fs[0], fs[1], d, to_vec(x));
    out["direction"] = Json::array({r.direction(0), r.direction(1)});
    out["segment"] = Json::array({Json::array({r.a(0), r.a(1)}), Json::array({r.b(0), r.b(1)})});
    out["max_second_derivative"] = r.max_second_derivative;
    return 0;
  }
  const auto fs = load_functions(o.files);
  require_count(fs.size(), 2, "functions");
  if (fs[0].dim() != 2) throw InputError("ruling needs functions on R^2");
  const RVec x = rationals(o.point);
  if (x.size() != 2) throw InputError("--point needs 2 coordinates");
  Box d = fs[0].box();
  if (!o.domain.empty()) {
    const RVec b = rationals(o.domain);
    if (b.size() != 4 || !(b[0] < b[1]) || !(b[2] < b[3]))
      throw InputError("--domain must be lo1,hi1,lo2,hi2 with lo < hi");
    d = Box{{b[0], b[2]}, {b[1], b[3]}};
  }
  const auto r = ruling(fs[0], fs[1], d, x);
  out["direction"] = io::to_json(r.direction);
  out["segment"] = Json::array({io::to_json(r.a), io::to_json(r.b)});
  return 0;
}

int verb_smooth_density(const Options& o, Json& out, Csv& csv) {
  const auto fs = registry_list(o.functions);
  if (o.grid) {
    require_count(fs.size(), 2, "functions");
    const smooth::Box2 d = parse_box2(o.domain.empty() ? "-1,1,-1,1" : o.domain);
    const auto field = smooth::mixed_ma_residual(fs[0], fs[1], d, o.nx, o.ny);
    Json nodes = Json::array();
    double worst = 0;
    csv = "x1,x2,residual,ruling_dir\n";
    for (const auto& g : field) {
      const Json dir = std::isnan(g.ruling_dir) ? Json(nullptr) : Json(g.ruling_dir);
      nodes.push_back(Json::array({g.x1, g.x2, g.residual, dir}));
      worst = std::max(worst, std::abs(g.residual));
      std::ostringstream row;
      row.precision(17);
      row << g.x1 << ',' << g.x2 << ',' << g.residual << ',';
      if (!std::isnan(g.ruling_dir)) row << g.ruling_dir;
      csv += row.str() + "\n";
    }
    out["columns"] = Json::array({"x1", "x2", "residual", "ruling_dir"});
    out["nodes"] = nodes;
    out["max_abs_residual"] = worst;
    out["tolerance"] = o.tol;
    out["within_tolerance"] = worst < o.tol;
    return 0;
  }
  const auto u = doubles(o.dir, "--dir");
  const smooth::Vec uv = to_vec(u).normalized();
  out["direction"] = u;
  out["density"] = smooth::smooth_density(fs, uv);
  out["rank_condition"] = smooth::rank_classify(fs, uv);
  return 0;
}

int verb_appendix_probe(const Options& o, Json& out, Csv& csv) {
  appendix::Params p;
  p.v = doubles(o.v, "--v");
  p.n = static_cast<int>(p.v.size()) + 2;
  p.t = o.t;
  try {
    p.validate();
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  const auto r = appendix::dimension_probe(p, o.seeds, o.seed);
  const Json body = io::to_json(r);
  for (const auto& [k, val] : body.items()) out[k] = val;
  out["seed"] = o.seed;
  bool residuals_ok = true;
  csv = "cluster,members,residual";
  for (int i = 1; i < p.n; ++i) csv += ",a" + std::to_string(i);
  csv += "\n";
  int idx = 0;
  for (const auto& c : r.clusters) {
    residuals_ok = residuals_ok && c.residual < 1e-10;
    std::ostringstream row;
    row.precision(17);
    row << ++idx << ',' << c.members << ',' << c.residual;
    for (long i = 0; i < c.a.size(); ++i) row << ',' << c.a(i);
    csv += row.str() + "\n";
  }
  out["cluster_residuals_ok"] = residuals_ok;
  return residuals_ok ? 0 : 2;
}

int verb_projection_check(const Options& o, Json& out, Csv&) {
  const auto bodies = load_bodies(o.files);
  Direction v;
  try {
    v = parse_direction(o.v);
  } catch (const std::invalid_argument& e) {
    throw InputError(std::string("--v: ") + e.what());
  }
  if (v.dim() != bodies.front().ambient_dim()) throw InputError("--v has the wrong dimension");
  out["report"] = io::to_json(projection_identities(bodies, v));
  return 0;
}

void emit(const Options& o, const std::string& text) {
  if (o.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(o.output, std::ios::binary);
  if (!f) throw InputError(o.output + ": cannot write");
  f << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact mixed volumes, mixed area and Hessian measures, and their support checks"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--seed", o.seed, "Seed for randomized harnesses");
  app.add_option("--format", o.format, "Report format")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("-o,--output", o.output, "Write the report here instead of stdout");
  app.add_option("--tol", o.tol, "Residual tolerance for smooth grid reports");

  auto files = [&](CLI::App* sub, const char* what) {
    sub->add_option("files", o.files, what)->required()->check(CLI::ExistingFile);
  };
  auto* mv = app.add_subcommand("mixed-volume", "V_n(C_1..C_n) by two exact methods");
  files(mv, "Polytope JSON files");
  auto* am = app.add_subcommand("area-measure", "Atoms of S_{C_1..C_{n-1}}");
  files(am, "Polytope JSON files");
  auto* cl = app.add_subcommand("classify", "Extremality of one direction");
  cl->add_option("--dir", o.dir, "Direction, comma separated")->required();
  files(cl, "Polytope JSON files");
  auto* sc = app.add_subcommand("schneider", "Atom support vs extreme set");
  files(sc, "Polytope JSON files");
  auto* he = app.add_subcommand("hessian", "Mixed Hessian measure of piecewise-affine functions");
  files(he, "Function JSON files");
  auto* ru = app.add_subcommand("ruling", "Common affine segment through a point");
  ru->add_option("--point", o.point, "Point x, comma separated")->required();
  ru->add_option("--domain", o.domain, "lo1,hi1,lo2,hi2");
  ru->add_option("--smooth", o.smooth, "Two registry names instead of files");
  ru->add_option("files", o.files, "Function JSON files")->check(CLI::ExistingFile);
  auto* sd = app.add_subcommand("smooth-density", "Smooth-case density or mixed Monge-Ampere grid");
  sd->add_option("--functions", o.functions, "Registry names, comma separated")->required();
  sd->add_option("--dir", o.dir, "Unit direction for the density");
  sd->add_flag("--grid", o.grid, "Residual field of two planar functions");
  sd->add_option("--domain", o.domain, "lo1,hi1,lo2,hi2 for --grid");
  sd->add_option("--nx", o.nx, "Grid nodes along x1")->check(CLI::Range(2, 4000));
  sd->add_option("--ny", o.ny, "Grid nodes along x2")->check(CLI::Range(2, 4000));
  auto* ap = app.add_subcommand("appendix-probe", "Newton probes of the appendix system");
  ap->add_option("--v", o.v, "v_2..v_{n-1}, comma separated")->required();
  ap->add_option("--t", o.t, "Parameter t > 0");
  ap->add_option("--seeds", o.seeds, "Newton starts")->check(CLI::Range(1, 1000000));
  auto* pc = app.add_subcommand("projection-check", "Projection identities along v");
  pc->add_option("--v", o.v, "Projection direction")->required();
  files(pc, "Polytope JSON files");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  CLI::App* sub = app.get_subcommands().front();
  const std::string verb = sub->get_name();
  Json out = io::report(verb);
  Csv csv;
  int status = 0;
  try {
    if (verb == "mixed-volume") status = verb_mixed_volume(o, out, csv);
    else if (verb == "area-measure") status = verb_area_measure(o, out, csv);
    else if (verb == "classify") status = verb_classify(o, out, csv);
    else if (verb == "schneider") status = verb_schneider(o, out, csv);
    else if (verb == "hessian") status = verb_hessian(o, out, csv);
    else if (verb == "ruling") status = verb_ruling(o, out, csv);
    else if (verb == "smooth-density") status = verb_smooth_density(o, out, csv);
    else if (verb == "appendix-probe") status = verb_appendix_probe(o, out, csv);
    else status = verb_projection_check(o, out, csv);
  } catch (const VerificationError& e) {
    out["verification_error"] = e.what();
    status = 2;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  if (status == 2) std::cerr << "verification failed; see the report\n";

  try {
    if (o.format == "csv" && !csv.empty()) {
      emit(o, csv);
    } else if (o.format == "csv" && status != 2) {
      throw InputError("csv output is not available for " + verb);
    } else {
      emit(o, out.dump(2) + "\n");
    }
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return status;
}
