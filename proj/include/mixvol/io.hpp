#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "mixvol/appendix.hpp"
#include "mixvol/extremality.hpp"
#include "mixvol/hessian.hpp"
#include "mixvol/mixed_volume.hpp"
#include "mixvol/polytope.hpp"

namespace mixvol::io {

using Json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;

/// Malformed or inconsistent input. The CLI maps it to exit status 1.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parses a file; syntax errors report the byte offset.
Json read_file(const std::string& path);
Json parse_text(const std::string& text, const std::string& origin);

/// Rationals are written as "p/q" strings; integers and strings are accepted.
Rational rational_from_json(const Json& j);
Json to_json(const Rational& q);
RVec rvec_from_json(const Json& j);
Json to_json(const RVec& v);
Json to_json(const Direction& d);

/// {"dim": n, "vertices": [[...], ...]}.
Polytope polytope_from_json(const Json& j);
Json to_json(const Polytope& p);
/// {"dim": n, "pieces": [{"a": [...], "b": ...}], "box": [[lo, hi], ...]}.
PiecewiseAffineConvex function_from_json(const Json& j);
Json to_json(const PiecewiseAffineConvex& f);

Json to_json(const Cone& c);
/// Atoms with exact scale q and numeric mass q|w|.
Json to_json(const SphereMeasure& s);
Json to_json(const PlaneMeasure& m);

/// Subsets are written 1-based.
Json subsets_to_json(const std::vector<std::vector<int>>& sets);
Json directions_to_json(const std::vector<Direction>& ds);

Json to_json(const ExtremalityVerdict& v);
Json to_json(const SchneiderReport& r);
Json to_json(const FunctionSchneiderReport& r);
Json to_json(const ProjectionReport& r);
Json to_json(const appendix::ProbeReport& r);

/// A report object with {"schema_version": 1, "verb": verb}.
Json report(const std::string& verb);

}  // namespace mixvol::io
