/*
   Copyright 2026 The lhoro Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "lhoro/json_io.hpp"

#include <cmath>

#include "lhoro/errors.hpp"

namespace lhoro::io {

namespace {

double number(const json& j, const char* what) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string() && (j.get<std::string>() == "inf" || j.get<std::string>() == "Infinity"))
    return std::numeric_limits<double>::infinity();
  throw ParseError(std::string("expected a number for ") + what);
}

std::int64_t integer(const json& j, const char* what) {
  if (!j.is_number_integer()) throw ParseError(std::string("expected an integer for ") + what);
  return j.get<std::int64_t>();
}

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  return j.at(key);
}

}  // namespace

json real(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (std::isnan(v)) return nullptr;
  return v;
}

json to_json(const torus::TracePoint& pt) { return {{"x", pt.x}, {"y", pt.y}, {"z", pt.z}}; }

json to_json(const torus::CurveSlope& c) { return json::array({c.p(), c.q()}); }

json to_json(const torus::ProjectiveSlope& s) { return json::array({s.a(), s.b()}); }

json to_json(const torus::MeasuredLam& mu) {
  return {{"slope", to_json(mu.slope)}, {"weight", mu.weight}};
}

json to_json(const torus::IntMatrix2& g) {
  return json::array({json::array({g.a, g.b}), json::array({g.c, g.d})});
}

json to_json(const lam::FormalLamination& mu) {
  json w = json::object();
  for (std::size_t j = 0; j < mu.basis.ids.size(); ++j) w[mu.basis.ids[j]] = lam::to_string(mu.weights[j]);
  return {{"basis", mu.basis.ids}, {"weights", w}};
}

torus::TracePoint point_from_json(const json& j) {
  torus::TracePoint pt{number(field(j, "x"), "x"), number(field(j, "y"), "y"), number(field(j, "z"), "z")};
  torus::validate(pt);
  return pt;
}

torus::CurveSlope slope_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2) throw ParseError("a slope is an array [p, q]");
  return {integer(j[0], "p"), integer(j[1], "q")};
}

torus::MeasuredLam lamination_from_json(const json& j) {
  const json& s = field(j, "slope");
  if (!s.is_array() || s.size() != 2) throw ParseError("lamination slope is an array [a, b]");
  const double w = j.contains("weight") ? number(j.at("weight"), "weight") : 1.0;
  return {torus::ProjectiveSlope(number(s[0], "a"), number(s[1], "b")), w};
}

torus::IntMatrix2 matrix_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_array() || !j[1].is_array() || j[0].size() != 2 ||
      j[1].size() != 2)
    throw ParseError("a matrix is [[a, b], [c, d]]");
  return {integer(j[0][0], "a"), integer(j[0][1], "b"), integer(j[1][0], "c"), integer(j[1][1], "d")};
}

lam::Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return lam::Rational(j.get<std::int64_t>());
  if (j.is_number()) return lam::exact_rational(j.get<double>());
  if (j.is_string()) return lam::parse_rational(j.get<std::string>());
  throw ParseError("expected a number or a rational string");
}

lam::FormalLamination formal_from_json(const json& j) {
  lam::FormalLamination mu;
  const json& basis = field(j, "basis");
  if (!basis.is_array()) throw ParseError("'basis' must be an array of ids");
  for (const auto& id : basis) {
    if (!id.is_string()) throw ParseError("basis ids must be strings");
    mu.basis.ids.push_back(id.get<std::string>());
  }
  const json& w = field(j, "weights");
  if (!w.is_object()) throw ParseError("'weights' must map ids to numbers");
  mu.weights.assign(mu.basis.ids.size(), lam::Rational(0));
  for (const auto& [id, v] : w.items()) mu.weights[mu.basis.index_of(id)] = rational_from_json(v);
  mu.validate();
  return mu;
}

lam::TestCurveModel model_from_json(const json& j) {
  lam::TestCurveModel m;
  if (j.contains("components"))
    for (const auto& id : j.at("components")) m.components.push_back(id.get<std::string>());
  if (j.contains("curves"))
    for (const auto& c : j.at("curves")) m.curves.push_back(c.is_string() ? c.get<std::string>() : c.dump());
  const json& rows = field(j, "M");
  if (!rows.is_array()) throw ParseError("'M' must be an array of rows");
  for (const auto& row : rows) {
    if (!row.is_array()) throw ParseError("rows of 'M' must be arrays");
    std::vector<lam::Rational> r;
    for (const auto& v : row) r.push_back(rational_from_json(v));
    m.M.push_back(std::move(r));
  }
  const json& lb = field(j, "lb");
  if (!lb.is_array()) throw ParseError("'lb' must be an array");
  for (const auto& v : lb) m.lb.push_back(rational_from_json(v));
  m.validate();
  return m;
}

json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace lhoro::io
