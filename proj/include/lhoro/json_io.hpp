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

// JSON forms of the library's value types.
//
//   point       {"x": 3, "y": 3, "z": 3}
//   slope       [p, q]
//   lamination  {"slope": [a, b], "weight": w}
//   sampled     {"probes": [...], "values": [...], "exact": bool, "residual": number|null}
//   formal      {"basis": ["e1", "e2"], "weights": {"e1": 2, "e2": "1/3"}}
//   model       {"components": [...]?, "curves": [...], "M": [[...]], "lb": [...]}
//
// Infinite reals are written as the string "inf".

#pragma once

#include <functional>

#include <json.hpp>

#include "lhoro/horoboundary.hpp"
#include "lhoro/lamination.hpp"
#include "lhoro/mapping_class.hpp"
#include "lhoro/torus.hpp"

namespace lhoro::io {

using nlohmann::json;

json real(double v);

json to_json(const torus::TracePoint& pt);
json to_json(const torus::CurveSlope& c);
json to_json(const torus::ProjectiveSlope& s);
json to_json(const torus::MeasuredLam& mu);
json to_json(const torus::IntMatrix2& g);
json to_json(const lam::FormalLamination& mu);

/// Parse errors raise lhoro::ParseError; the point is validated.
torus::TracePoint point_from_json(const json& j);
torus::CurveSlope slope_from_json(const json& j);
torus::MeasuredLam lamination_from_json(const json& j);
torus::IntMatrix2 matrix_from_json(const json& j);
lam::FormalLamination formal_from_json(const json& j);
lam::TestCurveModel model_from_json(const json& j);
/// JSON number (exact binary value) or a string read by parse_rational.
lam::Rational rational_from_json(const json& j);

/// Parses text, turning syntax errors into ParseError.
json parse(const std::string& text);

template <class Point>
json to_json(const horo::SampledFunction<Point>& f, const std::function<json(const Point&)>& point) {
  json probes = json::array(), values = json::array();
  for (const auto& p : f.probes) probes.push_back(point(p));
  for (double v : f.values) values.push_back(real(v));
  return {{"probes", probes},
          {"values", values},
          {"exact", f.exact},
          {"residual", f.residual ? real(*f.residual) : json(nullptr)}};
}

}  // namespace lhoro::io
