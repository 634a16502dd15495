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

#include "lhoro/lipschitz.hpp"

#include <algorithm>
#include <cmath>

#include "lhoro/errors.hpp"

namespace lhoro::torus {

namespace {

void check_config(const SearchConfig& cfg) {
  if (cfg.depth < 1) throw ContractViolation("Farey depth must be at least 1");
  if (cfg.refine_steps < 0) throw ContractViolation("refine_steps must be non-negative");
}

}  // namespace

DistanceResult lipschitz_distance(const TracePoint& x, const TracePoint& y,
                                  const SearchConfig& cfg) {
  check_config(cfg);
  validate(x);
  validate(y);
  const auto sup = farey_supremum<2>({x, y}, cfg, [](const Vec2&, const std::array<double, 2>& len) {
    return len[1] / len[0];
  });
  DistanceResult out;
  out.value = std::log(sup.value);
  out.witness = sup.witness;
  out.error_estimate = out.value - std::log(sup.half_depth_value);
  out.refined = sup.refined;
  return out;
}

std::vector<CurveSlope> maxset(const TracePoint& x, const TracePoint& y, const SearchConfig& cfg,
                               double rel_tol, std::size_t limit) {
  check_config(cfg);
  validate(x);
  validate(y);
  if (!(rel_tol >= 0.0)) throw ContractViolation("maxset: tolerance must be non-negative");
  SearchConfig sweep = cfg;
  sweep.refine = false;
  auto ratio = [](const Vec2&, const std::array<double, 2>& len) { return len[1] / len[0]; };
  const double top = farey_supremum<2>({x, y}, sweep, ratio).value;
  const double threshold = top * (1.0 - rel_tol);
  std::vector<CurveSlope> out;
  walk_farey<2>({x, y}, cfg.depth, [&](const FareyNode<2>& node, const std::array<double, 2>& len) {
    if (ratio(node.mid(), len) >= threshold) out.push_back(CurveSlope::from_vector(node.mid()));
  });
  std::sort(out.begin(), out.end(), slope_precedes);
  if (out.size() > limit) out.resize(limit);
  return out;
}

LaminationSup lamination_sup(const ProjectiveSlope& mu, const TracePoint& x,
                             const SearchConfig& cfg) {
  check_config(cfg);
  validate(x);
  const auto sup = farey_supremum<1>({x}, cfg, [&mu](const Vec2& v, const std::array<double, 1>& len) {
    return intersection(mu, v) / len[0];
  });
  return {sup.value, sup.witness, sup.half_depth_value};
}

HoroValue horofunction(const MeasuredLam& mu, const TracePoint& x, const TracePoint& base,
                       const SearchConfig& cfg) {
  const LaminationSup at_x = lamination_sup(mu.slope, x, cfg);
  const LaminationSup at_base = lamination_sup(mu.slope, base, cfg);
  HoroValue out;
  out.value = std::log(at_x.value / at_base.value);
  out.error_estimate =
      std::abs(out.value - std::log(at_x.half_depth_value / at_base.half_depth_value));
  out.witness_at_x = at_x.witness;
  out.witness_at_base = at_base.witness;
  return out;
}

horo::AsymmetricSpace<TracePoint> torus_space(const TracePoint& base, const SearchConfig& cfg) {
  validate(base);
  horo::AsymmetricSpace<TracePoint> space;
  space.distance = [cfg](const TracePoint& a, const TracePoint& b) {
    return lipschitz_distance(a, b, cfg).value;
  };
  space.base = base;
  space.tolerance = 1e-9;
  space.describe = [](const TracePoint& p) { return describe(p); };
  return space;
}

}  // namespace lhoro::torus
