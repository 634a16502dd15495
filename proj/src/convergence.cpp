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

#include "lhoro/convergence.hpp"

#include <algorithm>
#include <cmath>

#include "lhoro/errors.hpp"

namespace lhoro::torus {

std::vector<TracePoint> default_probes() {
  return {kModularTorus, teich_from_xy(4.0, 4.0, Branch::minus), teich_from_xy(3.0, 3.0, Branch::plus),
          teich_from_xy(3.0, 4.0, Branch::minus), teich_from_xy(5.0, 3.0, Branch::minus)};
}

ConvergenceReport convergence_table(const std::vector<TracePoint>& seq, const ProjectiveSlope& mu,
                                    const std::vector<TracePoint>& probes, const TracePoint& base,
                                    const SearchConfig& cfg) {
  if (seq.empty()) throw ContractViolation("convergence_table: empty sequence");
  if (probes.empty()) throw ContractViolation("convergence_table: empty probe set");
  ConvergenceReport out;
  out.mu = mu;
  out.probes = probes;
  const MeasuredLam unit(mu, 1.0);
  for (const auto& p : probes) out.limit.push_back(horofunction(unit, p, base, cfg).value);

  for (std::size_t n = 0; n < seq.size(); ++n) {
    ConvergenceRow row;
    row.n = static_cast<int>(n);
    row.dist_b_xn = lipschitz_distance(base, seq[n], cfg).value;
    row.witness = lipschitz_distance(seq[n], base, cfg).witness;
    for (std::size_t i = 0; i < probes.size(); ++i) {
      const double v = probes[i] == base ? 0.0
                                         : lipschitz_distance(probes[i], seq[n], cfg).value - row.dist_b_xn;
      row.psi.push_back(v);
      row.residual = std::max(row.residual, std::abs(v - out.limit[i]));
    }
    out.rows.push_back(std::move(row));
  }
  return out;
}

ConvergenceReport converge_twist(const CurveSlope& c, int n_max, const std::vector<TracePoint>& probes,
                                 const TracePoint& base, const SearchConfig& cfg) {
  return convergence_table(twist_sequence(c, n_max, base), ProjectiveSlope::from_curve(c), probes,
                           base, cfg);
}

ConvergenceReport converge_pa(const IntMatrix2& g, int n_max, const std::vector<TracePoint>& probes,
                              const TracePoint& base, const SearchConfig& cfg) {
  const auto mu = attracting_slope(g);
  return convergence_table(pa_sequence(g, n_max, base), mu, probes, base, cfg);
}

lam::TestCurveModel induced_model(const std::vector<ProjectiveSlope>& components,
                                  const TracePoint& base, std::int64_t max_height) {
  if (components.empty()) throw ContractViolation("induced_model: no components");
  if (max_height < 1) throw ContractViolation("induced_model: height must be at least 1");
  validate(base);
  lam::TestCurveModel model;
  model.M.resize(components.size());
  walk_farey<1>({base}, max_height, [&](const FareyNode<1>& node, const std::array<double, 1>& len) {
    const CurveSlope c = CurveSlope::from_vector(node.mid());
    model.curves.push_back(describe(c));
    model.lb.push_back(lam::exact_rational(len[0]));
    for (std::size_t j = 0; j < components.size(); ++j)
      model.M[j].push_back(lam::exact_rational(intersection(components[j], c.vec())));
  });
  model.validate();
  return model;
}

}  // namespace lhoro::torus
