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

// Convergence experiments: coordinate functions psi_{x_n} along twist and
// pseudo-Anosov orbits compared with the limiting horofunction Psi_mu, and
// the bridge from torus data to finite test-curve models.

#pragma once

#include <vector>

#include "lhoro/lamination.hpp"
#include "lhoro/lipschitz.hpp"
#include "lhoro/mapping_class.hpp"

namespace lhoro::torus {

/// (3,3,3), (4,4,minus), (3,3,6), (3,4,minus), (5,3,minus).
std::vector<TracePoint> default_probes();

struct ConvergenceRow {
  int n = 0;
  double dist_b_xn = 0.0;            ///< L(b, x_n)
  double residual = 0.0;             ///< max_p |psi_{x_n}(p) - Psi_mu(p)|
  CurveSlope witness{1, 0};          ///< argmax of l_b / l_{x_n}
  std::vector<double> psi;           ///< psi_{x_n} on the probes
};

struct ConvergenceReport {
  ProjectiveSlope mu;
  std::vector<TracePoint> probes;
  std::vector<double> limit;         ///< Psi_mu on the probes
  std::vector<ConvergenceRow> rows;
};

/// psi_{x_n}(p) = L(p, x_n) - L(b, x_n) for every sequence point, against Psi_mu.
ConvergenceReport convergence_table(const std::vector<TracePoint>& seq, const ProjectiveSlope& mu,
                                    const std::vector<TracePoint>& probes, const TracePoint& base,
                                    const SearchConfig& cfg = {});

ConvergenceReport converge_twist(const CurveSlope& c, int n_max, const std::vector<TracePoint>& probes,
                                 const TracePoint& base, const SearchConfig& cfg = {});

ConvergenceReport converge_pa(const IntMatrix2& g, int n_max, const std::vector<TracePoint>& probes,
                              const TracePoint& base, const SearchConfig& cfg = {});

/// Curves of height <= max_height as a test-curve model for the given
/// components: M[j][k] = i(component j, c_k), lb[k] = l_base(c_k), stored as
/// exact rationals of the computed doubles.
lam::TestCurveModel induced_model(const std::vector<ProjectiveSlope>& components,
                                  const TracePoint& base, std::int64_t max_height);

}  // namespace lhoro::torus
