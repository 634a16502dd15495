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

// Thurston's Lipschitz metric on the Teichmuller space of the once-punctured
// torus and its horofunctions, evaluated as suprema over curves of bounded
// height (see slope_search.hpp).

#pragma once

#include <cstddef>
#include <limits>
#include <vector>

#include "lhoro/horoboundary.hpp"
#include "lhoro/slope_search.hpp"
#include "lhoro/torus.hpp"

namespace lhoro::torus {

inline const TracePoint kModularTorus{3.0, 3.0, 3.0};

struct DistanceResult {
  double value = 0.0;
  /// Curve realising the largest length ratio found.
  CurveSlope witness{1, 0};
  /// value minus the value restricted to curves of height <= depth / 2.
  double error_estimate = 0.0;
  bool refined = false;
};

/// L(x, y) = log sup_c l_y(c) / l_x(c). Always a lower bound on the true
/// supremum; it converges as depth grows.
DistanceResult lipschitz_distance(const TracePoint& x, const TracePoint& y,
                                  const SearchConfig& cfg = {});

/// Curves of height <= depth whose ratio l_y/l_x is within rel_tol of the
/// maximum, in tie-break order, at most `limit` of them.
std::vector<CurveSlope> maxset(const TracePoint& x, const TracePoint& y,
                               const SearchConfig& cfg = {}, double rel_tol = 1e-8,
                               std::size_t limit = std::numeric_limits<std::size_t>::max());

struct LaminationSup {
  double value = 0.0;           ///< sup_c i(mu, c) / l_x(c), weight-free
  CurveSlope witness{1, 0};
  double half_depth_value = 0.0;
};

/// sup over curves of i(mu, c) / l_x(c) for the unit-weight lamination on
/// mu's projective slope.
LaminationSup lamination_sup(const ProjectiveSlope& mu, const TracePoint& x,
                             const SearchConfig& cfg = {});

struct HoroValue {
  double value = 0.0;
  double error_estimate = 0.0;
  CurveSlope witness_at_x{1, 0};
  CurveSlope witness_at_base{1, 0};
};

/// Psi_mu(x) = log( sup i(mu,.)/l_x(.) / sup i(mu,.)/l_b(.) ). The weight of
/// mu never enters, so Psi_{c mu} == Psi_mu exactly.
HoroValue horofunction(const MeasuredLam& mu, const TracePoint& x, const TracePoint& base,
                       const SearchConfig& cfg = {});

/// The Lipschitz metric as a generic asymmetric space with base point `base`.
horo::AsymmetricSpace<TracePoint> torus_space(const TracePoint& base,
                                              const SearchConfig& cfg = {});

}  // namespace lhoro::torus
