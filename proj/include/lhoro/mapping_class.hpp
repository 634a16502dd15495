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

// Mapping classes of the once-punctured torus as integer matrices of
// determinant +-1 acting on slopes linearly and on trace triples by pulling
// back the marking: t_{g.x}(c) = t_x(g^{-1} c).

#pragma once

#include <cstdint>
#include <vector>

#include "lhoro/torus.hpp"

namespace lhoro::torus {

/// [[a, b], [c, d]] acting on column vectors (p, q).
struct IntMatrix2 {
  std::int64_t a = 1, b = 0, c = 0, d = 1;

  friend bool operator==(const IntMatrix2&, const IntMatrix2&) = default;

  std::int64_t det() const;
  /// Exact inverse; throws ContractViolation unless |det| = 1.
  IntMatrix2 inverse() const;
  Vec2 apply(const Vec2& v) const;
  IntMatrix2 operator*(const IntMatrix2& o) const;
  IntMatrix2 pow(int n) const;
  std::int64_t trace() const { return a + d; }
};

std::string describe(const IntMatrix2& g);

/// Throws ContractViolation unless |det g| = 1.
void check_unimodular(const IntMatrix2& g);

enum class Generator {
  swap,           ///< [[0,1],[1,0]]
  reflect,        ///< [[-1,0],[0,1]]
  twist,          ///< [[1,1],[0,1]]
  twist_inverse,  ///< [[1,-1],[0,1]]
};

IntMatrix2 generator_matrix(Generator g);

/// Word G1 G2 ... Gk equal to h up to sign (-I acts trivially everywhere).
std::vector<Generator> decompose(const IntMatrix2& h);

/// Trace triple of the pulled-back structure. Throws NumericalDegeneracy if a
/// coordinate overflows a double.
TracePoint mcg_apply(const IntMatrix2& g, const TracePoint& pt);
CurveSlope mcg_apply(const IntMatrix2& g, const CurveSlope& c);
ProjectiveSlope mcg_apply(const IntMatrix2& g, const ProjectiveSlope& s);
/// Keeps i(g.mu, g.c) = i(mu, c).
MeasuredLam mcg_apply(const IntMatrix2& g, const MeasuredLam& mu);

/// Dehn twist about c; fixes c.
IntMatrix2 twist_matrix(const CurveSlope& c);

/// x_n = T_c^n . base for n = 0..n_max.
std::vector<TracePoint> twist_sequence(const CurveSlope& c, int n_max, const TracePoint& base);

/// x_n = g^n . base; g must have det 1 and |trace| > 2.
std::vector<TracePoint> pa_sequence(const IntMatrix2& g, int n_max, const TracePoint& base);

/// Slope of the expanding eigenvector of a hyperbolic g: the point of PML
/// that g^n . base converges to.
ProjectiveSlope attracting_slope(const IntMatrix2& g);

}  // namespace lhoro::torus
