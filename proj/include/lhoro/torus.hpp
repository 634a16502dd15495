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

// Teichmuller space of the once-punctured torus in Fricke trace coordinates.
//
// A point is the triple (x, y, z) of traces of the curves of slope 0/1, 1/0
// and 1/1; it lies on the Markov cubic x^2 + y^2 + z^2 = xyz. Slope p/q is the
// primitive vector (p, q); two slopes are Farey neighbours when the
// determinant of their vectors is +-1, and for neighbours a, b the traces obey
//
//     t(a + b) + t(a - b) = t(a) t(b).
//
// Every trace of a simple closed curve follows from the triple by that rule.

#pragma once

#include <algorithm>
#include <cstdint>
#include <string>

#include <Eigen/Core>

namespace lhoro::torus {

struct TracePoint {
  double x = 3.0;
  double y = 3.0;
  double z = 3.0;

  friend bool operator==(const TracePoint&, const TracePoint&) = default;
};

/// Relative Markov residual |x^2 + y^2 + z^2 - xyz| / xyz, evaluated without
/// forming the (possibly overflowing) squares.
double markov_residual(const TracePoint& pt);

/// Throws ContractViolation unless the coordinates exceed 2 and the point sits
/// on the Markov cubic to 1e-9 relative.
void validate(const TracePoint& pt);

std::string describe(const TracePoint& pt);

/// Integer vector in the slope lattice; not necessarily canonical.
struct Vec2 {
  std::int64_t p = 0;
  std::int64_t q = 0;

  friend bool operator==(const Vec2&, const Vec2&) = default;
  Vec2 operator+(const Vec2& o) const { return {p + o.p, q + o.q}; }
  Vec2 operator-(const Vec2& o) const { return {p - o.p, q - o.q}; }
};

/// Simple closed curve p/q: gcd(|p|, |q|) = 1 with q > 0, or (1, 0).
class CurveSlope {
 public:
  CurveSlope() : p_(0), q_(1) {}
  /// Accepts any primitive vector and flips its sign into canonical form.
  CurveSlope(std::int64_t p, std::int64_t q);
  static CurveSlope from_vector(const Vec2& v) { return {v.p, v.q}; }

  std::int64_t p() const { return p_; }
  std::int64_t q() const { return q_; }
  Vec2 vec() const { return {p_, q_}; }
  double value() const;  ///< p / q, +inf for 1/0

  friend bool operator==(const CurveSlope&, const CurveSlope&) = default;

 private:
  std::int64_t p_;
  std::int64_t q_;
};

std::string describe(const CurveSlope& c);

/// Deterministic tie-break order: smaller q, then smaller |p|, then p > 0 first.
bool slope_precedes(const CurveSlope& a, const CurveSlope& b);

/// A point of PML: a real projective pair normalised to max(|a|, |b|) = 1,
/// sign fixed so that b > 0, or b == 0 and a == 1.
class ProjectiveSlope {
 public:
  ProjectiveSlope() : a_(0.0), b_(1.0) {}
  ProjectiveSlope(double a, double b);
  static ProjectiveSlope from_curve(const CurveSlope& c) {
    return {static_cast<double>(c.p()), static_cast<double>(c.q())};
  }

  double a() const { return a_; }
  double b() const { return b_; }
  /// |a b' - b a'| <= 1e-12.
  bool same_as(const ProjectiveSlope& o) const;

 private:
  double a_;
  double b_;
};

struct MeasuredLam {
  ProjectiveSlope slope;
  double weight = 1.0;

  MeasuredLam() = default;
  MeasuredLam(const ProjectiveSlope& s, double w);
  /// w times the curve itself, so that i(curve(a), b) = w |det(a, b)|.
  static MeasuredLam curve(const CurveSlope& c, double w = 1.0) {
    const auto ap = c.p() < 0 ? -c.p() : c.p();
    return {ProjectiveSlope::from_curve(c), w * static_cast<double>(std::max(ap, c.q()))};
  }
};

enum class Branch { plus, minus };

/// Chart on Teichmuller space: solves z^2 - xyz + x^2 + y^2 = 0 for z,
/// `plus` taking the larger root.
TracePoint teich_from_xy(double x, double y, Branch branch);

// --- log-domain trace arithmetic -------------------------------------------

/// log of the other root of w^2 - t_a t_b w + t_a^2 + t_b^2 = 0 given the log
/// of one root; picks the cancellation-free formula for either case.
double flip_log(double log_a, double log_b, double log_root);

/// Same flip on plain traces.
double flip(double a, double b, double root);

/// Hyperbolic length 2 arccosh(t/2) from log t. Throws NumericalDegeneracy
/// when t is within 1e-12 of 2.
double length_from_log_trace(double log_t);

/// log of the trace of a curve, by walking the Stern-Brocot tree.
double log_trace(const TracePoint& pt, const CurveSlope& c);

/// Trace of a curve (may be +inf for very long curves).
double curve_trace(const TracePoint& pt, const CurveSlope& c);

/// Hyperbolic length of the geodesic representative.
double curve_length(const TracePoint& pt, const CurveSlope& c);

/// i(mu, c) = weight * |a q - b p|.
double intersection(const MeasuredLam& mu, const CurveSlope& c);
/// Weight-free intersection with the normalised projective slope.
double intersection(const ProjectiveSlope& mu, const Vec2& c);

struct MatrixPair {
  Eigen::Matrix2d a;
  Eigen::Matrix2d b;
};

/// Unit-determinant matrices with tr A = x, tr B = y, tr AB = z.
MatrixPair realize_matrices(const TracePoint& pt);

}  // namespace lhoro::torus
