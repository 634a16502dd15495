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

#include "lhoro/torus.hpp"

#include <cmath>
#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>

#include "lhoro/errors.hpp"

namespace lhoro::torus {

namespace {

constexpr double kLn2 = 0.69314718055994530942;

double log_add_exp(double u, double v) {
  const double hi = std::max(u, v);
  const double lo = std::min(u, v);
  return hi + std::log1p(std::exp(lo - hi));
}

}  // namespace

double markov_residual(const TracePoint& pt) {
  const auto [x, y, z] = pt;
  return std::abs(x / y / z + y / x / z + z / x / y - 1.0);
}

void validate(const TracePoint& pt) {
  if (!std::isfinite(pt.x) || !std::isfinite(pt.y) || !std::isfinite(pt.z))
    throw ContractViolation("trace point " + describe(pt) + " is not finite");
  if (!(pt.x > 2.0 && pt.y > 2.0 && pt.z > 2.0))
    throw ContractViolation("trace point " + describe(pt) + " has a coordinate <= 2");
  if (markov_residual(pt) > 1e-9)
    throw ContractViolation("trace point " + describe(pt) + " is off the Markov cubic");
}

std::string describe(const TracePoint& pt) {
  std::ostringstream out;
  out.precision(17);
  out << "(" << pt.x << ", " << pt.y << ", " << pt.z << ")";
  return out.str();
}

CurveSlope::CurveSlope(std::int64_t p, std::int64_t q) : p_(p), q_(q) {
  if (std::gcd(p, q) != 1)
    throw ContractViolation("slope " + std::to_string(p) + "/" + std::to_string(q) +
                            " is not a primitive vector");
  if (q_ < 0 || (q_ == 0 && p_ < 0)) {
    p_ = -p_;
    q_ = -q_;
  }
}

double CurveSlope::value() const {
  if (q_ == 0) return std::numeric_limits<double>::infinity();
  return static_cast<double>(p_) / static_cast<double>(q_);
}

std::string describe(const CurveSlope& c) {
  return std::to_string(c.p()) + "/" + std::to_string(c.q());
}

bool slope_precedes(const CurveSlope& a, const CurveSlope& b) {
  if (a.q() != b.q()) return a.q() < b.q();
  const auto abs_a = a.p() < 0 ? -a.p() : a.p();
  const auto abs_b = b.p() < 0 ? -b.p() : b.p();
  if (abs_a != abs_b) return abs_a < abs_b;
  return a.p() > b.p();
}

ProjectiveSlope::ProjectiveSlope(double a, double b) {
  if (!std::isfinite(a) || !std::isfinite(b))
    throw ContractViolation("projective slope must be finite");
  const double scale = std::max(std::abs(a), std::abs(b));
  if (scale == 0.0) throw ContractViolation("projective slope (0 : 0)");
  a_ = a / scale;
  b_ = b / scale;
  if (b_ < 0.0 || (b_ == 0.0 && a_ < 0.0)) {
    a_ = -a_;
    b_ = -b_;
  }
}

bool ProjectiveSlope::same_as(const ProjectiveSlope& o) const {
  return std::abs(a_ * o.b_ - b_ * o.a_) <= 1e-12;
}

MeasuredLam::MeasuredLam(const ProjectiveSlope& s, double w) : slope(s), weight(w) {
  if (!(w > 0.0) || !std::isfinite(w))
    throw ContractViolation("measured lamination weight must be positive and finite");
}

TracePoint teich_from_xy(double x, double y, Branch branch) {
  if (!(x > 2.0 && y > 2.0) || !std::isfinite(x) || !std::isfinite(y))
    throw ContractViolation("teich_from_xy: x and y must exceed 2");
  const double xy = x * y;
  const double disc = xy * xy - 4.0 * (x * x + y * y);
  if (disc < 0.0) throw ContractViolation("teich_from_xy: (x, y) is outside the chart");
  const double larger = 0.5 * (xy + std::sqrt(disc));
  const double smaller = (x * x + y * y) / larger;
  TracePoint pt{x, y, branch == Branch::plus ? larger : smaller};
  validate(pt);
  return pt;
}

double flip_log(double log_a, double log_b, double log_root) {
  const double s = log_a + log_b;
  if (log_root < s - kLn2) {
    // The known root is the smaller one: t_a t_b - root loses nothing.
    const double d = log_root - s;
    return d < -40.0 ? s : s + std::log1p(-std::exp(d));
  }
  return log_add_exp(2.0 * log_a, 2.0 * log_b) - log_root;
}

double flip(double a, double b, double root) {
  if (a < 1e100 && b < 1e100 && root < 1e200) {
    if (root < 0.5 * a * b) return a * b - root;
    return (a * a + b * b) / root;
  }
  return std::exp(flip_log(std::log(a), std::log(b), std::log(root)));
}

double length_from_log_trace(double log_t) {
  if (log_t > 20.0) return 2.0 * log_t;
  const double u = std::expm1(log_t - kLn2);  // t/2 - 1
  if (!(u > 5e-13))
    throw NumericalDegeneracy("curve trace is within 1e-12 of 2");
  return 2.0 * std::log1p(u + std::sqrt(u * (u + 2.0)));
}

double log_trace(const TracePoint& pt, const CurveSlope& c) {
  if (c.p() == 0) return std::log(pt.x);
  if (c.q() == 0) return std::log(pt.y);
  const bool negative = c.p() < 0;
  const std::int64_t target_p = negative ? -c.p() : c.p();
  const std::int64_t target_q = c.q();

  Vec2 l{0, 1};
  Vec2 r{1, 0};
  Vec2 m{1, 1};
  double log_l = std::log(pt.x);
  double log_r = std::log(pt.y);
  // The reflection p -> -p is the Vieta move on the third coordinate.
  double log_m = negative ? flip_log(log_l, log_r, std::log(pt.z)) : std::log(pt.z);
  while (!(m.p == target_p && m.q == target_q)) {
    const __int128 lhs = static_cast<__int128>(target_p) * m.q;
    const __int128 rhs = static_cast<__int128>(m.p) * target_q;
    if (lhs < rhs) {
      const double next = flip_log(log_l, log_m, log_r);
      r = m;
      log_r = log_m;
      m = l + m;
      log_m = next;
    } else {
      const double next = flip_log(log_m, log_r, log_l);
      l = m;
      log_l = log_m;
      m = m + r;
      log_m = next;
    }
  }
  return log_m;
}

double curve_trace(const TracePoint& pt, const CurveSlope& c) {
  return std::exp(log_trace(pt, c));
}

double curve_length(const TracePoint& pt, const CurveSlope& c) {
  return length_from_log_trace(log_trace(pt, c));
}

double intersection(const ProjectiveSlope& mu, const Vec2& c) {
  return std::abs(mu.a() * static_cast<double>(c.q) - mu.b() * static_cast<double>(c.p));
}

double intersection(const MeasuredLam& mu, const CurveSlope& c) {
  return mu.weight * intersection(mu.slope, c.vec());
}

MatrixPair realize_matrices(const TracePoint& pt) {
  if (!(pt.z > 2.0)) throw ContractViolation("realize_matrices: z must exceed 2");
  const double zeta = 0.5 * (pt.z + std::sqrt((pt.z - 2.0) * (pt.z + 2.0)));
  MatrixPair out;
  out.a << pt.x, -1.0, 1.0, 0.0;
  out.b << 0.0, zeta, -1.0 / zeta, pt.y;
  return out;
}

}  // namespace lhoro::torus
