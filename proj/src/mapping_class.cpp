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

#include "lhoro/mapping_class.hpp"

#include <cmath>
#include <string>

#include "lhoro/errors.hpp"

namespace lhoro::torus {

namespace {

constexpr std::int64_t kMaxWord = 100000000;

std::int64_t mul(std::int64_t u, std::int64_t v) {
  std::int64_t r;
  if (__builtin_mul_overflow(u, v, &r)) throw NumericalDegeneracy("integer matrix entry overflow");
  return r;
}

std::int64_t add(std::int64_t u, std::int64_t v) {
  std::int64_t r;
  if (__builtin_add_overflow(u, v, &r)) throw NumericalDegeneracy("integer matrix entry overflow");
  return r;
}

// One trace move per generator, on log-traces.
void apply_move(Generator g, double& lx, double& ly, double& lz) {
  switch (g) {
    case Generator::swap:
      std::swap(lx, ly);
      break;
    case Generator::reflect:
      lz = flip_log(lx, ly, lz);
      break;
    case Generator::twist: {
      const double nz = flip_log(lz, ly, lx);
      lx = lz;
      lz = nz;
      break;
    }
    case Generator::twist_inverse: {
      const double nx = flip_log(lx, ly, lz);
      lz = lx;
      lx = nx;
      break;
    }
  }
}

}  // namespace

std::int64_t IntMatrix2::det() const { return add(mul(a, d), -mul(b, c)); }

IntMatrix2 IntMatrix2::inverse() const {
  const auto D = det();
  if (D != 1 && D != -1) throw ContractViolation("matrix " + describe(*this) + " has |det| != 1");
  return {D * d, -D * b, -D * c, D * a};
}

Vec2 IntMatrix2::apply(const Vec2& v) const {
  return {add(mul(a, v.p), mul(b, v.q)), add(mul(c, v.p), mul(d, v.q))};
}

IntMatrix2 IntMatrix2::operator*(const IntMatrix2& o) const {
  return {add(mul(a, o.a), mul(b, o.c)), add(mul(a, o.b), mul(b, o.d)),
          add(mul(c, o.a), mul(d, o.c)), add(mul(c, o.b), mul(d, o.d))};
}

IntMatrix2 IntMatrix2::pow(int n) const {
  if (n < 0) return inverse().pow(-n);
  IntMatrix2 out;
  for (int i = 0; i < n; ++i) out = out * *this;
  return out;
}

std::string describe(const IntMatrix2& g) {
  return "[[" + std::to_string(g.a) + "," + std::to_string(g.b) + "],[" + std::to_string(g.c) +
         "," + std::to_string(g.d) + "]]";
}

void check_unimodular(const IntMatrix2& g) {
  const auto D = g.det();
  if (D != 1 && D != -1) throw ContractViolation("matrix " + describe(g) + " has |det| != 1");
}

IntMatrix2 generator_matrix(Generator g) {
  switch (g) {
    case Generator::swap: return {0, 1, 1, 0};
    case Generator::reflect: return {-1, 0, 0, 1};
    case Generator::twist: return {1, 1, 0, 1};
    case Generator::twist_inverse: return {1, -1, 0, 1};
  }
  return {};
}

std::vector<Generator> decompose(const IntMatrix2& h) {
  check_unimodular(h);
  // Row-reduce E_m ... E_1 h = diag(+-1, +-1); then h = E_1^-1 ... E_m^-1 diag.
  std::vector<Generator> word;
  auto emit_shift = [&word, &h](std::int64_t k) {
    // row0 -= k row1 is U^-k on the left; its inverse U^k goes into the word.
    const Generator g = k > 0 ? Generator::twist : Generator::twist_inverse;
    if ((k > 0 ? k : -k) > kMaxWord - static_cast<std::int64_t>(word.size()))
      throw ContractViolation("decompose: " + describe(h) + " needs more than 1e8 generators");
    for (std::int64_t i = 0; i < (k > 0 ? k : -k); ++i) word.push_back(g);
  };
  IntMatrix2 m = h;
  while (m.c != 0) {
    const std::int64_t k = m.a / m.c;
    if (k != 0) {
      emit_shift(k);
      m.a -= k * m.c;
      m.b -= k * m.d;
    }
    word.push_back(Generator::swap);
    std::swap(m.a, m.c);
    std::swap(m.b, m.d);
  }
  const std::int64_t k = m.b * m.d;
  if (k != 0) {
    emit_shift(k);
    m.b -= k * m.d;
  }
  if (m.a != m.d) word.push_back(Generator::reflect);
  return word;
}

TracePoint mcg_apply(const IntMatrix2& g, const TracePoint& pt) {
  validate(pt);
  const auto word = decompose(g.inverse());
  if (word.empty()) return pt;
  double lx = std::log(pt.x), ly = std::log(pt.y), lz = std::log(pt.z);
  for (Generator s : word) apply_move(s, lx, ly, lz);
  const TracePoint out{std::exp(lx), std::exp(ly), std::exp(lz)};
  if (!std::isfinite(out.x) || !std::isfinite(out.y) || !std::isfinite(out.z))
    throw NumericalDegeneracy("mapping class image has a trace beyond double range");
  return out;
}

CurveSlope mcg_apply(const IntMatrix2& g, const CurveSlope& c) {
  check_unimodular(g);
  return CurveSlope::from_vector(g.apply(c.vec()));
}

ProjectiveSlope mcg_apply(const IntMatrix2& g, const ProjectiveSlope& s) {
  check_unimodular(g);
  const double a = static_cast<double>(g.a) * s.a() + static_cast<double>(g.b) * s.b();
  const double b = static_cast<double>(g.c) * s.a() + static_cast<double>(g.d) * s.b();
  return {a, b};
}

MeasuredLam mcg_apply(const IntMatrix2& g, const MeasuredLam& mu) {
  check_unimodular(g);
  const double a = static_cast<double>(g.a) * mu.slope.a() + static_cast<double>(g.b) * mu.slope.b();
  const double b = static_cast<double>(g.c) * mu.slope.a() + static_cast<double>(g.d) * mu.slope.b();
  const double scale = std::max(std::abs(a), std::abs(b));
  return {ProjectiveSlope(a, b), mu.weight * scale};
}

IntMatrix2 twist_matrix(const CurveSlope& c) {
  const std::int64_t c1 = c.p(), c2 = c.q();
  return {add(1, -mul(c1, c2)), mul(c1, c1), -mul(c2, c2), add(1, mul(c1, c2))};
}

std::vector<TracePoint> twist_sequence(const CurveSlope& c, int n_max, const TracePoint& base) {
  if (n_max < 0) throw ContractViolation("twist_sequence: n_max must be non-negative");
  validate(base);
  const IntMatrix2 t = twist_matrix(c);
  std::vector<TracePoint> out{base};
  IntMatrix2 g;
  for (int n = 1; n <= n_max; ++n) {
    g = g * t;
    out.push_back(mcg_apply(g, base));
  }
  return out;
}

std::vector<TracePoint> pa_sequence(const IntMatrix2& g, int n_max, const TracePoint& base) {
  if (g.det() != 1) throw ContractViolation("pa_sequence: " + describe(g) + " must have det 1");
  if (std::abs(g.trace()) <= 2)
    throw ContractViolation("pa_sequence: " + describe(g) + " is not hyperbolic (|trace| <= 2)");
  if (n_max < 0) throw ContractViolation("pa_sequence: n_max must be non-negative");
  validate(base);
  std::vector<TracePoint> out{base};
  IntMatrix2 h;
  for (int n = 1; n <= n_max; ++n) {
    h = h * g;
    out.push_back(mcg_apply(h, base));
  }
  return out;
}

ProjectiveSlope attracting_slope(const IntMatrix2& g) {
  check_unimodular(g);
  const double tr = static_cast<double>(g.trace());
  const double disc = tr * tr - 4.0 * static_cast<double>(g.det());
  if (!(disc > 0.0) || (g.det() == 1 && std::abs(tr) <= 2.0) || tr == 0.0)
    throw ContractViolation("attracting_slope: " + describe(g) + " is not hyperbolic");
  const double s = std::sqrt(disc);
  const double lambda = tr >= 0 ? 0.5 * (tr + s) : 0.5 * (tr - s);
  // Either row of g - lambda I gives the eigenvector; take the better-conditioned one.
  const double a1 = static_cast<double>(g.b), b1 = lambda - static_cast<double>(g.a);
  const double a2 = lambda - static_cast<double>(g.d), b2 = static_cast<double>(g.c);
  if (std::hypot(a1, b1) >= std::hypot(a2, b2)) return {a1, b1};
  return {a2, b2};
}

}  // namespace lhoro::torus
