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

// Horoboundary machinery for an arbitrary, possibly asymmetric, metric space
// given as a distance oracle. Everything here is a template over the point
// type so the same code runs on finite digraphs and on Teichmuller space.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "lhoro/errors.hpp"

namespace lhoro::horo {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

template <class Point>
struct AsymmetricSpace {
  std::function<double(const Point&, const Point&)> distance;
  Point base{};
  std::function<bool(const Point&, const Point&)> same =
      [](const Point& a, const Point& b) { return a == b; };
  /// Slack allowed in the triangle inequality.
  double tolerance = 0.0;
  /// Used only to name points in error messages.
  std::function<std::string(const Point&)> describe;

  double symmetrized(const Point& a, const Point& b) const {
    return distance(a, b) + distance(b, a);
  }

  std::string name(const Point& p) const {
    if (describe) return describe(p);
    return "<point>";
  }
};

template <class Point>
struct SampledFunction {
  std::vector<Point> probes;
  std::vector<double> values;
  bool exact = true;
  /// Reported for estimated tables (e.g. tail oscillation of a horofunction limit).
  std::optional<double> residual;

  std::size_t size() const { return probes.size(); }

  template <class Same>
  std::optional<double> value_at(const Point& p, Same&& same) const {
    for (std::size_t i = 0; i < probes.size(); ++i)
      if (same(probes[i], p)) return values[i];
    return std::nullopt;
  }
};

namespace detail {

template <class Point>
double checked_distance(const AsymmetricSpace<Point>& space, const Point& a,
                        const Point& b) {
  const double d = space.distance(a, b);
  if (!std::isfinite(d)) {
    std::ostringstream msg;
    msg << "distance d(" << space.name(a) << ", " << space.name(b) << ") is "
        << d;
    throw EvaluationError(msg.str());
  }
  return d;
}

}  // namespace detail

/// Coordinate function x -> d(x,z) - d(b,z) tabulated on `probes`.
template <class Point>
SampledFunction<Point> psi(const AsymmetricSpace<Point>& space, const Point& z,
                           const std::vector<Point>& probes) {
  if (probes.empty()) throw ContractViolation("psi: empty probe set");
  const double from_base = detail::checked_distance(space, space.base, z);
  SampledFunction<Point> out;
  out.probes = probes;
  out.values.reserve(probes.size());
  for (const Point& x : probes)
    out.values.push_back(detail::checked_distance(space, x, z) - from_base);
  out.exact = true;
  return out;
}

/// Moves a horofunction table to the base point b': xi'(.) = xi(.) - xi(b').
template <class Point, class Same = std::equal_to<>>
SampledFunction<Point> rebase(const SampledFunction<Point>& xi,
                              const Point& b_prime, Same same = {}) {
  const std::optional<double> shift = xi.value_at(b_prime, same);
  if (!shift) throw ContractViolation("rebase: new base point is not a probe");
  SampledFunction<Point> out = xi;
  for (double& v : out.values) v -= *shift;
  return out;
}

struct HorolimitOptions {
  /// Sequences whose symmetrized distance from the base stays at or below
  /// this over the tail are flagged as not escaping (diagnostic only).
  double escape_threshold = 10.0;
};

template <class Point>
struct HorolimitEstimate {
  SampledFunction<Point> table;      ///< psi of the last sequence point
  std::vector<double> oscillation;   ///< per probe, max - min over the tail
  std::vector<double> tail_escape;   ///< d_sym(b, x_n) over the tail
  bool escaping = false;
};

/// Estimates the horofunction limit of psi_{x_n} from the tail of a sequence.
template <class Point>
HorolimitEstimate<Point> horolimit_estimate(const AsymmetricSpace<Point>& space,
                                            const std::vector<Point>& sequence,
                                            const std::vector<Point>& probes,
                                            std::size_t tail_window,
                                            const HorolimitOptions& opts = {}) {
  if (probes.empty()) throw ContractViolation("horolimit_estimate: empty probe set");
  if (tail_window < 2)
    throw ContractViolation("horolimit_estimate: tail window must be at least 2");
  if (sequence.size() <= tail_window)
    throw ContractViolation(
        "horolimit_estimate: tail window must be shorter than the sequence");

  HorolimitEstimate<Point> est;
  std::vector<double> lo(probes.size(), kInfinity);
  std::vector<double> hi(probes.size(), -kInfinity);
  est.escaping = true;
  const std::size_t start = sequence.size() - tail_window;
  for (std::size_t n = start; n < sequence.size(); ++n) {
    SampledFunction<Point> table = psi(space, sequence[n], probes);
    for (std::size_t i = 0; i < probes.size(); ++i) {
      lo[i] = std::min(lo[i], table.values[i]);
      hi[i] = std::max(hi[i], table.values[i]);
    }
    const double esc = space.symmetrized(space.base, sequence[n]);
    est.tail_escape.push_back(esc);
    if (!(esc > opts.escape_threshold)) est.escaping = false;
    if (n + 1 == sequence.size()) est.table = std::move(table);
  }
  double worst = 0.0;
  for (std::size_t i = 0; i < probes.size(); ++i) {
    est.oscillation.push_back(hi[i] - lo[i]);
    worst = std::max(worst, hi[i] - lo[i]);
  }
  est.table.exact = false;
  est.table.residual = worst;
  return est;
}

struct DetourOptions {
  /// The liminf is read off as the infimum over this many trailing values.
  std::size_t tail_window = 8;
  /// Values above the cap are reported as +infinity.
  double cap = 1e12;
};

struct DetourAlong {
  double value = 0.0;               ///< +inf when above the cap
  bool infinite = false;
  std::vector<double> trace;        ///< d(b, x_n) + eta(x_n)
  std::vector<double> suffix_inf;   ///< inf over m >= n of trace[m]
  /// Always true: a single sequence only bounds the detour cost from above,
  /// with equality along almost-geodesics.
  bool upper_bound = true;
};

/// Tail liminf of n -> d(b, x_n) + eta(x_n) along the supplied sequence.
template <class Point>
DetourAlong detour_cost_along(const AsymmetricSpace<Point>& space,
                              const std::vector<Point>& sequence,
                              const std::function<double(const Point&)>& eta,
                              const DetourOptions& opts = {}) {
  if (sequence.empty()) throw ContractViolation("detour_cost_along: empty sequence");
  DetourAlong out;
  out.trace.reserve(sequence.size());
  for (const Point& x : sequence) {
    const double e = eta(x);
    if (std::isnan(e))
      throw EvaluationError("detour_cost_along: eta undefined at " + space.name(x));
    out.trace.push_back(detail::checked_distance(space, space.base, x) + e);
  }
  out.suffix_inf.assign(out.trace.size(), kInfinity);
  double running = kInfinity;
  for (std::size_t i = out.trace.size(); i-- > 0;) {
    running = std::min(running, out.trace[i]);
    out.suffix_inf[i] = running;
  }
  const std::size_t window = std::max<std::size_t>(1, opts.tail_window);
  const std::size_t start =
      out.trace.size() > window ? out.trace.size() - window : 0;
  out.value = out.suffix_inf[start];
  if (out.value > opts.cap) {
    out.value = kInfinity;
    out.infinite = true;
  }
  return out;
}

/// Symmetrized detour cost; +inf is absorbing.
inline double detour_metric(double h12, double h21) {
  if (std::isnan(h12) || std::isnan(h21) || h12 < 0.0 || h21 < 0.0)
    throw ContractViolation("detour_metric: detour costs must be non-negative");
  if (std::isinf(h12) || std::isinf(h21)) return kInfinity;
  return h12 + h21;
}

struct DefectOptions {
  /// Fraction of the path, counted from its end, over which pairs are taken.
  double tail_fraction = 0.5;
  /// Above this many tail points the pairs are taken on a fixed stride.
  std::size_t max_all_pairs = 1000;
};

/// sup over tail pairs s <= t of |d(g0, g_s) + d(g_s, g_t) - (t - t0)|.
template <class Point>
double almost_geodesic_defect(const AsymmetricSpace<Point>& space,
                              const std::vector<Point>& path,
                              const std::vector<double>& params,
                              const DefectOptions& opts = {}) {
  if (path.size() < 3)
    throw ContractViolation("almost_geodesic_defect: path needs at least 3 points");
  if (params.size() != path.size())
    throw ContractViolation("almost_geodesic_defect: missing path parameters");
  for (double t : params)
    if (!std::isfinite(t))
      throw ContractViolation("almost_geodesic_defect: non-finite path parameter");
  if (!(opts.tail_fraction > 0.0 && opts.tail_fraction <= 1.0))
    throw ContractViolation("almost_geodesic_defect: tail fraction must lie in (0,1]");

  const std::size_t n = path.size();
  const auto skip = static_cast<std::size_t>(
      std::floor((1.0 - opts.tail_fraction) * static_cast<double>(n - 1)));
  std::vector<std::size_t> idx;
  const std::size_t tail = n - skip;
  const std::size_t stride =
      tail <= opts.max_all_pairs ? 1 : (tail + opts.max_all_pairs - 1) / opts.max_all_pairs;
  for (std::size_t i = skip; i < n; i += stride) idx.push_back(i);
  if (idx.back() != n - 1) idx.push_back(n - 1);

  const Point& origin = path.front();
  std::vector<double> from_origin(idx.size());
  for (std::size_t a = 0; a < idx.size(); ++a)
    from_origin[a] = detail::checked_distance(space, origin, path[idx[a]]);

  double worst = 0.0;
  for (std::size_t a = 0; a < idx.size(); ++a) {
    for (std::size_t c = a; c < idx.size(); ++c) {
      const double t = params[idx[c]] - params.front();
      const double leg = detail::checked_distance(space, path[idx[a]], path[idx[c]]);
      worst = std::max(worst, std::abs(from_origin[a] + leg - t));
    }
  }
  return worst;
}

}  // namespace lhoro::horo
