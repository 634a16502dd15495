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

// Test-only oracle: traces and lengths from products of 2x2 matrices instead
// of the trace recursion. Shares nothing with the library beyond
// realize_matrices and the point type.

#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <functional>
#include <vector>

#include <Eigen/Core>
#include <Eigen/LU>

#include "lhoro/torus.hpp"

namespace oracle {

// Matrix kept as m * exp(log_scale) with max |m_ij| = 1.
struct Scaled {
  Eigen::Matrix2d m = Eigen::Matrix2d::Identity();
  double log_scale = 0.0;

  static Scaled of(const Eigen::Matrix2d& a) {
    Scaled s{a, 0.0};
    s.normalize();
    return s;
  }
  void normalize() {
    const double k = m.cwiseAbs().maxCoeff();
    m /= k;
    log_scale += std::log(k);
  }
  Scaled operator*(const Scaled& o) const {
    Scaled s{m * o.m, log_scale + o.log_scale};
    s.normalize();
    return s;
  }
  double log_abs_trace() const { return std::log(std::abs(m.trace())) + log_scale; }
};

inline double length_of_log_trace(double lt) {
  if (lt < 600.0) return 2.0 * std::acosh(0.5 * std::exp(lt));
  return 2.0 * lt;
}

struct Generators {
  Scaled a, b, b_inv;
};

inline Generators generators(const lhoro::torus::TracePoint& pt) {
  const auto mp = lhoro::torus::realize_matrices(pt);
  return {Scaled::of(mp.a), Scaled::of(mp.b), Scaled::of(mp.b.inverse())};
}

// W(0/1) = A, W(1/0) = B (B^-1 for negative slopes), W(mediant) = W(left) W(right).
inline Scaled word(const Generators& g, std::int64_t p, std::int64_t q) {
  if (q < 0) { p = -p; q = -q; }
  const Scaled& b = p < 0 ? g.b_inv : g.b;
  const std::int64_t ap = p < 0 ? -p : p;
  if (ap == 0) return g.a;
  if (q == 0) return b;
  std::int64_t lp = 0, lq = 1, rp = 1, rq = 0;
  Scaled wl = g.a, wr = b;
  for (;;) {
    const std::int64_t mp = lp + rp, mq = lq + rq;
    const Scaled wm = wl * wr;
    if (mp == ap && mq == q) return wm;
    if (ap * mq < mp * q) { rp = mp; rq = mq; wr = wm; }
    else { lp = mp; lq = mq; wl = wm; }
  }
}

inline double word_trace(const lhoro::torus::TracePoint& pt, std::int64_t p, std::int64_t q) {
  const Scaled w = word(generators(pt), p, q);
  return std::abs(w.m.trace()) * std::exp(w.log_scale);
}

// Calls visit(p, q, lengths) for every primitive (p, q) with max(|p|, q) <= depth,
// q >= 0, using matrix products only.
template <std::size_t N>
void dense_grid(const std::array<lhoro::torus::TracePoint, N>& pts, std::int64_t depth,
                const std::function<void(std::int64_t, std::int64_t, const std::array<double, N>&)>& visit) {
  std::array<Generators, N> gens;
  for (std::size_t i = 0; i < N; ++i) gens[i] = generators(pts[i]);
  std::array<double, N> len;
  for (std::size_t i = 0; i < N; ++i) len[i] = length_of_log_trace(gens[i].a.log_abs_trace());
  visit(0, 1, len);
  for (std::size_t i = 0; i < N; ++i) len[i] = length_of_log_trace(gens[i].b.log_abs_trace());
  visit(1, 0, len);
  struct Node {
    std::int64_t lp, lq, rp, rq;
    std::array<Scaled, N> wl, wr;
  };
  for (int sign : {1, -1}) {
    Node root{0, 1, sign, 0, {}, {}};
    for (std::size_t i = 0; i < N; ++i) {
      root.wl[i] = gens[i].a;
      root.wr[i] = sign > 0 ? gens[i].b : gens[i].b_inv;
    }
    std::vector<Node> stack{root};
    while (!stack.empty()) {
      const Node n = stack.back();
      stack.pop_back();
      const std::int64_t mp = n.lp + n.rp, mq = n.lq + n.rq;
      std::array<Scaled, N> wm;
      for (std::size_t i = 0; i < N; ++i) {
        wm[i] = n.wl[i] * n.wr[i];
        len[i] = length_of_log_trace(wm[i].log_abs_trace());
      }
      visit(mp, mq, len);
      auto h = [](std::int64_t a, std::int64_t b) { return std::max(a < 0 ? -a : a, b); };
      if (h(n.lp + mp, n.lq + mq) <= depth) stack.push_back({n.lp, n.lq, mp, mq, n.wl, wm});
      if (h(mp + n.rp, mq + n.rq) <= depth) stack.push_back({mp, mq, n.rp, n.rq, wm, n.wr});
    }
  }
}

}  // namespace oracle
