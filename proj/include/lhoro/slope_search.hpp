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

// Exhaustive search over simple closed curves of bounded height.
//
// Curves with max(|p|, q) <= depth are reached by walking two Stern-Brocot
// trees (one per sign of p) plus the two axis slopes. Each node carries the
// log-traces of its Farey parents and of itself for every point being
// evaluated, so a child costs one Vieta flip per point and no tree descent.

#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <vector>

#include "lhoro/torus.hpp"

namespace lhoro::torus {

struct SearchConfig {
  /// Farey order Q: every curve with max(|p|, q) <= depth is evaluated.
  std::int64_t depth = 2000;
  /// Continued-fraction refinement around the incumbent after the sweep.
  bool refine = true;
  int refine_steps = 200;
  std::int64_t refine_max_entry = std::int64_t{1} << 40;
};

template <std::size_t N>
struct FareyNode {
  Vec2 left;
  Vec2 right;
  std::array<double, N> log_left{};
  std::array<double, N> log_right{};
  std::array<double, N> log_mid{};

  Vec2 mid() const { return left + right; }
};

namespace detail {

inline std::int64_t height(const Vec2& v) {
  return std::max(v.p < 0 ? -v.p : v.p, v.q < 0 ? -v.q : v.q);
}

template <std::size_t N>
std::array<double, N> lengths_of(const std::array<double, N>& logs) {
  std::array<double, N> out;
  for (std::size_t i = 0; i < N; ++i) out[i] = length_from_log_trace(logs[i]);
  return out;
}

template <std::size_t N>
FareyNode<N> left_child(const FareyNode<N>& n) {
  FareyNode<N> c;
  c.left = n.left;
  c.right = n.mid();
  c.log_left = n.log_left;
  c.log_right = n.log_mid;
  for (std::size_t i = 0; i < N; ++i)
    c.log_mid[i] = flip_log(n.log_left[i], n.log_mid[i], n.log_right[i]);
  return c;
}

template <std::size_t N>
FareyNode<N> right_child(const FareyNode<N>& n) {
  FareyNode<N> c;
  c.left = n.mid();
  c.right = n.right;
  c.log_left = n.log_mid;
  c.log_right = n.log_right;
  for (std::size_t i = 0; i < N; ++i)
    c.log_mid[i] = flip_log(n.log_mid[i], n.log_right[i], n.log_left[i]);
  return c;
}

}  // namespace detail

/// Calls visit(node, lengths) once for every curve of height <= depth, where
/// lengths[i] is the hyperbolic length of node.mid() at pts[i]. Axis slopes
/// are presented with Farey parents (-1,1)+(1,0) and (1,1)+(0,-1).
template <std::size_t N, class Visitor>
void walk_farey(const std::array<TracePoint, N>& pts, std::int64_t depth, Visitor&& visit) {
  std::array<double, N> lx, ly, lz, lzr;
  for (std::size_t i = 0; i < N; ++i) {
    lx[i] = std::log(pts[i].x);
    ly[i] = std::log(pts[i].y);
    lz[i] = std::log(pts[i].z);
    lzr[i] = flip_log(lx[i], ly[i], lz[i]);  // trace of -1/1
  }

  FareyNode<N> horizontal{{-1, 1}, {1, 0}, lzr, ly, lx};  // 0/1
  FareyNode<N> vertical{{1, 1}, {0, -1}, lz, lx, ly};     // 1/0
  visit(static_cast<const FareyNode<N>&>(horizontal), detail::lengths_of(lx));
  visit(static_cast<const FareyNode<N>&>(vertical), detail::lengths_of(ly));
  if (depth < 1) return;

  std::vector<FareyNode<N>> stack;
  stack.reserve(static_cast<std::size_t>(4 * depth + 16));
  stack.push_back({{0, 1}, {1, 0}, lx, ly, lz});
  stack.push_back({{0, 1}, {-1, 0}, lx, ly, lzr});
  while (!stack.empty()) {
    const FareyNode<N> node = stack.back();
    stack.pop_back();
    visit(static_cast<const FareyNode<N>&>(node), detail::lengths_of(node.log_mid));
    const Vec2 m = node.mid();
    if (detail::height(node.left + m) <= depth) stack.push_back(detail::left_child(node));
    if (detail::height(m + node.right) <= depth) stack.push_back(detail::right_child(node));
  }
}

template <std::size_t N>
struct SupResult {
  double value = -std::numeric_limits<double>::infinity();
  CurveSlope witness{0, 1};
  /// Best value among curves of height <= depth / 2.
  double half_depth_value = -std::numeric_limits<double>::infinity();
  /// Best value of the exhaustive sweep, before refinement.
  double sweep_value = -std::numeric_limits<double>::infinity();
  FareyNode<N> node{};
  bool refined = false;
};

/// Maximises a ratio objective f(vec, lengths) over curves. The objective is
/// assumed homogeneous of degree 0 in vec (a function on PML).
template <std::size_t N, class Objective>
SupResult<N> farey_supremum(const std::array<TracePoint, N>& pts, const SearchConfig& cfg,
                            Objective&& f) {
  SupResult<N> best;
  const std::int64_t half = cfg.depth / 2;
  walk_farey<N>(pts, cfg.depth, [&](const FareyNode<N>& node, const std::array<double, N>& len) {
    const Vec2 v = node.mid();
    const double val = f(v, len);
    if (val > best.value ||
        (val == best.value && slope_precedes(CurveSlope::from_vector(v), best.witness))) {
      best.value = val;
      best.witness = CurveSlope::from_vector(v);
      best.node = node;
    }
    if (detail::height(v) <= half) best.half_depth_value = std::max(best.half_depth_value, val);
  });
  best.sweep_value = best.value;
  if (!cfg.refine) return best;

  // Greedy descent of the Stern-Brocot subtrees on either side of the
  // incumbent, always keeping the endpoint with the larger value.
  struct Interval {
    Vec2 a, b;
    std::array<double, N> log_a, log_b, log_far;
    double val_a, val_b;
  };
  const FareyNode<N> root = best.node;
  const double val_left = f(root.left, detail::lengths_of(root.log_left));
  const double val_right = f(root.right, detail::lengths_of(root.log_right));
  const double val_mid = best.value;
  std::array<Interval, 2> starts{
      Interval{root.left, root.mid(), root.log_left, root.log_mid, root.log_right, val_left, val_mid},
      Interval{root.mid(), root.right, root.log_mid, root.log_right, root.log_left, val_mid, val_right}};
  for (Interval iv : starts) {
    for (int step = 0; step < cfg.refine_steps; ++step) {
      const Vec2 c = iv.a + iv.b;
      if (detail::height(c) > cfg.refine_max_entry) break;
      std::array<double, N> log_c;
      for (std::size_t i = 0; i < N; ++i) log_c[i] = flip_log(iv.log_a[i], iv.log_b[i], iv.log_far[i]);
      const double val_c = f(c, detail::lengths_of(log_c));
      if (val_c > best.value) {
        best.value = val_c;
        best.witness = CurveSlope::from_vector(c);
        best.refined = true;
      }
      if (iv.val_a >= iv.val_b) {
        iv.log_far = iv.log_b;
        iv.b = c;
        iv.log_b = log_c;
        iv.val_b = val_c;
      } else {
        iv.log_far = iv.log_a;
        iv.a = c;
        iv.log_a = log_c;
        iv.val_a = val_c;
      }
    }
  }
  return best;
}

}  // namespace lhoro::torus
