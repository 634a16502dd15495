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

// Finite weighted digraphs as exact test instances for the horoboundary
// machinery: shortest-path distance is an asymmetric metric with no rounding
// when the weights are integers.

#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "lhoro/horoboundary.hpp"

namespace lhoro::horo {

struct Edge {
  std::size_t from = 0;
  std::size_t to = 0;
  double weight = 0.0;
};

class DigraphSpace {
 public:
  /// Parallel edges keep the lighter weight. Throws ContractViolation on
  /// negative weights, out-of-range vertices, or a vertex that cannot reach
  /// or be reached from the base.
  DigraphSpace(std::size_t vertex_count, const std::vector<Edge>& edges,
               std::size_t base);

  /// Plain-text edge list: one `u v w` per line, a `base <v>` header line,
  /// optional `vertices <n>`; `#` starts a comment.
  static DigraphSpace parse(std::string_view text);
  static DigraphSpace load(const std::string& path);

  std::size_t vertex_count() const { return n_; }
  std::size_t base() const { return base_; }
  /// Direct edge weight, +inf when absent (0 on the diagonal).
  double weight(std::size_t u, std::size_t v) const { return weights_[u * n_ + v]; }
  double distance(std::size_t u, std::size_t v) const { return dist_[u * n_ + v]; }

  AsymmetricSpace<std::size_t> as_space() const;

 private:
  std::size_t n_;
  std::size_t base_;
  std::vector<double> weights_;
  std::vector<double> dist_;
};

struct BruteOracle {
  /// distance[u][v] by minimising over walks of increasing edge count.
  std::vector<std::vector<double>> distance;
  /// psi[z][x] = d(x,z) - d(b,z) for every vertex z.
  std::vector<std::vector<double>> psi;
  /// One representative z per distinct psi table.
  std::vector<std::size_t> distinct;
};

/// Independent all-pairs oracle: Bellman-Ford style relaxation over walk
/// length on the raw edge table, sharing no code with DigraphSpace::distance.
BruteOracle digraph_brute_oracle(const DigraphSpace& g);

}  // namespace lhoro::horo
