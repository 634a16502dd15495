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

#include "lhoro/digraph.hpp"

#include <fstream>
#include <queue>
#include <sstream>

namespace lhoro::horo {

namespace {

std::vector<double> dijkstra_all_pairs(std::size_t n, const std::vector<double>& w) {
  std::vector<double> dist(n * n, kInfinity);
  using Item = std::pair<double, std::size_t>;
  for (std::size_t s = 0; s < n; ++s) {
    double* row = dist.data() + s * n;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
    row[s] = 0.0;
    heap.emplace(0.0, s);
    while (!heap.empty()) {
      auto [d, u] = heap.top();
      heap.pop();
      if (d > row[u]) continue;
      for (std::size_t v = 0; v < n; ++v) {
        const double e = w[u * n + v];
        if (v == u || std::isinf(e)) continue;
        if (d + e < row[v]) {
          row[v] = d + e;
          heap.emplace(row[v], v);
        }
      }
    }
  }
  return dist;
}

}  // namespace

DigraphSpace::DigraphSpace(std::size_t vertex_count, const std::vector<Edge>& edges,
                           std::size_t base)
    : n_(vertex_count), base_(base) {
  if (n_ == 0) throw ContractViolation("digraph: no vertices");
  if (base_ >= n_) throw ContractViolation("digraph: base vertex out of range");
  weights_.assign(n_ * n_, kInfinity);
  for (std::size_t v = 0; v < n_; ++v) weights_[v * n_ + v] = 0.0;
  for (const Edge& e : edges) {
    if (e.from >= n_ || e.to >= n_)
      throw ContractViolation("digraph: edge endpoint out of range");
    if (std::isnan(e.weight) || e.weight < 0.0)
      throw ContractViolation("digraph: negative weight on edge " +
                              std::to_string(e.from) + "->" + std::to_string(e.to));
    if (e.from == e.to) continue;
    double& slot = weights_[e.from * n_ + e.to];
    slot = std::min(slot, e.weight);
  }
  dist_ = dijkstra_all_pairs(n_, weights_);
  for (std::size_t v = 0; v < n_; ++v) {
    if (std::isinf(distance(base_, v)) || std::isinf(distance(v, base_)))
      throw ContractViolation("digraph: vertex " + std::to_string(v) +
                              " is not strongly connected to the base");
  }
}

DigraphSpace DigraphSpace::parse(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::vector<Edge> edges;
  std::optional<std::size_t> base;
  std::size_t declared = 0;
  std::size_t max_vertex = 0;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::string head;
    if (!(fields >> head)) continue;
    auto fail = [&](const std::string& why) {
      return ParseError("edge list line " + std::to_string(line_no) + ": " + why);
    };
    if (head == "base" || head == "vertices") {
      long long v = -1;
      if (!(fields >> v) || v < 0) throw fail("expected a non-negative integer");
      if (head == "base") {
        base = static_cast<std::size_t>(v);
        max_vertex = std::max(max_vertex, *base);
      } else {
        declared = static_cast<std::size_t>(v);
      }
      continue;
    }
    long long u = -1;
    long long v = -1;
    std::string wtext;
    std::istringstream first(head);
    if (!(first >> u) || !(fields >> v >> wtext) || u < 0 || v < 0)
      throw fail("expected `u v w`");
    double w = 0.0;
    if (wtext == "inf") {
      continue;
    }
    try {
      std::size_t used = 0;
      w = std::stod(wtext, &used);
      if (used != wtext.size()) throw fail("bad weight '" + wtext + "'");
    } catch (const std::logic_error&) {
      throw fail("bad weight '" + wtext + "'");
    }
    std::string extra;
    if (fields >> extra) throw fail("trailing characters");
    edges.push_back({static_cast<std::size_t>(u), static_cast<std::size_t>(v), w});
    max_vertex = std::max({max_vertex, static_cast<std::size_t>(u), static_cast<std::size_t>(v)});
  }
  if (!base) throw ParseError("edge list: missing `base <v>` header");
  const std::size_t n = std::max(declared, max_vertex + 1);
  return DigraphSpace(n, edges, *base);
}

DigraphSpace DigraphSpace::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open edge list '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

AsymmetricSpace<std::size_t> DigraphSpace::as_space() const {
  AsymmetricSpace<std::size_t> space;
  // The space keeps its own copy of the distance table.
  space.distance = [dist = dist_, n = n_](std::size_t u, std::size_t v) {
    return dist[u * n + v];
  };
  space.base = base_;
  space.describe = [](std::size_t v) { return "vertex " + std::to_string(v); };
  return space;
}

BruteOracle digraph_brute_oracle(const DigraphSpace& g) {
  const std::size_t n = g.vertex_count();
  BruteOracle out;
  // best[u][v] over walks with at most k edges; n-1 rounds reach every simple path.
  std::vector<std::vector<double>> best(n, std::vector<double>(n, kInfinity));
  for (std::size_t u = 0; u < n; ++u) best[u][u] = 0.0;
  for (std::size_t round = 1; round < n; ++round) {
    auto next = best;
    for (std::size_t u = 0; u < n; ++u)
      for (std::size_t m = 0; m < n; ++m) {
        if (std::isinf(best[u][m])) continue;
        for (std::size_t v = 0; v < n; ++v) {
          const double w = g.weight(m, v);
          if (m == v || std::isinf(w)) continue;
          next[u][v] = std::min(next[u][v], best[u][m] + w);
        }
      }
    best = std::move(next);
  }
  out.distance = best;
  const std::size_t b = g.base();
  out.psi.assign(n, std::vector<double>(n));
  for (std::size_t z = 0; z < n; ++z)
    for (std::size_t x = 0; x < n; ++x)
      out.psi[z][x] = best[x][z] - best[b][z];
  for (std::size_t z = 0; z < n; ++z) {
    bool seen = false;
    for (std::size_t r : out.distinct)
      if (out.psi[r] == out.psi[z]) seen = true;
    if (!seen) out.distinct.push_back(z);
  }
  return out;
}

}  // namespace lhoro::horo
