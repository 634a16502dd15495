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

// Acceptance harness: one PASS/FAIL line per criterion.

#include <chrono>
#include <cstdarg>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "lhoro/convergence.hpp"
#include "lhoro/digraph.hpp"
#include "lhoro/errors.hpp"
#include "lhoro/lamination.hpp"
#include "lhoro/lipschitz.hpp"
#include "lhoro/mapping_class.hpp"
#include "matrix_words.hpp"

using namespace lhoro;
using namespace lhoro::torus;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(const char* f, ...) __attribute__((format(printf, 1, 2)));
std::string fmt(const char* f, ...) {
  char buf[512];
  va_list ap;
  va_start(ap, f);
  std::vsnprintf(buf, sizeof buf, f, ap);
  va_end(ap);
  return buf;
}

const TracePoint kB{3, 3, 3};

TracePoint random_point(std::mt19937_64& rng, double lo, double hi) {
  std::uniform_real_distribution<double> u(lo, hi);
  std::bernoulli_distribution coin;
  for (;;) {
    const double x = u(rng), y = u(rng);
    const bool plus = coin(rng);
    if (x * x * y * y >= 4.0 * (x * x + y * y))
      return teich_from_xy(x, y, plus ? Branch::plus : Branch::minus);
  }
}

SearchConfig q2000() { return {}; }

Outcome a1() {
  std::mt19937_64 rng(101);
  double worst = 0.0;
  std::size_t n = 0;
  for (int k = 0; k < 10; ++k) {
    const TracePoint pt = random_point(rng, 2.2, 8.0);
    const auto gens = oracle::generators(pt);
    for (std::int64_t q = 1; q <= 50; ++q)
      for (std::int64_t p = -50; p <= 50; ++p) {
        if (std::gcd(p, q) != 1) continue;
        const double lw = oracle::word(gens, p, q).log_abs_trace();
        const double lr = log_trace(pt, CurveSlope(p, q));
        // relative error of the traces themselves
        worst = std::max(worst, std::abs(std::expm1(lr - lw)));
        ++n;
      }
  }
  return {worst <= 1e-9, fmt("%zu traces, max relative error %.3e", n, worst)};
}

Outcome a2() {
  std::mt19937_64 rng(202);
  double worst = -std::numeric_limits<double>::infinity();
  double asym = 0.0;
  TracePoint ax, ay;
  bool self_zero = true;
  for (int k = 0; k < 100; ++k) {
    const TracePoint x = random_point(rng, 2.5, 6.0), y = random_point(rng, 2.5, 6.0),
                     z = random_point(rng, 2.5, 6.0);
    const double xy = lipschitz_distance(x, y).value, yz = lipschitz_distance(y, z).value;
    const double xz = lipschitz_distance(x, z).value;
    worst = std::max(worst, xz - xy - yz);
    if (k < 10) {
      self_zero = self_zero && lipschitz_distance(x, x).value == 0.0;
      const double yx = lipschitz_distance(y, x).value;
      if (std::abs(xy - yx) > asym) {
        asym = std::abs(xy - yx);
        ax = x;
        ay = y;
      }
    }
  }
  const bool pass = worst <= 1e-8 && self_zero && asym > 1e-2;
  return {pass, fmt("max triangle excess %.3e, L(x,x)=0 %s, asymmetry %.4f at x=%s y=%s", worst,
                    self_zero ? "yes" : "no", asym, describe(ax).c_str(), describe(ay).c_str())};
}

IntMatrix2 random_word(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> len(1, 5), gen(0, 3);
  IntMatrix2 m;
  for (int i = len(rng); i > 0; --i) m = m * generator_matrix(static_cast<Generator>(gen(rng)));
  return m;
}

Outcome a3() {
  std::mt19937_64 rng(303);
  double worst = 0.0;
  for (int k = 0; k < 50; ++k) {
    const IntMatrix2 g = random_word(rng);
    const TracePoint x = random_point(rng, 2.5, 6.0), y = random_point(rng, 2.5, 6.0);
    const double d = lipschitz_distance(x, y).value;
    const double gd = lipschitz_distance(mcg_apply(g, x), mcg_apply(g, y)).value;
    worst = std::max(worst, std::abs(gd - d));
  }
  return {worst <= 1e-6, fmt("50 triples, max |L(gx,gy) - L(x,y)| = %.3e", worst)};
}

bool decreasing_tail(const ConvergenceReport& r, std::size_t steps) {
  const std::size_t n = r.rows.size();
  const std::size_t from = n > steps ? n - 1 - steps : 0;
  for (std::size_t i = from + 1; i < n; ++i)
    if (!(r.rows[i].residual < r.rows[i - 1].residual)) return false;
  return true;
}

Outcome a4() {
  const auto probes = default_probes();
  const auto tw = converge_twist(CurveSlope(0, 1), 30, probes, kB, q2000());
  const double res_tw = tw.rows.back().residual;
  const bool dec_tw = decreasing_tail(tw, 10);
  const bool pass_tw = res_tw < 1e-2 && dec_tw;

  const IntMatrix2 g{2, 1, 1, 1};
  const auto pa = converge_pa(g, 6, probes, kB, q2000());
  const double res_pa = pa.rows.back().residual;
  const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
  const double wit = pa.rows.back().witness.value();
  const bool pass_pa = res_pa < 1e-2 && decreasing_tail(pa, 5) && std::abs(wit - phi) < 1e-3;

  return {pass_tw && pass_pa,
          fmt("twist 0/1: residual(30)=%.4e, 30*residual=%.4f, decreasing %s [%s]; "
              "pa [[2,1],[1,1]]: residual(6)=%.3e, witness %s (|w-phi|=%.1e) [%s]",
              res_tw, 30.0 * res_tw, dec_tw ? "yes" : "no", pass_tw ? "ok" : "miss", res_pa,
              describe(pa.rows.back().witness).c_str(), std::abs(wit - phi), pass_pa ? "ok" : "miss")};
}

lam::FormalLamination lam2(lam::Rational a, lam::Rational b) {
  return {lam::ErgodicBasis{{"e1", "e2"}}, {a, b}};
}

Outcome a5() {
  lam::TestCurveModel id;
  id.curves = {"c1", "c2"};
  id.M = {{1, 0}, {0, 1}};
  id.lb = {1, 1};
  const double delta = lam::detour_metric_closed(lam2(2, 1), lam2(1, 3));
  const double err = std::abs(delta - std::log(6.0));
  const double h_scaled = lam::detour_cost_closed(lam2(1, 3), lam2(lam::Rational(7, 2), lam::Rational(21, 2)), id);
  const bool inf_h = std::isinf(lam::detour_cost_closed(lam2(1, 0), lam2(1, 1), id));
  const bool inf_d = std::isinf(lam::detour_metric_closed(lam2(1, 0), lam2(0, 1)));
  return {err <= 1e-12 && h_scaled == 0.0 && inf_h && inf_d,
          fmt("|delta - log 6| = %.1e, H(beta, 3.5 beta) = %g, non-ll pairs infinite: %s", err, h_scaled,
              inf_h && inf_d ? "yes" : "no")};
}

Outcome a6() {
  std::mt19937_64 rng(606);
  std::uniform_int_distribution<int> w(1, 20), m(0, 9), lb(1, 30);
  const lam::ErgodicBasis basis{{"a", "b", "c"}};
  auto lamination = [&] {
    lam::FormalLamination f{basis, {}};
    for (int j = 0; j < 3; ++j) f.weights.push_back(lam::Rational(w(rng), w(rng)));
    return f;
  };
  auto model = [&](std::size_t cols) {
    lam::TestCurveModel t;
    t.M.assign(3, std::vector<lam::Rational>(cols));
    for (std::size_t k = 0; k < cols; ++k) {
      t.curves.push_back("c" + std::to_string(k));
      t.lb.push_back(lam::Rational(lb(rng), 10));
      for (auto& row : t.M) row[k] = m(rng);
    }
    for (std::size_t j = 0; j < 3; ++j) t.M[j][j % cols] += 1;
    return t;
  };
  double worst_tri = -1.0;
  bool symmetric = true, independent = true;
  for (int k = 0; k < 200; ++k) {
    const auto x = lamination(), y = lamination(), z = lamination();
    const auto m1 = model(5), m2 = model(2);
    const double dxy = lam::detour_metric_closed(x, y);
    symmetric = symmetric && dxy == lam::detour_metric_closed(y, x);
    worst_tri = std::max(worst_tri, dxy - lam::detour_metric_closed(x, z) - lam::detour_metric_closed(z, y));
    const double hxy = lam::detour_cost_closed(x, y, m1), hyz = lam::detour_cost_closed(y, z, m1),
                 hxz = lam::detour_cost_closed(x, z, m1);
    worst_tri = std::max(worst_tri, hxz - hxy - hyz);
    // delta from either model through the asymmetric costs, and from the closed form
    const double via1 = hxy + lam::detour_cost_closed(y, x, m1);
    const double via2 = lam::detour_cost_closed(x, y, m2) + lam::detour_cost_closed(y, x, m2);
    independent = independent && std::abs(via1 - dxy) <= 1e-12 && std::abs(via2 - dxy) <= 1e-12 &&
                  lam::detour_metric_closed(x, y) == dxy;
  }
  return {symmetric && independent && worst_tri <= 1e-12,
          fmt("symmetry exact %s, max triangle excess %.2e, model independence %s", symmetric ? "yes" : "no",
              worst_tri, independent ? "yes" : "no")};
}

// d(b, x_n) + Psi_sigma(x_n) against the closed form for sigma = c beta,
// beta the lamination the sequence converges to.
Outcome a7() {
  struct Case {
    const char* name;
    std::vector<TracePoint> seq;
    ProjectiveSlope beta;
  };
  const IntMatrix2 g{2, 1, 1, 1};
  const std::vector<Case> cases{
      {"twist 0/1", twist_sequence(CurveSlope(0, 1), 20, kB), ProjectiveSlope(0, 1)},
      {"twist 1/2", twist_sequence(CurveSlope(1, 2), 12, kB), ProjectiveSlope(1, 2)},
      {"pa [[2,1],[1,1]]", pa_sequence(g, 6, kB), attracting_slope(g)},
  };
  SearchConfig cfg;
  cfg.depth = 1000;
  const auto space = torus_space(kB, cfg);
  double margin = std::numeric_limits<double>::infinity();
  std::ostringstream detail;
  for (const auto& c : cases) {
    const auto model = induced_model({c.beta}, kB, 200);
    const lam::ErgodicBasis basis{{"mu"}};
    for (const lam::Rational scale : {lam::Rational(1), lam::Rational(3), lam::Rational(2, 5)}) {
      const lam::FormalLamination beta{basis, {1}}, sigma{basis, {scale}};
      const double closed = lam::detour_cost_closed(beta, sigma, model);
      const MeasuredLam eta(c.beta, static_cast<double>(scale));
      const auto along = horo::detour_cost_along<TracePoint>(
          space, c.seq, [&](const TracePoint& x) { return horofunction(eta, x, kB, cfg).value; });
      double low = std::numeric_limits<double>::infinity();
      for (double v : along.trace) low = std::min(low, v);
      margin = std::min(margin, low - closed);
      if (scale == 1)
        detail << c.name << ": H=" << closed << " min running " << low << " tail inf " << along.value << "; ";
    }
  }
  detail << "min margin " << margin;
  return {margin >= -1e-2, detail.str()};
}

std::vector<std::vector<double>> floyd(const horo::DigraphSpace& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::vector<double>> d(n, std::vector<double>(n));
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v) d[u][v] = g.weight(u, v);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t u = 0; u < n; ++u)
      for (std::size_t v = 0; v < n; ++v) d[u][v] = std::min(d[u][v], d[u][k] + d[k][v]);
  return d;
}

Outcome a8() {
  std::mt19937_64 rng(808);
  std::size_t mismatches = 0, checked = 0;
  for (int k = 0; k < 20; ++k) {
    std::uniform_int_distribution<std::size_t> nv(2, 12);
    const std::size_t n = nv(rng);
    std::uniform_int_distribution<int> w(1, 9);
    std::uniform_int_distribution<std::size_t> vx(0, n - 1);
    std::vector<horo::Edge> edges;
    for (std::size_t v = 0; v < n; ++v) edges.push_back({v, (v + 1) % n, static_cast<double>(w(rng))});
    for (std::size_t e = 0; e < 2 * n; ++e) {
      const std::size_t a = vx(rng), b = vx(rng);
      if (a != b) edges.push_back({a, b, static_cast<double>(w(rng))});
    }
    const horo::DigraphSpace g(n, edges, vx(rng));
    const auto space = g.as_space();
    const auto fw = floyd(g);
    std::vector<std::size_t> all(n);
    std::iota(all.begin(), all.end(), 0);
    for (std::size_t z = 0; z < n; ++z) {
      const auto table = horo::psi(space, z, all);
      for (std::size_t x = 0; x < n; ++x) {
        ++checked;
        if (table.values[x] != fw[x][z] - fw[g.base()][z]) ++mismatches;
      }
      // constant sequence at z with eta = psi_z: d(b,z) + d(z,z) - d(b,z) = 0
      const std::vector<std::size_t> seq(4, z);
      const auto along = horo::detour_cost_along<std::size_t>(
          space, seq, [&](const std::size_t& x) { return fw[x][z] - fw[g.base()][z]; },
          horo::DetourOptions{2, 1e12});
      ++checked;
      if (along.value != 0.0) ++mismatches;
    }
  }
  return {mismatches == 0, fmt("20 digraphs, %zu exact comparisons, %zu mismatches", checked, mismatches)};
}

Outcome a9() {
  std::mt19937_64 rng(909);
  std::uniform_int_distribution<int> w(1, 12), m(0, 6), lb(1, 20);
  const lam::ErgodicBasis basis{{"a", "b", "c", "d"}};
  bool bounded = true, close = true;
  double worst_gap = 0.0;
  for (int inst = 0; inst < 5; ++inst) {
    lam::FormalLamination beta{basis, {}}, sigma{basis, {}};
    for (int j = 0; j < 4; ++j) {
      beta.weights.push_back(w(rng));
      sigma.weights.push_back(lam::Rational(w(rng), w(rng)));
    }
    const auto rel = lam::ll_relation(sigma, beta);
    std::size_t top = 0;
    for (std::size_t j = 1; j < 4; ++j)
      if (*rel.f[j] > *rel.f[top]) top = j;
    lam::TestCurveModel model;
    model.M.assign(4, {});
    for (int k = 0; k < 8; ++k) {
      model.curves.push_back("c" + std::to_string(k));
      model.lb.push_back(lb(rng));
      for (auto& row : model.M) row.push_back(m(rng));
    }
    // near-diagonal column concentrated on the component with the largest f
    model.curves.push_back("diag");
    model.lb.push_back(1);
    for (std::size_t j = 0; j < 4; ++j) model.M[j].push_back(j == top ? lam::Rational(1) : lam::Rational(1, 1000000));
    for (auto& row : model.M) row[0] += 1;
    const auto r = lam::ratio_sup_bound(sigma, beta, model, 10000, 42 + inst);
    bounded = bounded && !r.infinite && r.sampled_max <= r.closed_form;
    const double gap = static_cast<double>(r.gap() / r.closed_form);
    worst_gap = std::max(worst_gap, gap);
    close = close && gap <= 0.01;
  }
  return {bounded && close, fmt("5 instances x 10^4 samples, bound never exceeded: %s, worst relative gap %.2e",
                                bounded ? "yes" : "no", worst_gap)};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"A1", a1}, {"A2", a2}, {"A3", a3}, {"A4", a4}, {"A5", a5},
      {"A6", a6}, {"A7", a7}, {"A8", a8}, {"A9", a9}};
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("%s %s  %s  [%.1f s]\n", name, o.pass ? "PASS" : "FAIL", o.detail.c_str(), secs);
    std::fflush(stdout);
    if (!o.pass) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
