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

#include "lhoro/lamination.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <regex>
#include <set>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "lhoro/errors.hpp"

namespace lhoro::lam {

namespace mp = boost::multiprecision;

namespace {

mp::cpp_int pow_int(unsigned base, unsigned exp) {
  mp::cpp_int r = 1;
  for (unsigned i = 0; i < exp; ++i) r *= base;
  return r;
}

// sigma's weights listed in beta's component order.
std::vector<Rational> aligned(const FormalLamination& sigma, const FormalLamination& beta) {
  if (sigma.basis.ids.size() != beta.basis.ids.size())
    throw ContractViolation("laminations are supported on different bases");
  std::vector<Rational> out(beta.basis.ids.size());
  for (std::size_t j = 0; j < beta.basis.ids.size(); ++j) {
    const auto& id = beta.basis.ids[j];
    std::size_t k = 0;
    while (k < sigma.basis.ids.size() && sigma.basis.ids[k] != id) ++k;
    if (k == sigma.basis.ids.size())
      throw ContractViolation("laminations are supported on different bases (no '" + id +
                              "' in the first)");
    out[j] = sigma.weights[k];
  }
  return out;
}

// Row of the model for each basis component.
std::vector<std::size_t> row_map(const FormalLamination& mu, const TestCurveModel& model) {
  model.validate();
  std::vector<std::size_t> rows(mu.basis.ids.size());
  if (model.components.empty()) {
    if (model.M.size() != mu.basis.ids.size())
      throw ContractViolation("test-curve model has " + std::to_string(model.M.size()) +
                              " rows but the basis has " + std::to_string(mu.basis.ids.size()) +
                              " components");
    for (std::size_t j = 0; j < rows.size(); ++j) rows[j] = j;
    return rows;
  }
  ErgodicBasis labels{model.components};
  for (std::size_t j = 0; j < rows.size(); ++j) rows[j] = labels.index_of(mu.basis.ids[j]);
  return rows;
}

std::vector<Rational> column_pairings(const FormalLamination& mu, const TestCurveModel& model) {
  const auto rows = row_map(mu, model);
  std::vector<Rational> out(model.lb.size(), Rational(0));
  for (std::size_t j = 0; j < rows.size(); ++j) {
    if (mu.weights[j] == 0) continue;
    for (std::size_t k = 0; k < out.size(); ++k) out[k] += mu.weights[j] * model.M[rows[j]][k];
  }
  return out;
}

}  // namespace

Rational exact_rational(double v) {
  if (!std::isfinite(v)) throw ContractViolation("non-finite value has no rational form");
  if (v == 0.0) return 0;
  int e = 0;
  const double m = std::frexp(v, &e);  // v = m 2^e, 0.5 <= |m| < 1
  const auto mant = static_cast<long long>(std::ldexp(m, 53));
  Rational r{mp::cpp_int(mant)};
  const int shift = e - 53;
  if (shift >= 0) r *= Rational(mp::cpp_int(1) << shift);
  else r /= Rational(mp::cpp_int(1) << -shift);
  return r;
}

Rational parse_rational(const std::string& text) {
  static const std::regex frac(R"(^\s*([+-]?\d+)\s*/\s*(\d+)\s*$)");
  static const std::regex dec(R"(^\s*([+-]?)(\d*)(?:\.(\d*))?(?:[eE]([+-]?\d{1,4}))?\s*$)");
  std::smatch m;
  if (std::regex_match(text, m, frac)) {
    const mp::cpp_int den(m[2].str());
    if (den == 0) throw ParseError("rational '" + text + "' has zero denominator");
    return Rational(mp::cpp_int(m[1].str()), den);
  }
  if (std::regex_match(text, m, dec) && (m[2].length() + m[3].length()) > 0) {
    std::string digits = m[2].str() + m[3].str();
    // a leading zero would make cpp_int read the digits as octal
    digits.erase(0, std::min(digits.find_first_not_of('0'), digits.size() - 1));
    Rational r{mp::cpp_int(digits)};
    int exp10 = (m[4].matched ? std::stoi(m[4].str()) : 0) - static_cast<int>(m[3].length());
    if (exp10 >= 0) r *= Rational(pow_int(10, static_cast<unsigned>(exp10)));
    else r /= Rational(pow_int(10, static_cast<unsigned>(-exp10)));
    return m[1].str() == "-" ? Rational(-r) : r;
  }
  throw ParseError("cannot read '" + text + "' as a rational number");
}

std::string to_string(const Rational& r) { return r.str(); }

double log_rational(const Rational& r) {
  if (r <= 0) throw ContractViolation("log of a non-positive rational");
  if (r == 1) return 0.0;
  using F = mp::cpp_bin_float_50;
  const F v = F(mp::numerator(r)) / F(mp::denominator(r));
  return static_cast<double>(mp::log(v));
}

void ErgodicBasis::validate() const {
  if (ids.empty()) throw ContractViolation("ergodic basis is empty");
  std::set<std::string> seen;
  for (const auto& id : ids)
    if (!seen.insert(id).second) throw ContractViolation("ergodic basis repeats '" + id + "'");
}

std::size_t ErgodicBasis::index_of(const std::string& id) const {
  for (std::size_t j = 0; j < ids.size(); ++j)
    if (ids[j] == id) return j;
  throw ContractViolation("unknown component '" + id + "'");
}

void FormalLamination::validate() const {
  basis.validate();
  if (weights.size() != basis.ids.size())
    throw ContractViolation("lamination needs one weight per basis component");
  bool any = false;
  for (const auto& w : weights) {
    if (w < 0) throw ContractViolation("lamination weights must be nonnegative");
    any = any || w > 0;
  }
  if (!any) throw ContractViolation("lamination is identically zero");
}

void TestCurveModel::validate() const {
  if (M.empty()) throw ContractViolation("test-curve model has no rows");
  const std::size_t cols = lb.size();
  if (cols == 0) throw ContractViolation("test-curve model has no curves");
  if (!curves.empty() && curves.size() != cols)
    throw ContractViolation("test-curve model: curves and lb differ in length");
  if (!components.empty()) {
    if (components.size() != M.size())
      throw ContractViolation("test-curve model: components and rows of M differ in count");
    ErgodicBasis{components}.validate();
  }
  for (std::size_t j = 0; j < M.size(); ++j) {
    if (M[j].size() != cols) throw ContractViolation("test-curve model: M is not rectangular");
    bool any = false;
    for (const auto& v : M[j]) {
      if (v < 0) throw ContractViolation("test-curve model: negative intersection number");
      any = any || v > 0;
    }
    if (!any)
      throw ContractViolation("test-curve model: component row " + std::to_string(j) +
                              " meets no test curve");
  }
  for (const auto& l : lb)
    if (!(l > 0)) throw ContractViolation("test-curve model: base lengths must be positive");
}

LLRelation ll_relation(const FormalLamination& sigma, const FormalLamination& beta) {
  sigma.validate();
  beta.validate();
  const auto s = aligned(sigma, beta);
  LLRelation out;
  out.holds = true;
  out.f.resize(s.size());
  for (std::size_t j = 0; j < s.size(); ++j) {
    if (beta.weights[j] > 0) out.f[j] = s[j] / beta.weights[j];
    else if (s[j] > 0) out.holds = false;
  }
  return out;
}

Rational lfactor_model(const FormalLamination& mu, const TestCurveModel& model) {
  mu.validate();
  const auto pair = column_pairings(mu, model);
  Rational best = pair[0] / model.lb[0];
  for (std::size_t k = 1; k < pair.size(); ++k) best = std::max(best, Rational(pair[k] / model.lb[k]));
  return best;
}

std::optional<Rational> detour_cost_ratio(const FormalLamination& beta,
                                          const FormalLamination& sigma,
                                          const TestCurveModel& model) {
  const auto rel = ll_relation(sigma, beta);
  if (!rel.holds) return std::nullopt;
  Rational fmax = 0;
  for (const auto& f : rel.f)
    if (f && *f > fmax) fmax = *f;
  return lfactor_model(beta, model) * fmax / lfactor_model(sigma, model);
}

double detour_cost_closed(const FormalLamination& beta, const FormalLamination& sigma,
                          const TestCurveModel& model) {
  const auto r = detour_cost_ratio(beta, sigma, model);
  if (!r) return std::numeric_limits<double>::infinity();
  return log_rational(*r);
}

double detour_metric_closed(const FormalLamination& sigma, const FormalLamination& beta) {
  sigma.validate();
  beta.validate();
  const auto s = aligned(sigma, beta);
  Rational up = 0, down = 0;
  for (std::size_t j = 0; j < s.size(); ++j) {
    const auto& g = beta.weights[j];
    if ((s[j] > 0) != (g > 0)) return std::numeric_limits<double>::infinity();
    if (g == 0) continue;
    up = std::max(up, Rational(s[j] / g));
    down = std::max(down, Rational(g / s[j]));
  }
  return log_rational(up * down);
}

RatioSupBound ratio_sup_bound(const FormalLamination& sigma, const FormalLamination& beta,
                              const TestCurveModel& model, std::size_t samples,
                              std::uint64_t seed) {
  const auto rel = ll_relation(sigma, beta);
  RatioSupBound out;
  out.infinite = !rel.holds;
  for (const auto& f : rel.f)
    if (f && *f > out.closed_form) out.closed_form = *f;

  const auto cs = column_pairings(sigma, model);
  const auto cb = column_pairings(beta, model);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick_col(0, cs.size() - 1);
  std::uniform_int_distribution<int> pick_terms(1, 3);
  std::uniform_int_distribution<int> pick_coef(1, 16);
  bool first = true;
  for (std::size_t s = 0; s < samples; ++s) {
    Rational is = 0, ib = 0;
    const int terms = pick_terms(rng);
    for (int t = 0; t < terms; ++t) {
      const std::size_t k = pick_col(rng);
      const int c = pick_coef(rng);
      is += c * cs[k];
      ib += c * cb[k];
    }
    if (ib == 0) {
      ++out.skipped;
      continue;
    }
    ++out.used;
    const Rational r = is / ib;
    if (first || r > out.sampled_max) out.sampled_max = r;
    first = false;
  }
  return out;
}

}  // namespace lhoro::lam
