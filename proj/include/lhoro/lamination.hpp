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

// Closed-form detour costs on abstract measured laminations.
//
// A lamination is a nonnegative combination of named, pairwise disjoint
// ergodic components. Suprema over measured laminations are replaced by a
// finite test-curve model: M[j][k] = i(component j, curve k) and base lengths
// lb[k]. All arithmetic is exact over the rationals (every finite double is
// one); logarithms are taken once, at the very end.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace lhoro::lam {

using Rational = boost::multiprecision::cpp_rational;

/// Exact value of a finite double.
Rational exact_rational(double v);
/// Parses "3", "-2/7", "0.25" or "1e-3" exactly.
Rational parse_rational(const std::string& text);
std::string to_string(const Rational& r);
/// Natural log, correct to double precision; exactly 0 for 1.
double log_rational(const Rational& r);

struct ErgodicBasis {
  std::vector<std::string> ids;

  /// Throws ContractViolation on an empty list or repeated id.
  void validate() const;
  /// Throws ContractViolation for an unknown id.
  std::size_t index_of(const std::string& id) const;
};

struct FormalLamination {
  ErgodicBasis basis;
  std::vector<Rational> weights;  ///< parallel to basis.ids

  /// Weights nonnegative, at least one positive, one per component.
  void validate() const;
  bool in_support(std::size_t j) const { return weights[j] > 0; }
};

struct TestCurveModel {
  /// Optional component ids labelling the rows of M; empty means positional.
  std::vector<std::string> components;
  std::vector<std::string> curves;
  std::vector<std::vector<Rational>> M;  ///< M[j][k] = i(component j, curve k)
  std::vector<Rational> lb;              ///< base lengths of the curves

  void validate() const;
};

struct LLRelation {
  bool holds = false;
  /// f_j = sigma_j / beta_j on beta's support, empty elsewhere.
  std::vector<std::optional<Rational>> f;
};

/// sigma << beta: every component charged by sigma is charged by beta.
LLRelation ll_relation(const FormalLamination& sigma, const FormalLamination& beta);

/// max_k (sum_j mu_j M[j][k]) / lb[k].
Rational lfactor_model(const FormalLamination& mu, const TestCurveModel& model);

/// H(Psi_beta, Psi_sigma) = log( lfactor(beta) max_j f_j / lfactor(sigma) ),
/// +inf unless sigma << beta.
double detour_cost_closed(const FormalLamination& beta, const FormalLamination& sigma,
                          const TestCurveModel& model);

/// Argument of the logarithm above, or nullopt when the cost is infinite.
std::optional<Rational> detour_cost_ratio(const FormalLamination& beta,
                                          const FormalLamination& sigma,
                                          const TestCurveModel& model);

/// delta = log( max_j f_j/g_j * max_j g_j/f_j ); +inf unless the supports
/// coincide. Independent of any test-curve model.
double detour_metric_closed(const FormalLamination& sigma, const FormalLamination& beta);

struct RatioSupBound {
  bool infinite = false;       ///< sigma is not << beta
  Rational closed_form = 0;    ///< max_j f_j
  Rational sampled_max = 0;    ///< largest i(sigma, eta) / i(beta, eta) seen
  std::size_t used = 0;        ///< samples with i(beta, eta) > 0
  std::size_t skipped = 0;
  /// closed_form - sampled_max (finite case).
  Rational gap() const { return closed_form - sampled_max; }
};

/// Samples eta as sparse nonnegative integer combinations of the model's
/// test curves and compares i(sigma, eta) / i(beta, eta) with max_j f_j.
RatioSupBound ratio_sup_bound(const FormalLamination& sigma, const FormalLamination& beta,
                              const TestCurveModel& model, std::size_t samples,
                              std::uint64_t seed);

}  // namespace lhoro::lam
