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

#include <doctest.h>

#include <cmath>
#include <numeric>
#include <random>

#include "lhoro/errors.hpp"
#include "lhoro/torus.hpp"
#include "matrix_words.hpp"

using namespace lhoro;
using namespace lhoro::torus;

TEST_CASE("chart") {
  CHECK(teich_from_xy(3, 3, Branch::minus) == TracePoint{3, 3, 3});
  CHECK(teich_from_xy(3, 3, Branch::plus) == TracePoint{3, 3, 6});
  const auto p = teich_from_xy(4, 4, Branch::minus);
  CHECK(p.z == doctest::Approx(8.0 - std::sqrt(32.0)).epsilon(1e-15));
  CHECK(markov_residual(p) < 1e-15);
  CHECK_THROWS_AS(teich_from_xy(2.5, 2.5, Branch::plus), ContractViolation);
  CHECK_THROWS_AS(teich_from_xy(2.0, 5.0, Branch::plus), ContractViolation);
  CHECK_THROWS_AS(validate({3, 3, 3.1}), ContractViolation);
  CHECK_THROWS_AS(validate({3, 3, NAN}), ContractViolation);
}

TEST_CASE("slopes") {
  CHECK(CurveSlope(-1, -2) == CurveSlope(1, 2));
  CHECK(CurveSlope(-1, 0) == CurveSlope(1, 0));
  CHECK(CurveSlope(3, -5).p() == -3);
  CHECK_THROWS_AS(CurveSlope(2, 4), ContractViolation);
  CHECK_THROWS_AS(CurveSlope(0, 0), ContractViolation);
  CHECK(slope_precedes(CurveSlope(5, 1), CurveSlope(1, 2)));
  CHECK(slope_precedes(CurveSlope(1, 3), CurveSlope(-2, 3)));
  CHECK(slope_precedes(CurveSlope(1, 3), CurveSlope(-1, 3)));
  const ProjectiveSlope s(-2.0, -4.0);
  CHECK(s.a() == 0.5);
  CHECK(s.b() == 1.0);
  CHECK(s.same_as(ProjectiveSlope(1, 2)));
  CHECK(ProjectiveSlope(-3, 0).a() == 1.0);
  CHECK_THROWS_AS(ProjectiveSlope(0, 0), ContractViolation);
  CHECK_THROWS_AS(MeasuredLam(ProjectiveSlope(0, 1), 0.0), ContractViolation);
}

TEST_CASE("traces by recursion") {
  const TracePoint b{3, 3, 3};
  CHECK(curve_trace(b, {1, 2}) == doctest::Approx(6.0).epsilon(1e-14));
  CHECK(curve_trace(b, {1, 3}) == doctest::Approx(15.0).epsilon(1e-14));
  const auto p = teich_from_xy(4, 5, Branch::plus);
  CHECK(curve_trace(p, {1, 0}) == doctest::Approx(p.y).epsilon(1e-15));
  CHECK(curve_trace(p, {0, 1}) == doctest::Approx(p.x).epsilon(1e-15));
  CHECK(curve_trace(p, {1, 1}) == doctest::Approx(p.z).epsilon(1e-15));
  CHECK(curve_trace(p, {-1, 1}) == doctest::Approx(p.x * p.y - p.z).epsilon(1e-13));
  // Markov numbers along the Fibonacci slopes at (3,3,3)
  CHECK(curve_trace(b, {2, 3}) == doctest::Approx(3.0 * 5).epsilon(1e-14));
  CHECK(curve_trace(b, {3, 5}) == doctest::Approx(3.0 * 29).epsilon(1e-14));
}

TEST_CASE("flip is cancellation-free") {
  // roots of w^2 - 3*6 w + 9 + 36: 3 and 15
  CHECK(flip(3, 6, 3) == doctest::Approx(15.0).epsilon(1e-15));
  CHECK(flip(3, 6, 15) == doctest::Approx(3.0).epsilon(1e-15));
  CHECK(std::exp(flip_log(std::log(3.0), std::log(6.0), std::log(15.0))) ==
        doctest::Approx(3.0).epsilon(1e-14));
  // far out: root tiny relative to the product
  const double la = 400.0, lb = 500.0;
  CHECK(flip_log(la, lb, 1.0) == doctest::Approx(900.0).epsilon(1e-15));
  CHECK(flip_log(la, lb, 900.0) == doctest::Approx(2 * lb - 900.0 + std::log1p(std::exp(2 * la - 2 * lb))));
}

TEST_CASE("matrix realization") {
  const TracePoint b{3, 3, 3};
  const auto m = realize_matrices(b);
  CHECK(m.a.trace() == doctest::Approx(3.0));
  CHECK(m.b.trace() == doctest::Approx(3.0));
  CHECK((m.a * m.b).trace() == doctest::Approx(3.0).epsilon(1e-14));
  CHECK(m.a.determinant() == doctest::Approx(1.0));
  CHECK(m.b.determinant() == doctest::Approx(1.0));
  const Eigen::Matrix2d comm = m.a * m.b * m.a.inverse() * m.b.inverse();
  CHECK(comm.trace() == doctest::Approx(-2.0).epsilon(1e-12));
  CHECK(oracle::word_trace(b, 1, 2) == doctest::Approx(6.0).epsilon(1e-13));
  CHECK_THROWS_AS(realize_matrices({3, 3, 2}), ContractViolation);
}

TEST_CASE("recursion agrees with matrix words") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(2.2, 7.0);
  for (int k = 0; k < 4; ++k) {
    const auto pt = teich_from_xy(u(rng) + 0.6, u(rng) + 0.6, k % 2 ? Branch::plus : Branch::minus);
    for (std::int64_t q = 1; q <= 20; ++q)
      for (std::int64_t p = -20; p <= 20; ++p) {
        if (std::gcd(p, q) != 1) continue;
        const double lt = log_trace(pt, {p, q});
        const double lw = oracle::word(oracle::generators(pt), p, q).log_abs_trace();
        CHECK(std::abs(lt - lw) <= 1e-9 * std::max(1.0, std::abs(lw)));
      }
  }
}

TEST_CASE("lengths") {
  const TracePoint b{3, 3, 3};
  CHECK(curve_length(b, {0, 1}) == doctest::Approx(1.9248473002).epsilon(1e-10));
  CHECK(curve_length(b, {1, 2}) == doctest::Approx(3.5254943481).epsilon(1e-10));
  CHECK(curve_length(b, {1, 3}) > curve_length(b, {1, 2}));
  CHECK(curve_length(b, {0, 1}) == doctest::Approx(2.0 * std::acosh(1.5)).epsilon(1e-15));
  // large traces switch to 2 log t
  CHECK(length_from_log_trace(30.0) == 60.0);
  CHECK(length_from_log_trace(19.0) == doctest::Approx(2.0 * std::acosh(0.5 * std::exp(19.0))).epsilon(1e-15));

  const auto thin = teich_from_xy(2.0 + 1e-13, 1e7, Branch::plus);
  CHECK_THROWS_AS(curve_length(thin, {0, 1}), NumericalDegeneracy);
  CHECK_NOTHROW(curve_length(thin, {1, 0}));
}

TEST_CASE("intersection numbers") {
  CHECK(intersection(MeasuredLam::curve({0, 1}), CurveSlope(1, 0)) == 1.0);
  CHECK(intersection(MeasuredLam::curve({1, 2}), CurveSlope(1, 3)) == 1.0);
  const double phi = 0.5 * (1.0 + std::sqrt(5.0));
  // (phi : 1) is stored as (1, 1/phi)
  CHECK(intersection(MeasuredLam(ProjectiveSlope(phi, 1.0), 2.0), CurveSlope(1, 1)) ==
        doctest::Approx(2.0 - 2.0 / phi).epsilon(1e-12));
  // symmetric for curves
  CHECK(intersection(MeasuredLam::curve({2, 5}), CurveSlope(-3, 7)) == doctest::Approx(29.0).epsilon(1e-14));
  CHECK(intersection(MeasuredLam::curve({-3, 7}), CurveSlope(2, 5)) == doctest::Approx(29.0).epsilon(1e-14));
}
