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

// Prints the dense-grid reference values that the unit tests freeze.
// Usage: freeze_goldens [depth]   (default 10000)

#include <cstdio>
#include <cstdlib>
#include <limits>

#include "matrix_words.hpp"

using lhoro::torus::Branch;
using lhoro::torus::TracePoint;
using lhoro::torus::teich_from_xy;

int main(int argc, char** argv) {
  const std::int64_t depth = argc > 1 ? std::atoll(argv[1]) : 10000;
  const TracePoint b{3.0, 3.0, 3.0};
  const TracePoint x = teich_from_xy(4.0, 4.0, Branch::minus);

  double fwd = 0.0, bwd = 0.0, sup_x = 0.0, sup_b = 0.0;
  std::int64_t fp = 0, fq = 0;
  oracle::dense_grid<2>({b, x}, depth, [&](std::int64_t p, std::int64_t q, const std::array<double, 2>& len) {
    const double r = len[1] / len[0];
    if (r > fwd) { fwd = r; fp = p; fq = q; }
    bwd = std::max(bwd, len[0] / len[1]);
    const double ip = static_cast<double>(p < 0 ? -p : p);  // i(0/1, p/q)
    sup_b = std::max(sup_b, ip / len[0]);
    sup_x = std::max(sup_x, ip / len[1]);
  });
  std::printf("depth %lld\n", static_cast<long long>(depth));
  std::printf("L(b,x) = %.15f  witness %lld/%lld\n", std::log(fwd), static_cast<long long>(fp),
              static_cast<long long>(fq));
  std::printf("L(x,b) = %.15f\n", std::log(bwd));
  std::printf("Psi_{0/1}(x) = %.15f\n", std::log(sup_x / sup_b));
  return 0;
}
