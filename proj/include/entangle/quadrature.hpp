// Copyright 2026 The entangle Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ENTANGLE_QUADRATURE_HPP
#define ENTANGLE_QUADRATURE_HPP

#include <cstddef>
#include <functional>

namespace entangle::quad {

struct Options {
  double abs_tol = 1e-14;
  double rel_tol = 1e-12;
  std::size_t max_intervals = 4000;
};

struct Result {
  double value = 0.0;
  double error = 0.0;
  std::size_t intervals = 0;
};

/// Globally adaptive 15-point Gauss-Kronrod rule on [a, b]: the interval with
/// the largest error estimate is bisected until the summed estimate drops
/// below max(abs_tol, rel_tol |I|). Throws NumericalFailure when
/// max_intervals is exhausted.
Result integrate(const std::function<double(double)> &f, double a, double b,
                 const Options &opt = {});

/// Integral over [a, inf) through x = a + t / (1 - t), t in [0, 1).
Result integrate_to_infinity(const std::function<double(double)> &f, double a,
                             const Options &opt = {});

}  // namespace entangle::quad

#endif  // ENTANGLE_QUADRATURE_HPP
