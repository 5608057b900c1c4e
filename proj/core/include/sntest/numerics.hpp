// Copyright 2026 The sntest Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SNTEST_NUMERICS_HPP
#define SNTEST_NUMERICS_HPP

#include <functional>
#include <span>
#include <vector>

namespace sntest {

/// Stopping rule for iterative routines. At least one of abs_tol/rel_tol
/// must be positive.
struct Tolerance {
  double abs_tol = 1e-10;
  double rel_tol = 1e-8;
  int max_iters = 1000;

  /// Throws ArgumentError when the invariants do not hold.
  void validate() const;
};

/// Standard normal density phi(z) = exp(-z^2/2) / sqrt(2 pi).
double std_normal_pdf(double z);

/// Standard normal CDF, accurate to ~1 ulp across the full range.
double std_normal_cdf(double z);

/// log(Phi(z)) without underflow in the lower tail; needed by likelihoods
/// where Phi underflows for z below about -37.5.
double log_std_normal_cdf(double z);

/// Inverse of std_normal_cdf on (0, 1), via Wichura's AS 241 (PPND16).
double std_normal_quantile(double p);

/// Owen's T function T(h, a) = (1/2pi) * Int_0^a exp(-h^2(1+x^2)/2)/(1+x^2) dx.
double owens_t(double h, double a);

struct MinimizeResult {
  std::vector<double> argmin;
  double value = 0.0;
  bool converged = false;
  int iterations = 0;
};

/// Derivative-free minimization: Nelder-Mead with dimension-adaptive
/// reflection/expansion/contraction/shrink parameters. Non-finite objective
/// values encountered during the search are treated as +infinity; a
/// non-finite value at the start point is an error. `converged` is set iff
/// the simplex diameter fell below abs_tol + rel_tol*|best| before
/// max_iters iterations.
MinimizeResult minimize(const std::function<double(std::span<const double>)>& objective,
                        std::span<const double> start, const Tolerance& tol);

}  // namespace sntest

#endif  // SNTEST_NUMERICS_HPP
