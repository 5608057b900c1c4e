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

#ifndef SNTEST_ESTIMATION_HPP
#define SNTEST_ESTIMATION_HPP

#include "sntest/numerics.hpp"
#include "sntest/sample.hpp"
#include "sntest/skew_normal.hpp"

namespace sntest {

/// Result of a maximum penalized likelihood fit.
struct MpleFit {
  DirectParams dp;
  CentralParams cp;
  double penalized_loglik = 0.0;
  double loglik = 0.0;
  bool converged = false;
  int iterations = 0;
};

/// Smallest sample size accepted by mple_fit; below this the moment-based
/// start is too unstable to be useful.
inline constexpr std::size_t kMpleMinN = 8;

/// Slant penalty Q(lambda) = c1 * log(1 + c2 * lambda^2) with c1 = 0.87591,
/// c2 = 0.85625. Even, zero at the origin, strictly increasing in |lambda|;
/// keeps slant estimates finite where plain maximum likelihood diverges.
double penalty(double lambda);

/// log_likelihood(data, p) - penalty(p.lambda).
double penalized_loglik(const Sample& data, const DirectParams& p);

inline Tolerance default_mple_tolerance() { return Tolerance{1e-12, 1e-8, 1500}; }

/// Fits (xi, omega, lambda) by maximizing the penalized log-likelihood.
/// Starts from moment estimates in centred-parameter space, optimizes over
/// (xi, log omega, lambda) with Nelder-Mead, and reports convergence
/// honestly (non-convergence is a flag, not an error). Requires n >= 8
/// finite values with nonzero variance.
MpleFit mple_fit(const Sample& data, const Tolerance& tol = default_mple_tolerance());

}  // namespace sntest

#endif  // SNTEST_ESTIMATION_HPP
