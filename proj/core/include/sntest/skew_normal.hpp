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

#ifndef SNTEST_SKEW_NORMAL_HPP
#define SNTEST_SKEW_NORMAL_HPP

#include <cstddef>

#include "sntest/rng.hpp"
#include "sntest/sample.hpp"

namespace sntest {

/// Direct parameterization of the skew-normal family: location, scale and
/// slant. The density is (2/omega) phi(z) Phi(lambda z) with
/// z = (x - xi) / omega; lambda = 0 recovers the normal distribution.
struct DirectParams {
  double xi = 0.0;      ///< location
  double omega = 1.0;   ///< scale, > 0
  double lambda = 0.0;  ///< slant

  void validate() const;
};

/// Centred (moment) parameterization: mean, standard deviation and skewness.
/// Better-behaved than DirectParams near lambda = 0, which is why estimation
/// starts here.
struct CentralParams {
  double mean = 0.0;
  double sd = 1.0;      ///< > 0
  double gamma1 = 0.0;  ///< skewness, |gamma1| below kMaxAbsSkewness

  void validate() const;
};

/// Largest skewness attainable in the family (limit lambda -> infinity).
inline constexpr double kMaxAbsSkewness = 0.99527172778;

double pdf(double x, const DirectParams& p);
double log_pdf(double x, const DirectParams& p);

/// CDF via Phi(z) - 2*T(z, lambda); clamped to [0, 1].
double cdf(double x, const DirectParams& p);

/// n independent draws using the half-normal convolution representation
/// Z = delta*|Z0| + sqrt(1-delta^2)*Z1; two normal variates per draw.
Sample sample(std::size_t n, const DirectParams& p, Rng& rng);

CentralParams dp_to_cp(const DirectParams& p);

/// Inverse of dp_to_cp. Throws InadmissibleSkewnessError when |gamma1| is at
/// or beyond the family bound.
DirectParams cp_to_dp(const CentralParams& c);

/// Sum of log_pdf over the sample; data must be nonempty and finite.
double log_likelihood(const Sample& data, const DirectParams& p);

}  // namespace sntest

#endif  // SNTEST_SKEW_NORMAL_HPP
