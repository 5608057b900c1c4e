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

#include "sntest/skew_normal.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "sntest/errors.hpp"
#include "sntest/numerics.hpp"

namespace sntest {

namespace {

// b = sqrt(2/pi) and the skewness prefactor (4 - pi)/2; internal to the
// moment conversions.
constexpr double kB = 0.7978845608028653558798921;
constexpr double kSkewFactor = 0.4292036732051034432603951;

void require_finite_x(double x) {
  if (!std::isfinite(x)) throw DomainError("skew_normal: x must be finite");
}

}  // namespace

void DirectParams::validate() const {
  if (!std::isfinite(xi) || !std::isfinite(omega) || !std::isfinite(lambda)) {
    throw ParameterError("DirectParams: fields must be finite");
  }
  if (!(omega > 0.0)) {
    throw ParameterError("DirectParams: omega must be positive");
  }
}

void CentralParams::validate() const {
  if (!std::isfinite(mean) || !std::isfinite(sd) || !std::isfinite(gamma1)) {
    throw ParameterError("CentralParams: fields must be finite");
  }
  if (!(sd > 0.0)) {
    throw ParameterError("CentralParams: sd must be positive");
  }
  if (std::abs(gamma1) >= kMaxAbsSkewness - 1e-8) {
    throw InadmissibleSkewnessError(
        "CentralParams: |gamma1| = " + std::to_string(std::abs(gamma1)) +
        " is outside the attainable skewness range");
  }
}

double pdf(double x, const DirectParams& p) {
  p.validate();
  require_finite_x(x);
  const double z = (x - p.xi) / p.omega;
  return 2.0 / p.omega * std_normal_pdf(z) * std_normal_cdf(p.lambda * z);
}

double log_pdf(double x, const DirectParams& p) {
  p.validate();
  require_finite_x(x);
  const double z = (x - p.xi) / p.omega;
  return std::numbers::ln2 - std::log(p.omega) - 0.5 * z * z -
         0.9189385332046727417803297 + log_std_normal_cdf(p.lambda * z);
}

double cdf(double x, const DirectParams& p) {
  p.validate();
  require_finite_x(x);
  const double z = (x - p.xi) / p.omega;
  const double v = std_normal_cdf(z) - 2.0 * owens_t(z, p.lambda);
  return std::min(1.0, std::max(0.0, v));
}

Sample sample(std::size_t n, const DirectParams& p, Rng& rng) {
  p.validate();
  if (n == 0) throw ArgumentError("sample: n must be at least 1");
  const double delta = p.lambda / std::sqrt(1.0 + p.lambda * p.lambda);
  const double tail = std::sqrt(1.0 - delta * delta);
  Sample out;
  out.values.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double z0 = rng.normal();
    const double z1 = rng.normal();
    out.values.push_back(p.xi + p.omega * (delta * std::abs(z0) + tail * z1));
  }
  out.source = "simulated:skew_normal";
  return out;
}

CentralParams dp_to_cp(const DirectParams& p) {
  p.validate();
  const double delta = p.lambda / std::sqrt(1.0 + p.lambda * p.lambda);
  const double t = kB * delta;  // mean of the standardized variable
  CentralParams c;
  c.mean = p.xi + p.omega * t;
  c.sd = p.omega * std::sqrt(1.0 - t * t);
  c.gamma1 = kSkewFactor * t * t * t / std::pow(1.0 - t * t, 1.5);
  return c;
}

DirectParams cp_to_dp(const CentralParams& c) {
  c.validate();
  // Invert gamma1 = kSkewFactor * t^3 / (1-t^2)^(3/2) with t = b*delta.
  const double s = std::cbrt(c.gamma1 / kSkewFactor);
  const double t = s / std::sqrt(1.0 + s * s);
  const double delta = t / kB;
  DirectParams p;
  p.lambda = delta / std::sqrt(1.0 - delta * delta);
  p.omega = c.sd / std::sqrt(1.0 - t * t);
  p.xi = c.mean - p.omega * t;
  return p;
}

double log_likelihood(const Sample& data, const DirectParams& p) {
  p.validate();
  if (data.empty()) throw ArgumentError("log_likelihood: data must be nonempty");
  double sum = 0.0;
  for (double x : data.values) {
    require_finite_x(x);
    const double z = (x - p.xi) / p.omega;
    sum += -0.5 * z * z + log_std_normal_cdf(p.lambda * z);
  }
  const double per_point = std::numbers::ln2 - std::log(p.omega) -
                           0.9189385332046727417803297;
  return sum + static_cast<double>(data.size()) * per_point;
}

}  // namespace sntest
