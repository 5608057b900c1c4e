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

#include "sntest/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include <boost/math/special_functions/owens_t.hpp>

#include "sntest/errors.hpp"

namespace sntest {

namespace {

constexpr double kInvSqrt2Pi = 0.3989422804014326779399461;
constexpr double kSqrt2 = std::numbers::sqrt2;
constexpr double kLogSqrt2Pi = 0.9189385332046727417803297;

void require_finite(double x, const char* what) {
  if (!std::isfinite(x)) {
    throw DomainError(std::string(what) + " must be finite");
  }
}

}  // namespace

void Tolerance::validate() const {
  if (!(abs_tol >= 0.0) || !(rel_tol >= 0.0)) {
    throw ArgumentError("Tolerance: abs_tol and rel_tol must be nonnegative");
  }
  if (abs_tol == 0.0 && rel_tol == 0.0) {
    throw ArgumentError("Tolerance: abs_tol and rel_tol cannot both be zero");
  }
  if (max_iters < 1) {
    throw ArgumentError("Tolerance: max_iters must be at least 1");
  }
}

double std_normal_pdf(double z) {
  require_finite(z, "std_normal_pdf: z");
  return kInvSqrt2Pi * std::exp(-0.5 * z * z);
}

double std_normal_cdf(double z) {
  require_finite(z, "std_normal_cdf: z");
  return 0.5 * std::erfc(-z / kSqrt2);
}

double log_std_normal_cdf(double z) {
  require_finite(z, "log_std_normal_cdf: z");
  if (z > 6.0) {
    // log(1 - Phi(-z)); the complement is tiny, log1p keeps full precision.
    return std::log1p(-0.5 * std::erfc(z / kSqrt2));
  }
  if (z > -37.5) {
    return std::log(0.5 * std::erfc(-z / kSqrt2));
  }
  // Asymptotic expansion of the Mills ratio; erfc underflows past here.
  const double zsq = z * z;
  double series = -1.0 / zsq;
  series += 3.0 / (zsq * zsq);
  series -= 15.0 / (zsq * zsq * zsq);
  series += 105.0 / (zsq * zsq * zsq * zsq);
  return -0.5 * zsq - kLogSqrt2Pi - std::log(-z) + std::log1p(series);
}

// AS 241 (Wichura 1988), the PPND16 double-precision branch set.
double std_normal_quantile(double p) {
  if (!std::isfinite(p) || p <= 0.0 || p >= 1.0) {
    throw DomainError("std_normal_quantile: p must lie strictly in (0, 1)");
  }
  const double q = p - 0.5;
  if (std::abs(q) <= 0.425) {
    const double r = 0.180625 - q * q;
    return q *
           (((((((2.5090809287301226727e+3 * r + 3.3430575583588128105e+4) * r +
                 6.7265770927008700853e+4) * r + 4.5921953931549871457e+4) * r +
               1.3731693765509461125e+4) * r + 1.9715909503065514427e+3) * r +
             1.3314166789178437745e+2) * r + 3.3871328727963666080e+0) /
           (((((((5.2264952788528545610e+3 * r + 2.8729085735721942674e+4) * r +
                 3.9307895800092710610e+4) * r + 2.1213794301586595867e+4) * r +
               5.3941960214247511077e+3) * r + 6.8718700749205790830e+2) * r +
             4.2313330701600911252e+1) * r + 1.0);
  }
  double r = (q < 0.0) ? p : 1.0 - p;
  r = std::sqrt(-std::log(r));
  double z;
  if (r <= 5.0) {
    r -= 1.6;
    z = (((((((7.74545014278341407640e-4 * r + 2.27238449892691845833e-2) * r +
              2.41780725177450611770e-1) * r + 1.27045825245236838258e+0) * r +
            3.64784832476320460504e+0) * r + 5.76949722146069140550e+0) * r +
          4.63033784615654529590e+0) * r + 1.42343711074968357734e+0) /
        (((((((1.05075007164441684324e-9 * r + 5.47593808499534494600e-4) * r +
              1.51986665636164571966e-2) * r + 1.48103976427480074590e-1) * r +
            6.89767334985100004550e-1) * r + 1.67638483018380384940e+0) * r +
          2.05319162663775882187e+0) * r + 1.0);
  } else {
    r -= 5.0;
    z = (((((((2.01033439929228813265e-7 * r + 2.71155556874348757815e-5) * r +
              1.24266094738807843860e-3) * r + 2.65321895265761230930e-2) * r +
            2.96560571828504891230e-1) * r + 1.78482653991729133580e+0) * r +
          5.46378491116411436990e+0) * r + 6.65790464350110377720e+0) /
        (((((((2.04426310338993978564e-15 * r + 1.42151175831644588870e-7) * r +
              1.84631831751005468180e-5) * r + 7.86869131145613259100e-4) * r +
            1.48753612908506148525e-2) * r + 1.36929880922735805310e-1) * r +
          5.99832206555887937690e-1) * r + 1.0);
  }
  return (q < 0.0) ? -z : z;
}

double owens_t(double h, double a) {
  require_finite(h, "owens_t: h");
  require_finite(a, "owens_t: a");
  // Patefield-Tandy hybrid (series/quadrature with region selection on
  // (|h|, |a|) and the T(h, 1/a) reduction), via Boost.Math.
  return boost::math::owens_t(h, a);
}

namespace {

struct Vertex {
  std::vector<double> x;
  double f;
};

}  // namespace

MinimizeResult minimize(const std::function<double(std::span<const double>)>& objective,
                        std::span<const double> start, const Tolerance& tol) {
  tol.validate();
  const std::size_t k = start.size();
  if (k == 0) {
    throw ArgumentError("minimize: start point must be nonempty");
  }

  long evals_nonfinite = 0;
  auto eval = [&](const std::vector<double>& x) {
    const double f = objective(std::span<const double>(x));
    if (!std::isfinite(f)) {
      ++evals_nonfinite;
      return std::numeric_limits<double>::infinity();
    }
    return f;
  };

  std::vector<Vertex> simplex(k + 1);
  simplex[0].x.assign(start.begin(), start.end());
  simplex[0].f = eval(simplex[0].x);
  if (std::isinf(simplex[0].f)) {
    throw NumericError("minimize: objective is not finite at the start point");
  }

  // fminsearch-style initial steps: 5% of each coordinate, or a small
  // absolute step for coordinates at zero.
  for (std::size_t i = 0; i < k; ++i) {
    simplex[i + 1].x = simplex[0].x;
    double& c = simplex[i + 1].x[i];
    c += (c != 0.0) ? 0.05 * c : 0.00025;
    simplex[i + 1].f = eval(simplex[i + 1].x);
  }

  // Dimension-adaptive coefficients (Gao & Han 2012); for k = 2 these reduce
  // to the classic Nelder-Mead values.
  const double kd = static_cast<double>(k);
  const double rho = 1.0;
  const double chi = 1.0 + 2.0 / kd;
  const double gam = 0.75 - 0.5 / kd;
  const double sig = 1.0 - 1.0 / kd;

  auto by_value = [](const Vertex& a, const Vertex& b) { return a.f < b.f; };
  std::sort(simplex.begin(), simplex.end(), by_value);

  auto diameter = [&]() {
    double d = 0.0;
    for (std::size_t j = 1; j <= k; ++j) {
      for (std::size_t i = 0; i < k; ++i) {
        d = std::max(d, std::abs(simplex[j].x[i] - simplex[0].x[i]));
      }
    }
    return d;
  };
  auto best_scale = [&]() {
    double s = 0.0;
    for (double c : simplex[0].x) s = std::max(s, std::abs(c));
    return s;
  };

  MinimizeResult result;
  bool converged = false;
  int iter = 0;
  std::vector<double> centroid(k), xr(k), xe(k), xc(k);

  for (; iter < tol.max_iters; ++iter) {
    if (diameter() < tol.abs_tol + tol.rel_tol * best_scale()) {
      converged = true;
      break;
    }

    for (std::size_t i = 0; i < k; ++i) {
      double s = 0.0;
      for (std::size_t j = 0; j < k; ++j) s += simplex[j].x[i];
      centroid[i] = s / kd;
    }
    const Vertex& worst = simplex[k];

    for (std::size_t i = 0; i < k; ++i) {
      xr[i] = centroid[i] + rho * (centroid[i] - worst.x[i]);
    }
    const double fr = eval(xr);

    if (fr < simplex[0].f) {
      for (std::size_t i = 0; i < k; ++i) {
        xe[i] = centroid[i] + chi * (xr[i] - centroid[i]);
      }
      const double fe = eval(xe);
      if (fe < fr) {
        simplex[k].x = xe;
        simplex[k].f = fe;
      } else {
        simplex[k].x = xr;
        simplex[k].f = fr;
      }
    } else if (fr < simplex[k - 1].f) {
      simplex[k].x = xr;
      simplex[k].f = fr;
    } else {
      bool accepted = false;
      if (fr < worst.f) {
        for (std::size_t i = 0; i < k; ++i) {
          xc[i] = centroid[i] + gam * (xr[i] - centroid[i]);
        }
        const double fc = eval(xc);
        if (fc <= fr) {
          simplex[k].x = xc;
          simplex[k].f = fc;
          accepted = true;
        }
      } else {
        for (std::size_t i = 0; i < k; ++i) {
          xc[i] = centroid[i] - gam * (centroid[i] - worst.x[i]);
        }
        const double fc = eval(xc);
        if (fc < worst.f) {
          simplex[k].x = xc;
          simplex[k].f = fc;
          accepted = true;
        }
      }
      if (!accepted) {
        for (std::size_t j = 1; j <= k; ++j) {
          for (std::size_t i = 0; i < k; ++i) {
            simplex[j].x[i] = simplex[0].x[i] + sig * (simplex[j].x[i] - simplex[0].x[i]);
          }
          simplex[j].f = eval(simplex[j].x);
        }
      }
    }
    std::sort(simplex.begin(), simplex.end(), by_value);
  }

  result.argmin = simplex[0].x;
  result.value = simplex[0].f;
  result.converged = converged;
  result.iterations = iter;
  return result;
}

}  // namespace sntest
