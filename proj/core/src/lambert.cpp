// Copyright 2026 The viscid Authors
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

#include "viscid/lambert.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace viscid {
namespace {

// 1/e split as hi + lo so that x + 1/e is exact near the branch point.
constexpr double kInvEHi = 0.36787944117144233;
constexpr double kInvELo = -1.2428753672788363e-17;
constexpr double kBranchClamp = 1e-14;
constexpr double kEps = std::numeric_limits<double>::epsilon();

// W = -1 + p - p^2/3 + 11/72 p^3 - ... with p = +-sqrt(2 (e x + 1)).
double branch_point_series(double p) {
  constexpr double c[] = {-1.0,
                          1.0,
                          -1.0 / 3.0,
                          11.0 / 72.0,
                          -43.0 / 540.0,
                          769.0 / 17280.0,
                          -221.0 / 8505.0,
                          680863.0 / 43545600.0,
                          -1963.0 / 204120.0,
                          226287557.0 / 37623398400.0};
  double acc = 0.0;
  for (int k = 9; k >= 0; --k) acc = acc * p + c[k];
  return acc;
}

double halley(double w, double x) {
  for (int it = 0; it < 64; ++it) {
    const double ew = std::exp(w);
    const double f = w * ew - x;
    if (f == 0.0) break;
    const double wp1 = w + 1.0;
    const double denom = ew * wp1 - (w + 2.0) * f / (2.0 * wp1);
    const double step = f / denom;
    w -= step;
    if (std::abs(step) <= 4.0 * kEps * std::max(1.0, std::abs(w))) break;
  }
  return w;
}

double principal_guess(double x) {
  if (x < -0.25) {
    const double p = std::sqrt(2.0 * (std::numbers::e * x + 1.0));
    return -1.0 + p - p * p / 3.0 + 11.0 / 72.0 * p * p * p;
  }
  if (x < 3.0) {
    // Winitzki's approximation.
    const double l = std::log1p(x);
    return l * (1.0 - std::log1p(l) / (2.0 + l));
  }
  const double l1 = std::log(x);
  const double l2 = std::log(l1);
  return l1 - l2 + l2 / l1;
}

double lower_guess(double x) {
  if (x < -0.25) {
    const double p = -std::sqrt(2.0 * (std::numbers::e * x + 1.0));
    return -1.0 + p - p * p / 3.0 + 11.0 / 72.0 * p * p * p;
  }
  const double l1 = std::log(-x);
  const double l2 = std::log(-l1);
  return l1 - l2 + l2 / l1;
}

}  // namespace

double lambert_w(Branch branch, double x) {
  if (std::isnan(x)) throw LambertDomainError("lambert_w: NaN argument");
  // q = x + 1/e, accurate to a few ulps of 1/e.
  const double q = (x + kInvEHi) + kInvELo;
  if (q < -kBranchClamp) throw LambertDomainError("lambert_w: argument below -1/e");
  if (branch == Branch::Lower && x >= 0.0)
    throw LambertDomainError("lambert_w: lower branch requires x < 0");
  if (q <= 0.0) return -1.0;
  if (branch == Branch::Principal && x == 0.0) return 0.0;
  if (branch == Branch::Principal && std::isinf(x)) return x;

  const double p = std::sqrt(2.0 * std::numbers::e * q);
  if (p < 1e-3) {
    // Truncation error is O(p^10); Halley would only add rounding noise here.
    return branch_point_series(branch == Branch::Principal ? p : -p);
  }
  if (branch == Branch::Principal) {
    if (std::abs(x) < 1e-8) return x * (1.0 - x);
    return halley(principal_guess(x), x);
  }
  return halley(lower_guess(x), x);
}

double lambert_w0_exp(double log_x) {
  if (std::isnan(log_x)) throw LambertDomainError("lambert_w0_exp: NaN argument");
  if (log_x < 500.0) return lambert_w(Branch::Principal, std::exp(log_x));
  // Newton on f(w) = w + ln w - L, monotone and concave for w > 0.
  double w = log_x - std::log(log_x);
  for (int it = 0; it < 64; ++it) {
    const double step = (w + std::log(w) - log_x) / (1.0 + 1.0 / w);
    w -= step;
    if (std::abs(step) <= 4.0 * kEps * w) break;
  }
  return w;
}

}  // namespace viscid
