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

#include "viscid/vec.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>

namespace viscid {

DimensionMismatch::DimensionMismatch(std::size_t lhs, std::size_t rhs)
    : std::invalid_argument("dimension mismatch: " + std::to_string(lhs) +
                            " vs " + std::to_string(rhs)) {}

namespace {

void require_same_size(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw DimensionMismatch(a.size(), b.size());
}

}  // namespace

Vec Vec::unit(std::size_t n, std::size_t axis) {
  if (axis >= n) throw std::out_of_range("unit vector axis out of range");
  Vec e(n);
  e.c_[axis] = 1.0;
  return e;
}

Vec& Vec::operator+=(const Vec& other) {
  require_same_size(*this, other);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += other.c_[i];
  return *this;
}

Vec& Vec::operator-=(const Vec& other) {
  require_same_size(*this, other);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= other.c_[i];
  return *this;
}

Vec& Vec::operator*=(double s) noexcept {
  for (double& x : c_) x *= s;
  return *this;
}

Vec& Vec::operator/=(double s) noexcept {
  for (double& x : c_) x /= s;
  return *this;
}

Vec operator+(Vec a, const Vec& b) { return a += b; }
Vec operator-(Vec a, const Vec& b) { return a -= b; }
Vec operator-(Vec a) { return a *= -1.0; }
Vec operator*(Vec a, double s) { return a *= s; }
Vec operator*(double s, Vec a) { return a *= s; }
Vec operator/(Vec a, double s) { return a /= s; }

double inner(const Vec& a, const Vec& b) {
  require_same_size(a, b);
  double acc = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

double squared_norm(const Vec& a) {
  double acc = 0.0;
  for (double x : a) acc += x * x;
  return acc;
}

double norm(const Vec& a) {
  const double ss = squared_norm(a);
  if (ss > 1e-280 && ss < 1e280) return std::sqrt(ss);
  // Rescale to avoid underflow or overflow of the squares.
  double scale = 0.0;
  for (double x : a) scale = std::max(scale, std::abs(x));
  if (scale == 0.0 || !std::isfinite(scale)) return scale;
  double acc = 0.0;
  for (double x : a) acc += (x / scale) * (x / scale);
  return scale * std::sqrt(acc);
}

double wedge_norm(const Vec& a, const Vec& b) {
  require_same_size(a, b);
  double acc = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = i + 1; j < a.size(); ++j) {
      const double minor = a[i] * b[j] - a[j] * b[i];
      acc += minor * minor;
    }
  }
  return std::sqrt(acc);
}

Vec normalized(const Vec& a) {
  const double len = norm(a);
  if (!(len > 0.0)) throw std::domain_error("cannot normalize a zero vector");
  return a / len;
}

std::string to_string(const Vec& a) {
  std::string out;
  char buf[32];
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i) out.push_back(',');
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, a[i]);
    out.append(buf, ptr);
  }
  return out;
}

}  // namespace viscid
