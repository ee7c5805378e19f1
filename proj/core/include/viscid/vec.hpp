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

#ifndef VISCID_VEC_HPP_
#define VISCID_VEC_HPP_

#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace viscid {

// Thrown when two vectors of different length meet in one expression.
class DimensionMismatch : public std::invalid_argument {
 public:
  DimensionMismatch(std::size_t lhs, std::size_t rhs);
};

// Dense real vector whose length is fixed at construction. The dimension is
// a runtime quantity so a single build serves n = 1, 2, 3, ...
class Vec {
 public:
  Vec() = default;
  explicit Vec(std::size_t n, double fill = 0.0) : c_(n, fill) {}
  Vec(std::initializer_list<double> init) : c_(init) {}
  explicit Vec(std::vector<double> components) : c_(std::move(components)) {}

  // The axis-th canonical basis vector of R^n.
  static Vec unit(std::size_t n, std::size_t axis);

  std::size_t size() const noexcept { return c_.size(); }
  bool empty() const noexcept { return c_.empty(); }

  double operator[](std::size_t i) const { return c_[i]; }
  double& operator[](std::size_t i) { return c_[i]; }

  std::span<const double> components() const noexcept { return c_; }
  const std::vector<double>& data() const noexcept { return c_; }

  auto begin() const noexcept { return c_.begin(); }
  auto end() const noexcept { return c_.end(); }

  Vec& operator+=(const Vec& other);
  Vec& operator-=(const Vec& other);
  Vec& operator*=(double s) noexcept;
  Vec& operator/=(double s) noexcept;

  friend bool operator==(const Vec&, const Vec&) = default;

 private:
  std::vector<double> c_;
};

Vec operator+(Vec a, const Vec& b);
Vec operator-(Vec a, const Vec& b);
Vec operator-(Vec a);
Vec operator*(Vec a, double s);
Vec operator*(double s, Vec a);
Vec operator/(Vec a, double s);

double inner(const Vec& a, const Vec& b);
double norm(const Vec& a);
double squared_norm(const Vec& a);

// Norm of the bivector a ^ b, i.e. sqrt(|a|^2 |b|^2 - (a,b)^2), evaluated
// from the 2x2 minors so that it keeps full relative accuracy for nearly
// collinear arguments.
double wedge_norm(const Vec& a, const Vec& b);

// a / |a|; throws std::domain_error for the zero vector.
Vec normalized(const Vec& a);

// Comma separated "x,y,z" with shortest round-trip formatting.
std::string to_string(const Vec& a);

}  // namespace viscid

#endif  // VISCID_VEC_HPP_
