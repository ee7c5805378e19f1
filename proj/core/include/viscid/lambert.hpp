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

#ifndef VISCID_LAMBERT_HPP_
#define VISCID_LAMBERT_HPP_

#include <stdexcept>

namespace viscid {

// Real branches of the Lambert W function, the inverse of w -> w e^w.
//   Principal (W_0): x >= -1/e, returns w >= -1
//   Lower (W_-1):    -1/e <= x < 0, returns w <= -1
enum class Branch { Principal, Lower };

class LambertDomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Arguments up to 1e-14 below -1/e are treated as -1/e; anything further
// out, NaN, or x >= 0 on the lower branch raises LambertDomainError.
double lambert_w(Branch branch, double x);

// W_0(e^L) for any finite L without forming e^L, so it neither overflows
// for large L nor loses the tiny result for very negative L.
double lambert_w0_exp(double log_x);

}  // namespace viscid

#endif  // VISCID_LAMBERT_HPP_
