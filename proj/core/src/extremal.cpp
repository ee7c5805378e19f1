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

#include "viscid/extremal.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include <boost/math/special_functions/erf.hpp>

#include "parallel.hpp"
#include "viscid/errors.hpp"

namespace viscid {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// 1 - e^{-t} and t - 1 + e^{-t} without cancellation.
double decay(double t) { return -std::expm1(-t); }
double drift(double t) {
  if (t < 1e-3) return t * t * (0.5 - t * (1.0 / 6.0 - t * (1.0 / 24.0 - t / 120.0)));
  return t - decay(t);
}

// log1p(x) / x, continuous at 0.
double log1p_ratio(double x) { return x == 0.0 ? 1.0 : std::log1p(x) / x; }

void require_matching(const AdjointTerminal& p, const ModelParams& params) {
  if (p.lam.size() != p.eta.size()) throw DimensionMismatch(p.lam.size(), p.eta.size());
  if (p.lam.size() != params.n) throw DimensionMismatch(p.lam.size(), params.n);
}

// Constant-direction extremal (SameCollinear and ZeroLambda).
State constant_direction_state(double t, const Vec& dir, const ModelParams& params) {
  const Vec v0 = params.initial_velocity();
  const Vec u = normalized(dir);
  return State{v0 * decay(t) + u * drift(t), v0 * std::exp(-t) + u * decay(t)};
}

State opposite_collinear_state(double t, double T, const AdjointTerminal& p,
                               const ModelParams& params) {
  const double nlam = norm(p.lam);
  const double theta = T - std::log1p(norm(p.eta) / nlam);
  const Vec dir = p.lam / nlam;
  const Vec v0 = params.initial_velocity();
  // u = +dir before theta, -dir after; theta <= 0 means no switch in [0, t].
  const double vel_gain =
      std::exp(-t) * std::abs(std::expm1(theta)) - std::abs(std::expm1(theta - t));
  const double pos_gain = std::abs(theta) - std::abs(t - theta);
  State s;
  s.v = v0 * std::exp(-t) + dir * vel_gain;
  s.r = v0 - s.v + dir * pos_gain;
  return s;
}

// |a||b| + (a, b) given the wedge norm w = |a ^ b|. The second form avoids
// cancellation when a and b are nearly antiparallel.
double plus_form(double na_nb, double dot, double w) {
  if (dot >= 0.0) return na_nb + dot;
  return (w * w) / (na_nb - dot);
}

// General case: integrals of u_E and u_E e^{s-t} expressed through
//   B(s) = |xi||eta(s)| + (xi, eta(s)),    A(s) = |lam||eta(s)| + (lam, eta(s)),
// with xi = eta_T - lam_T. Because xi ^ eta(s) = xi ^ lam is constant and
// lam ^ eta(s) = e^{s-T} lam ^ xi, both can be evaluated through the wedge
// norm whenever the direct sum would cancel. The log ratio ln B(t)/B(0) is
// formed with log1p of an increment that carries the factor e^{-T}(e^t - 1)
// explicitly, so the e^{T-t} prefactor in v_E never multiplies rounding noise.
State general_state(double t, double T, const AdjointTerminal& p,
                    const ModelParams& params) {
  const Vec& lam = p.lam;
  const Vec xi = p.eta - lam;
  const double nlam = norm(lam);
  const double nxi = norm(xi);
  const double w = wedge_norm(lam, p.eta);  // = |lam ^ xi|

  const double e0 = std::exp(-T);
  const double et = std::exp(t - T);
  const Vec eta0 = lam + xi * e0;
  const Vec etat = lam + xi * et;
  const double n0 = norm(eta0);
  const double nt = norm(etat);
  const double grow = decay(t);  // e^{T-t} (et - e0)

  // (xi, eta_t + eta_0) / (|eta_t| + |eta_0|); lies in [-|xi|, |xi|].
  const double proj = inner(xi, etat + eta0) / (nt + n0);

  // e^{T-t} * ln(B(t)/B(0)) and ln(B(t)/B(0)) itself.
  double scaled_lb = 0.0;
  double lb = 0.0;
  const double dot0 = inner(xi, eta0);
  const double b0 = plus_form(nxi * n0, dot0, w);
  const double ratio = plus_form(nxi * nt, inner(xi, etat), w) / b0;
  if (ratio < 0.5 || ratio > 2.0) {
    // Far from 1 the direct logarithm is accurate; the increment form below
    // would instead cancel when B(t) or B(0) is tiny.
    lb = std::log(ratio);
    scaled_lb = lb * std::exp(T - t);
  } else if (proj >= 0.0) {
    // B(t) - B(0) = (et - e0) |xi| (proj + |xi|)
    const double num = nxi * (proj + nxi);
    const double x = e0 * std::expm1(t) * num / b0;
    lb = std::log1p(x);
    scaled_lb = log1p_ratio(x) * grow * num / b0;
  } else {
    // C = |xi||eta| - (xi, eta) = w^2 / B, so B(t)/B(0) = C(0)/C(t) and
    // C(t) - C(0) = (et - e0) |xi| (proj - |xi|).
    const double c0 = dot0 <= 0.0 ? nxi * n0 - dot0 : (w * w) / b0;
    const double num = nxi * (proj - nxi);
    const double x = e0 * std::expm1(t) * num / c0;
    lb = -std::log1p(x);
    scaled_lb = -log1p_ratio(x) * grow * num / c0;
  }

  const double a0 = plus_form(nlam * n0, inner(lam, eta0), w * e0);
  const double at = plus_form(nlam * nt, inner(lam, etat), w * et);
  const double la = std::log(a0 / at);

  const Vec lam_perp = lam - xi * (inner(lam, xi) / (nxi * nxi));
  const Vec v0 = params.initial_velocity();

  State s;
  s.v = v0 * std::exp(-t) + xi * (grow * proj / (nxi * nxi)) + lam_perp * (scaled_lb / nxi);
  s.r = v0 - s.v + lam * ((t + la) / nlam) + xi * (lb / nxi);
  return s;
}

Vec sphere_point_fibonacci(std::size_t i, std::size_t m) {
  const double golden = std::numbers::pi * (3.0 - std::sqrt(5.0));
  const double z = 1.0 - (2.0 * static_cast<double>(i) + 1.0) / static_cast<double>(m);
  const double rad = std::sqrt(std::max(0.0, 1.0 - z * z));
  const double phi = golden * static_cast<double>(i);
  return Vec{rad * std::cos(phi), rad * std::sin(phi), z};
}

double radical_inverse(std::size_t index, unsigned base) {
  double result = 0.0;
  double f = 1.0 / base;
  while (index > 0) {
    result += f * static_cast<double>(index % base);
    index /= base;
    f /= base;
  }
  return result;
}

Vec sphere_point_halton(std::size_t i, std::size_t k) {
  static constexpr unsigned kPrimes[] = {2,  3,  5,  7,  11, 13, 17, 19, 23, 29, 31,
                                         37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79};
  if (k > std::size(kPrimes))
    throw std::invalid_argument("projection_boundary: subspace dimension too large");
  Vec g(k);
  for (std::size_t j = 0; j < k; ++j) {
    const double u = radical_inverse(i + 1, kPrimes[j]);
    g[j] = std::numbers::sqrt2 * boost::math::erf_inv(2.0 * u - 1.0);
  }
  return normalized(g);
}

}  // namespace

Vec AdjointTerminal::stacked() const {
  std::vector<double> c(lam.begin(), lam.end());
  c.insert(c.end(), eta.begin(), eta.end());
  return Vec(std::move(c));
}

AdjointTerminal AdjointTerminal::from_stacked(const Vec& p) {
  if (p.size() % 2 != 0 || p.empty())
    throw std::invalid_argument("costate must have even, nonzero length");
  const std::size_t n = p.size() / 2;
  const auto c = p.components();
  return AdjointTerminal{Vec(std::vector<double>(c.begin(), c.begin() + n)),
                         Vec(std::vector<double>(c.begin() + n, c.end()))};
}

std::string_view to_string(CaseTag tag) noexcept {
  switch (tag) {
    case CaseTag::General: return "general";
    case CaseTag::OppositeCollinear: return "opposite-collinear";
    case CaseTag::SameCollinear: return "same-collinear";
    case CaseTag::ZeroLambda: return "zero-lambda";
  }
  return "unknown";
}

Vec adjoint_eta(double t, double T, const AdjointTerminal& p) {
  return p.lam + (p.eta - p.lam) * std::exp(t - T);
}

CaseTag classify(const AdjointTerminal& p) {
  const double nlam = norm(p.lam);
  const double neta = norm(p.eta);
  const double np = std::hypot(nlam, neta);
  if (!(np > 0.0)) throw std::invalid_argument("classify: costate is zero");
  if (nlam <= kZeroLambdaTolerance * np) return CaseTag::ZeroLambda;
  if (neta == 0.0) return CaseTag::SameCollinear;
  if (wedge_norm(p.lam, p.eta) > kCollinearTolerance * nlam * neta) return CaseTag::General;
  return inner(p.lam, p.eta) < 0.0 ? CaseTag::OppositeCollinear : CaseTag::SameCollinear;
}

SwitchInfo switching_time(double T, const AdjointTerminal& p) {
  if (classify(p) != CaseTag::OppositeCollinear) return {};
  // theta > 0  <=>  e^{-T} < |lam| / (|lam| + |eta|)
  const double theta = T - std::log1p(norm(p.eta) / norm(p.lam));
  if (!(theta > 0.0)) return {};
  return SwitchInfo{true, theta};
}

Vec extremal_control(double t, double T, const AdjointTerminal& p) {
  const Vec eta = adjoint_eta(t, T, p);
  const double scale = norm(p.lam) + norm(p.eta - p.lam);
  const double len = norm(eta);
  if (!(len > 8.0 * kEps * scale))
    throw SingularInstantError("extremal_control: eta vanishes at this instant");
  return eta / len;
}

State extremal_state(double t, double T, const AdjointTerminal& p,
                     const ModelParams& params, CaseTag forced) {
  require_matching(p, params);
  if (!(t >= 0.0)) throw std::invalid_argument("extremal_state: t must be >= 0");
  switch (forced) {
    case CaseTag::General:
      if (wedge_norm(p.lam, p.eta) == 0.0)
        throw std::invalid_argument("extremal_state: general form needs non-collinear costate");
      return general_state(t, T, p, params);
    case CaseTag::OppositeCollinear:
      return opposite_collinear_state(t, T, p, params);
    case CaseTag::SameCollinear:
      return constant_direction_state(t, p.lam, params);
    case CaseTag::ZeroLambda:
      return constant_direction_state(t, p.eta, params);
  }
  throw std::logic_error("extremal_state: unknown case");
}

State extremal_state(double t, double T, const AdjointTerminal& p,
                     const ModelParams& params) {
  return extremal_state(t, T, p, params, classify(p));
}

std::vector<State> boundary_sample(double T, const ModelParams& params,
                                   std::span<const Vec> dirs, unsigned threads) {
  for (const Vec& d : dirs) {
    if (d.size() != 2 * params.n) throw DimensionMismatch(d.size(), 2 * params.n);
  }
  std::vector<State> out(dirs.size());
  detail::parallel_for(dirs.size(), threads, [&](std::size_t i) {
    out[i] = extremal_state(T, T, AdjointTerminal::from_stacked(dirs[i]), params);
  });
  return out;
}

std::vector<std::size_t> parse_subspace(std::string_view label, std::size_t n) {
  std::vector<std::size_t> coords;
  std::size_t pos = 0;
  while (pos < label.size()) {
    const char kind = label[pos++];
    if (kind != 'r' && kind != 'v')
      throw ValidationError("subspaces", "expected 'r' or 'v' in '" + std::string(label) + "'");
    std::size_t axis = 0;
    const std::size_t start = pos;
    while (pos < label.size() && label[pos] >= '0' && label[pos] <= '9') {
      axis = axis * 10 + static_cast<std::size_t>(label[pos] - '0');
      ++pos;
    }
    if (pos == start || axis < 1 || axis > n)
      throw ValidationError("subspaces", "axis out of range in '" + std::string(label) + "'");
    const std::size_t index = (kind == 'r' ? 0 : n) + axis - 1;
    for (std::size_t c : coords) {
      if (c == index)
        throw ValidationError("subspaces", "repeated coordinate in '" + std::string(label) + "'");
    }
    coords.push_back(index);
  }
  if (coords.empty()) throw ValidationError("subspaces", "empty subspace label");
  return coords;
}

std::string subspace_label(std::span<const std::size_t> coords, std::size_t n) {
  std::string out;
  for (std::size_t c : coords) {
    out += c < n ? 'r' : 'v';
    out += std::to_string(c % n + 1);
  }
  return out;
}

std::vector<Vec> projection_boundary(double T, const ModelParams& params,
                                     std::span<const std::size_t> coords,
                                     std::size_t m, unsigned threads) {
  const std::size_t dim = 2 * params.n;
  if (coords.empty()) throw ValidationError("subspaces", "no coordinates selected");
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (coords[i] >= dim) throw ValidationError("subspaces", "coordinate index out of range");
    for (std::size_t j = 0; j < i; ++j) {
      if (coords[i] == coords[j]) throw ValidationError("subspaces", "repeated coordinate");
    }
  }
  if (m < 3) throw std::invalid_argument("projection_boundary: need at least 3 samples");

  const std::size_t k = coords.size();
  std::vector<Vec> sub;
  if (k == 1) {
    sub = {Vec{-1.0}, Vec{1.0}};
  } else {
    sub.reserve(m);
    for (std::size_t i = 0; i < m; ++i) {
      if (k == 2) {
        const double phi = 2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(m);
        sub.push_back(Vec{std::cos(phi), std::sin(phi)});
      } else if (k == 3) {
        sub.push_back(sphere_point_fibonacci(i, m));
      } else {
        sub.push_back(sphere_point_halton(i, k));
      }
    }
  }

  std::vector<Vec> dirs;
  dirs.reserve(sub.size());
  for (const Vec& q : sub) {
    Vec d(dim);
    for (std::size_t j = 0; j < k; ++j) d[coords[j]] = q[j];
    dirs.push_back(std::move(d));
  }

  const std::vector<State> ends = boundary_sample(T, params, dirs, threads);
  std::vector<Vec> out;
  out.reserve(ends.size());
  for (const State& s : ends) {
    Vec pt(k);
    for (std::size_t j = 0; j < k; ++j) {
      pt[j] = coords[j] < params.n ? s.r[coords[j]] : s.v[coords[j] - params.n];
    }
    out.push_back(std::move(pt));
  }
  return out;
}

}  // namespace viscid
