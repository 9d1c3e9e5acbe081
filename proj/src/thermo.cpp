#include "xychain/thermo.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "xychain/errors.hpp"
#include "xychain/kernels.hpp"

#if XYCHAIN_HAVE_QUADMATH
#include <quadmath.h>
#endif

namespace xychain {

using kernels::Density;

ThermalPoint::ThermalPoint(double temperature) : temperature_(temperature) {
  if (!std::isfinite(temperature) || temperature < 0.0) {
    throw InvalidParameter("temperature must be finite and >= 0, got " + std::to_string(temperature));
  }
}

double ThermalPoint::beta() const {
  if (is_ground_state()) throw InvalidParameter("beta is undefined at T = 0");
  return 1.0 / temperature_;
}

QuadratureSpec default_quadrature() { return QuadratureSpec{}; }

QuadratureSpec reference_quadrature() {
  QuadratureSpec q;
  q.rel_tol = 1e-13;
  q.abs_tol = 1e-16;
  q.max_subdivisions = 4000;
  return q;
}

std::vector<double> feature_splits(const ModelParams& p, const ThermalPoint& t) {
  constexpr double kPi = std::numbers::pi;
  const double centre = gap_minimum_momentum(p);
  const double width = std::max({min_gap(p), t.temperature(), 1e-10});

  std::vector<double> points;
  if (centre > 0.0 && centre < kPi) points.push_back(centre);
  for (double w = width; w < 1.0; w *= 4.0) {
    points.push_back(centre - w);
    points.push_back(centre + w);
  }
  std::vector<double> splits;
  std::sort(points.begin(), points.end());
  for (double x : points) {
    if (x <= 0.0 || x >= kPi) continue;
    if (!splits.empty() && x <= splits.back()) continue;
    splits.push_back(x);
  }
  return splits;
}

namespace {

constexpr double kPi = std::numbers::pi;

std::vector<double> merged_splits(const std::vector<double>& a, const std::vector<double>& b) {
  std::vector<double> all(a);
  all.insert(all.end(), b.begin(), b.end());
  std::sort(all.begin(), all.end());
  std::vector<double> out;
  for (double x : all) {
    if (x <= 0.0 || x >= kPi) continue;
    if (!out.empty() && x <= out.back()) continue;
    out.push_back(x);
  }
  return out;
}

// (1/pi) int_0^pi density(k) dk. No parameter validation; lambda may be negative here.
double mode_integral(Density density, const ModelParams& p, const ThermalPoint& t, const QuadratureSpec& q) {
  const kernels::Coupling coupling{p.gamma, t.temperature()};
  const double lambda = p.lambda;
  const BatchIntegrand integrand = [&](std::span<const double> k, std::span<double> out) {
    std::array<double, kPanelNodes> offset{};
    std::array<double, kPanelNodes> sine{};
    for (std::size_t i = 0; i < k.size(); ++i) {
      offset[i] = field_offset(k[i], lambda);
      sine[i] = std::sin(k[i]);
    }
    const std::size_t n = k.size();
    kernels::evaluate(density, coupling, {std::span(offset).first(n), std::span(sine).first(n)}, out);
  };
  QuadratureSpec spec = q;
  spec.forced_splits = merged_splits(q.forced_splits, feature_splits(p, t));
  return integrate(integrand, 0.0, kPi, spec).value / kPi;
}

double mode_sum(Density density, const ModelParams& p, const ThermalPoint& t, int n_sites) {
  const ModeGrid grid = finite_modes(n_sites);
  std::vector<double> offset(grid.momentum.size());
  for (std::size_t i = 0; i < offset.size(); ++i) offset[i] = field_offset(grid.momentum[i], p.lambda);
  std::vector<double> values(offset.size());
  kernels::evaluate(density, {p.gamma, t.temperature()}, {offset, grid.sine}, values);
  double sum = 0.0;
  double carry = 0.0;
  for (double v : values) {
    const double s = sum + v;
    carry += std::abs(sum) >= std::abs(v) ? (sum - s) + v : (v - s) + sum;
    sum = s;
  }
  return 2.0 * (sum + carry) / n_sites;
}

void require_positive_temperature(const ThermalPoint& t) {
  if (t.is_ground_state()) throw InvalidParameter("finite-N sums require T > 0");
}

}  // namespace

double free_energy(const ModelParams& p, const ThermalPoint& t, const QuadratureSpec& q) {
  validate(p);
  // Density is T ln(2 cosh(Lambda/T)), or Lambda at T = 0.
  return -mode_integral(Density::free_energy, p, t, q);
}

double magnetization(const ModelParams& p, const ThermalPoint& t, const QuadratureSpec& q) {
  validate(p);
  return mode_integral(Density::magnetization, p, t, q);
}

double susceptibility(const ModelParams& p, const ThermalPoint& t, const QuadratureSpec& q) {
  validate(p);
  if (t.is_ground_state()) {
    if (p.gamma == 0.0) {
      // M = 1 - (2/pi) arccos(lambda) below saturation; the response is the Fermi-point delta.
      if (p.lambda == kCriticalField) throw CriticalDivergence("XX susceptibility diverges at lambda = 1, T = 0");
      if (p.lambda > kCriticalField) return 0.0;
      return 2.0 / (kPi * std::sqrt(1.0 - p.lambda * p.lambda));
    }
    if (min_gap(p) == 0.0) {
      throw CriticalDivergence("susceptibility diverges at the critical point lambda = 1, T = 0");
    }
  }
  return mode_integral(Density::susceptibility, p, t, q);
}

ThermoOutput thermodynamics(const ModelParams& p, const ThermalPoint& t, const QuadratureSpec& q) {
  return {free_energy(p, t, q), magnetization(p, t, q), susceptibility(p, t, q)};
}

double free_energy_finite_n(const ModelParams& p, const ThermalPoint& t, int n_sites) {
  validate(p);
  require_positive_temperature(t);
  return -mode_sum(Density::free_energy, p, t, n_sites);
}

double magnetization_finite_n(const ModelParams& p, const ThermalPoint& t, int n_sites) {
  validate(p);
  require_positive_temperature(t);
  return mode_sum(Density::magnetization, p, t, n_sites);
}

double susceptibility_finite_n(const ModelParams& p, const ThermalPoint& t, int n_sites) {
  validate(p);
  require_positive_temperature(t);
  return mode_sum(Density::susceptibility, p, t, n_sites);
}

ThermoOutput thermodynamics_finite_n(const ModelParams& p, const ThermalPoint& t, int n_sites) {
  return {free_energy_finite_n(p, t, n_sites), magnetization_finite_n(p, t, n_sites),
          susceptibility_finite_n(p, t, n_sites)};
}

namespace {

void check_step(const ModelParams& p, const ThermalPoint& t, double h) {
  validate(p);
  if (!(h > 0.0) || !std::isfinite(h)) throw InvalidParameter("finite-difference step must be > 0");
  if (t.is_ground_state() && min_gap(p) <= 10.0 * h) {
    throw InvalidParameter("T = 0 finite differences need min_gap well above the step");
  }
}

#if XYCHAIN_HAVE_QUADMATH
using Wide = __float128;
Wide wide_sin(Wide x) { return sinq(x); }
Wide wide_hypot(Wide x, Wide y) { return hypotq(x, y); }
Wide wide_exp(Wide x) { return expq(x); }
Wide wide_log1p(Wide x) { return log1pq(x); }
#else
using Wide = long double;
Wide wide_sin(Wide x) { return std::sin(x); }
Wide wide_hypot(Wide x, Wide y) { return std::hypot(x, y); }
Wide wide_exp(Wide x) { return std::exp(x); }
Wide wide_log1p(Wide x) { return std::log1p(x); }
#endif

// Lambda + T ln(1 + e^{-2 Lambda / T}) = T ln(2 cosh(Lambda / T)), evaluated in binary128
// where available and independently of the kernels.
Wide free_energy_density(Wide k, Wide lambda, Wide gamma, Wide temperature) {
  const Wide half = wide_sin(k / 2);
  const Wide offset = lambda - 1 + 2 * half * half;
  const Wide lam = wide_hypot(offset, gamma * wide_sin(k));
  if (temperature == 0) return lam;
  return lam + temperature * wide_log1p(wide_exp(-2 * lam / temperature));
}

// (1/pi) int sum_i w_i f(k, lambda + step_i) / denominator dk, i.e. minus the stencil applied
// to F. The subtraction happens per node in wide precision, so the rounding floor
// eps |F| / h^2 stays far below the response even where chi is small.
double stencil_integral(const ModelParams& p, const ThermalPoint& t, std::span<const double> steps,
                        std::span<const int> weights, double denominator, const QuadratureSpec& q) {
  const auto integrand = [&](double k) {
    Wide acc = 0;
    for (std::size_t i = 0; i < steps.size(); ++i) {
      const Wide lambda = static_cast<Wide>(p.lambda) + static_cast<Wide>(steps[i]);
      acc += weights[i] * free_energy_density(k, lambda, p.gamma, t.temperature());
    }
    return static_cast<double>(acc / static_cast<Wide>(denominator));
  };
  QuadratureSpec spec = q;
  spec.forced_splits = merged_splits(q.forced_splits, feature_splits(p, t));
  return integrate(integrand, 0.0, kPi, spec).value / kPi;
}

}  // namespace

double susceptibility_fd(const ModelParams& p, const ThermalPoint& t, double h, const QuadratureSpec& q) {
  check_step(p, t, h);
  // F is even in lambda, so lambda - h < 0 is evaluated as is.
  const double steps[] = {h, 0.0, -h};
  const int weights[] = {1, -2, 1};
  return stencil_integral(p, t, steps, weights, h * h, q);
}

double magnetization_fd(const ModelParams& p, const ThermalPoint& t, double h, const QuadratureSpec& q) {
  check_step(p, t, h);
  const double steps[] = {h, -h};
  const int weights[] = {1, -1};
  return stencil_integral(p, t, steps, weights, 2.0 * h, q);
}

}  // namespace xychain
