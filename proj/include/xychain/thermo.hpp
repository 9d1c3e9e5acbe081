#pragma once

// Thermodynamics per spin of the XY chain, in the thermodynamic limit
//
//   F   = -T ln 2 - (T/pi) int_0^pi ln cosh(Lambda_k / T) dk
//   M_z = -dF/dlambda  = (1/pi) int tanh(Lambda_k/T) (lambda - cos k)/Lambda_k dk
//   chi = -d2F/dlambda2
//
// and for a ring of N sites through the discrete mode sum over k = 2 pi (i - 1/2)/N.
// T = 0 is its own branch built from the analytic ground-state limits.

#include <vector>

#include "xychain/model.hpp"
#include "xychain/quadrature.hpp"

namespace xychain {

/// Temperature in units of J (k_B = 1). Zero selects the ground state.
class ThermalPoint {
 public:
  /// Throws InvalidParameter for negative or non-finite T.
  explicit ThermalPoint(double temperature);

  static ThermalPoint ground_state() { return ThermalPoint(0.0); }

  double temperature() const noexcept { return temperature_; }
  bool is_ground_state() const noexcept { return temperature_ == 0.0; }
  /// 1/T. Throws InvalidParameter at T = 0.
  double beta() const;

 private:
  double temperature_;
};

struct ThermoOutput {
  double free_energy = 0.0;
  double magnetization = 0.0;
  double susceptibility = 0.0;
};

/// Quadrature settings used when the caller passes none.
QuadratureSpec default_quadrature();

/// Abscissae where the thermal integrands change scale: the gap minimum, and a
/// geometric ladder around it out to O(1) distances. Used as forced splits.
std::vector<double> feature_splits(const ModelParams& p, const ThermalPoint& t);

double free_energy(const ModelParams& p, const ThermalPoint& t, const QuadratureSpec& q = default_quadrature());
double magnetization(const ModelParams& p, const ThermalPoint& t, const QuadratureSpec& q = default_quadrature());

/// Throws CriticalDivergence at T = 0 on the critical line (gamma > 0, lambda = 1)
/// and, for gamma = 0, at lambda = 1.
double susceptibility(const ModelParams& p, const ThermalPoint& t, const QuadratureSpec& q = default_quadrature());

ThermoOutput thermodynamics(const ModelParams& p, const ThermalPoint& t,
                            const QuadratureSpec& q = default_quadrature());

/// Discrete-mode analogs for an N-site ring (N even, N >= 4, T > 0).
double free_energy_finite_n(const ModelParams& p, const ThermalPoint& t, int n_sites);
double magnetization_finite_n(const ModelParams& p, const ThermalPoint& t, int n_sites);
double susceptibility_finite_n(const ModelParams& p, const ThermalPoint& t, int n_sites);
ThermoOutput thermodynamics_finite_n(const ModelParams& p, const ThermalPoint& t, int n_sites);

/// Quadrature used by the finite-difference oracles.
QuadratureSpec reference_quadrature();

/// chi = -[F(l+h) - 2F(l) + F(l-h)] / h^2, independent of the susceptibility integrand and
/// of the density kernels. The stencil is taken under the integral in long double, so the
/// result is not limited by eps |F| / h^2.
double susceptibility_fd(const ModelParams& p, const ThermalPoint& t, double h = 1e-4,
                         const QuadratureSpec& q = reference_quadrature());

/// M = -[F(l+h) - F(l-h)] / 2h.
double magnetization_fd(const ModelParams& p, const ThermalPoint& t, double h = 1e-4,
                        const QuadratureSpec& q = reference_quadrature());

}  // namespace xychain
