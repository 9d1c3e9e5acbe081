#pragma once

// Geometric phase of the XY chain under the rotation U_phi = prod_j exp(i phi sz_j / 2),
// phi: 0 -> pi. Each mode-pair eigenstate (|00>, |11>, |01>, |10> of modes k, -k)
// accumulates pi times its pair polarization <sz_k + sz_-k>/2, i.e. pi cos(theta_k),
// -pi cos(theta_k), 0 and 0. With the global offset pi the ground-state phase is
//
//   beta_g = pi + pi M_z(T = 0)
//
// and the Gibbs-weighted thermal phase is beta_T = pi [1 + M_z(T)].
// Phases are reported raw, never reduced modulo 2 pi.

#include "xychain/model.hpp"
#include "xychain/quadrature.hpp"
#include "xychain/thermo.hpp"

namespace xychain {

/// Global phase offset between the rotation-generator phase pi M_z and the reported phase.
inline constexpr double kGeometricPhaseOffset = 3.14159265358979323846;

struct GeometricPhase {
  double value = 0.0;  ///< radians
};

GeometricPhase ground_state_gp(const ModelParams& p, const QuadratureSpec& q = default_quadrature());

GeometricPhase thermal_gp(const ModelParams& p, const ThermalPoint& t,
                          const QuadratureSpec& q = default_quadrature());

/// Explicit sum over the N/2 mode pairs of Gibbs-weighted per-eigenstate Berry phases.
/// N even, N >= 4, T > 0.
GeometricPhase thermal_gp_mode_sum(const ModelParams& p, const ThermalPoint& t, int n_sites);

/// d beta / d lambda = pi chi_z. Throws CriticalDivergence at (lambda, T) = (1, 0).
double gp_lambda_derivative(const ModelParams& p, const ThermalPoint& t,
                            const QuadratureSpec& q = default_quadrature());

}  // namespace xychain
