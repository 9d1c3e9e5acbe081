#pragma once

// Parameters and single-mode spectrum of the anisotropic XY chain
//
//   H = sum_i [ (1+g)/2 sx_i sx_{i+1} + (1-g)/2 sy_i sy_{i+1} + l sz_i ]
//
// in units J = k_B = 1. After the Jordan-Wigner / Bogoliubov step the chain is a
// set of free fermion modes with half excitation energy
//
//   Lambda_k = sqrt((l - cos k)^2 + g^2 sin^2 k),   0 <= k <= pi.

#include <vector>

namespace xychain {

/// Quantum critical field for every gamma > 0.
inline constexpr double kCriticalField = 1.0;

struct ModelParams {
  double gamma = 1.0;   ///< anisotropy, 0 (XX) .. 1 (transverse Ising)
  double lambda = 0.0;  ///< transverse field
};

/// Throws InvalidParameter unless 0 <= gamma <= 1, lambda >= 0 and both are finite.
void validate(const ModelParams& p);

/// Half quasiparticle energy Lambda_k. Total on [0, pi]; defined for any real k.
double dispersion(double k, const ModelParams& p);

/// lambda - cos k, evaluated without cancellation near k = 0.
double field_offset(double k, double lambda);

/// Bogoliubov mixing angle theta_k = atan2(gamma sin k, lambda - cos k), in [0, pi] for k in [0, pi].
///
/// cos(theta_k) = (lambda - cos k) / Lambda_k, which is the per-mode longitudinal
/// polarization of the ground state. At gamma = 1 this is arctan[-sin k / (cos k - lambda)]
/// on the branch continuous in k.
double bogoliubov_angle(double k, const ModelParams& p);

/// Exact minimum of Lambda_k over k in [0, pi].
double min_gap(const ModelParams& p);

/// Momentum at which min_gap is attained (0, pi, or the interior stationary point).
double gap_minimum_momentum(const ModelParams& p);

/// Discrete momenta k_i = 2 pi (i - 1/2) / N, i = 1..N/2, of an N-site ring.
struct ModeGrid {
  int n_sites = 0;
  std::vector<double> momentum;
  std::vector<double> sine;
};

/// Throws InvalidParameter for odd N or N < 4.
ModeGrid finite_modes(int n_sites);

}  // namespace xychain
