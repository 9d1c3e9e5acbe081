// Scalar reference densities. The AVX2 variant is tested against these.

#include <cmath>
#include <limits>
#include <numbers>

#include "xychain/kernels.hpp"

namespace xychain::kernels::scalar {
namespace {

constexpr double kPi = std::numbers::pi;

double free_energy(double lam, double temperature) {
  if (temperature == 0.0) return lam;
  // T ln(2 cosh x) = Lambda + T ln(1 + e^{-2x}), x = Lambda / T; no overflow for any x.
  return lam + temperature * std::log1p(std::exp(-2.0 * lam / temperature));
}

double magnetization(double d, double lam, double temperature) {
  if (lam == 0.0) return 0.0;  // d = 0 whenever Lambda = 0
  const double p = d / lam;
  if (temperature == 0.0) return p;
  return std::tanh(lam / temperature) * p;
}

double susceptibility(double d, double q, double lam, double gamma, double temperature) {
  if (temperature == 0.0) {
    // gamma = 0: the ground-state response is a delta at the Fermi point, added by the caller.
    if (lam == 0.0) return gamma == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
    const double r = q / lam;
    return r * r / lam;
  }
  const double beta = 1.0 / temperature;
  // Both terms tend to beta * (share of Lambda^2) as Lambda -> 0; they sum to beta.
  if (lam == 0.0) return beta;
  const double x = beta * lam;
  const double p = d / lam;
  const double r = q / lam;
  const double ch = std::cosh(x);
  return beta * p * p / (ch * ch) + std::tanh(x) / lam * r * r;
}

double gp_phase(double d, double lam, double temperature) {
  if (lam == 0.0) return 0.0;
  const double polarization = d / lam;  // cos(theta_k)
  if (temperature == 0.0) return kPi * polarization;
  // Mode-pair energies -2L, +2L, 0, 0 for |00>, |11>, |01>, |10>; weights divided by e^{2x}.
  const double t = std::exp(-2.0 * lam / temperature);
  const double z = (1.0 + t) * (1.0 + t);
  const double w00 = 1.0 / z;
  const double w11 = t * t / z;
  const double w_mixed = t / z;
  // Berry phase of each eigenstate under the z rotation is pi <sz_k + sz_-k> / 2.
  const double phase00 = kPi * polarization;
  const double phase11 = -kPi * polarization;
  constexpr double phase_mixed = 0.0;  // |01>, |10>
  return w00 * phase00 + w11 * phase11 + 2.0 * w_mixed * phase_mixed;
}

}  // namespace

void evaluate(Density density, const Coupling& c, const double* offset, const double* sine,
              double* out, std::size_t n) {
  const double g = c.gamma;
  const double temp = c.temperature;
  for (std::size_t i = 0; i < n; ++i) {
    const double d = offset[i];
    const double q = g * sine[i];
    const double lam = std::sqrt(d * d + q * q);
    switch (density) {
      case Density::dispersion:
        out[i] = lam;
        break;
      case Density::free_energy:
        out[i] = free_energy(lam, temp);
        break;
      case Density::magnetization:
        out[i] = magnetization(d, lam, temp);
        break;
      case Density::susceptibility:
        out[i] = susceptibility(d, q, lam, g, temp);
        break;
      case Density::gp_phase:
        out[i] = gp_phase(d, lam, temp);
        break;
    }
  }
}

}  // namespace xychain::kernels::scalar
