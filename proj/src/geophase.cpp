#include "xychain/geophase.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include "xychain/errors.hpp"
#include "xychain/kernels.hpp"

namespace xychain {

static_assert(kGeometricPhaseOffset == std::numbers::pi);

GeometricPhase ground_state_gp(const ModelParams& p, const QuadratureSpec& q) {
  return thermal_gp(p, ThermalPoint::ground_state(), q);
}

GeometricPhase thermal_gp(const ModelParams& p, const ThermalPoint& t, const QuadratureSpec& q) {
  return {kGeometricPhaseOffset + std::numbers::pi * magnetization(p, t, q)};
}

GeometricPhase thermal_gp_mode_sum(const ModelParams& p, const ThermalPoint& t, int n_sites) {
  validate(p);
  if (t.is_ground_state()) throw InvalidParameter("thermal mode sum requires T > 0");
  const ModeGrid grid = finite_modes(n_sites);

  std::vector<double> offset(grid.momentum.size());
  for (std::size_t i = 0; i < offset.size(); ++i) offset[i] = field_offset(grid.momentum[i], p.lambda);
  std::vector<double> phase(offset.size());
  kernels::evaluate(kernels::Density::gp_phase, {p.gamma, t.temperature()}, {offset, grid.sine}, phase);

  // -2i/N sum_k sum_n w_n <n| d_phi |n> integrated over phi: (2/N) sum_k <phase>_k.
  double sum = 0.0;
  for (double x : phase) sum += x;
  return {kGeometricPhaseOffset + 2.0 * sum / n_sites};
}

double gp_lambda_derivative(const ModelParams& p, const ThermalPoint& t, const QuadratureSpec& q) {
  return std::numbers::pi * susceptibility(p, t, q);
}

}  // namespace xychain
