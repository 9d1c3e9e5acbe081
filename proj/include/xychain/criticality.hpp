#pragma once

// Finite-temperature scaling analysis of the susceptibility near lambda_c = 1.
//
//   chi(lambda_m(T), T) ~ kappa1 ln T + c1          (peak height vs temperature)
//   chi(lambda, 0)      ~ kappa2 ln|lambda - 1| + c2 (ground-state log singularity)
//   nu = |kappa2 / kappa1|
//
// plus the drift of the pseudocritical point lambda_m(T) towards 1, the collapse of
// F = 1 - exp[chi(lambda) - chi(lambda_m)] against (lambda - lambda_m)/T, and the XX
// (gamma = 0) closed forms.

#include <functional>
#include <span>
#include <vector>

#include "xychain/quadrature.hpp"
#include "xychain/thermo.hpp"

namespace xychain {

struct FieldBracket {
  double lo = 0.2;
  double hi = 1.8;
};

struct PseudocriticalOptions {
  FieldBracket bracket;
  double tol = 1e-7;     ///< final width of the golden-section interval in lambda
  int grid_points = 64;  ///< coarse scan
  QuadratureSpec quadrature = default_quadrature();
};

struct PseudocriticalResult {
  double temperature = 0.0;
  double lambda_m = 0.0;
  double chi_max = 0.0;
};

/// Ordinary least squares y = slope x + intercept. x_min / x_max record the abscissa range.
struct LinearFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
  std::size_t n_points = 0;
  double x_min = 0.0;
  double x_max = 0.0;
};

enum class ApproachSide { below, above };

struct CollapseCurve {
  double temperature = 0.0;
  double lambda_m = 0.0;
  double chi_max = 0.0;
  std::vector<double> x;  ///< (lambda - lambda_m) / T, ascending
  std::vector<double> f;  ///< 1 - exp[chi(lambda) - chi_max]
};

struct CollapseData {
  double gamma = 1.0;
  std::vector<CollapseCurve> curves;
};

struct Extremum {
  double x = 0.0;
  double value = 0.0;
};

/// Golden-section search for the maximum of a unimodal f on [a, b], stopping once the
/// bracket is narrower than tol.
Extremum golden_section_maximize(const std::function<double(double)>& f, double a, double b, double tol);

/// count values from lo to hi (inclusive), uniform in ln.
std::vector<double> log_spaced(double lo, double hi, std::size_t count);

/// Throws DegenerateFit for fewer than two points or zero spread in x.
LinearFit least_squares(std::span<const double> x, std::span<const double> y);

/// Coarse scan of chi over the bracket, then golden-section refinement.
/// Throws NoInteriorMaximum when the scan peaks at a bracket endpoint.
PseudocriticalResult find_pseudocritical(double gamma, double temperature, const PseudocriticalOptions& opt = {});

/// One search per temperature, run concurrently; results in input order.
std::vector<PseudocriticalResult> find_pseudocritical(double gamma, std::span<const double> temperatures,
                                                      const PseudocriticalOptions& opt = {});

/// ln|1 - lambda_m| against ln T. Throws DegenerateFit if any lambda_m == 1.
LinearFit drift_fit(std::span<const PseudocriticalResult> points);
/// chi_max against ln T; slope is kappa1.
LinearFit kappa1_fit(std::span<const PseudocriticalResult> points);

/// Needs at least 4 temperatures.
LinearFit pseudocritical_exponent(double gamma, std::span<const double> temperatures,
                                  const PseudocriticalOptions& opt = {});
/// Needs at least 4 temperatures spanning two e-foldings.
LinearFit fit_kappa1(double gamma, std::span<const double> temperatures, const PseudocriticalOptions& opt = {});

/// chi(1 -+ delta, T = 0) against ln delta; slope is kappa2. delta = 0 raises CriticalDivergence.
LinearFit fit_kappa2(double gamma, std::span<const double> deltas, ApproachSide side = ApproachSide::below,
                     const QuadratureSpec& q = default_quadrature());

/// |kappa2 / kappa1|. Throws DegenerateFit if kappa1 has zero slope.
double critical_exponent_nu(const LinearFit& kappa1, const LinearFit& kappa2);

/// kappa1 fits over log_spaced(t_floor, ceiling, points) for each ceiling.
std::vector<LinearFit> kappa1_ceiling_scan(double gamma, double t_floor, std::span<const double> ceilings,
                                           std::size_t points, const PseudocriticalOptions& opt = {});

CollapseData collapse_curves(double gamma, std::span<const double> temperatures, std::span<const double> x_grid,
                             const PseudocriticalOptions& opt = {});
CollapseData collapse_curves(double gamma, std::span<const PseudocriticalResult> peaks,
                             std::span<const double> x_grid, const QuadratureSpec& q = default_quadrature());

/// RMS over the shared grid of the across-curve sample standard deviation of F.
/// Curves are linearly interpolated onto the first curve's abscissae inside the common
/// support. Throws InsufficientOverlap for fewer than two curves or two shared points.
double collapse_quality(const CollapseData& data);

/// Ground-state XX magnetization: 1 - (2/pi) arccos(lambda) below saturation, 1 above.
double xx_ground_magnetization(double lambda);

/// sqrt(2) (1 - lambda)^{-1/2}, 0 < lambda < 1.
double xx_asymptotic_susceptibility(double lambda);

/// amplitude |lambda - 1|^{nu z}.
double crossover_temperature(double lambda, double nu, double z, double amplitude = 1.0);

}  // namespace xychain
