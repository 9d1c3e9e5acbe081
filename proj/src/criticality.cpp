#include "xychain/criticality.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "xychain/errors.hpp"
#include "xychain/parallel.hpp"

namespace xychain {

Extremum golden_section_maximize(const std::function<double(double)>& f, double a, double b, double tol) {
  if (!(a < b)) throw InvalidParameter("golden-section bracket must satisfy a < b");
  if (!(tol > 0.0)) throw InvalidParameter("golden-section tolerance must be > 0");
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c);
  double fd = f(d);
  while (b - a > tol) {
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
  }
  return fc >= fd ? Extremum{c, fc} : Extremum{d, fd};
}

std::vector<double> log_spaced(double lo, double hi, std::size_t count) {
  if (!(lo > 0.0) || !(hi > 0.0) || count < 2) {
    throw InvalidParameter("log_spaced needs positive bounds and at least two points");
  }
  std::vector<double> out(count);
  const double a = std::log(lo);
  const double b = std::log(hi);
  for (std::size_t i = 0; i < count; ++i) {
    out[i] = std::exp(a + (b - a) * static_cast<double>(i) / static_cast<double>(count - 1));
  }
  out.front() = lo;
  out.back() = hi;
  return out;
}

LinearFit least_squares(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) throw InvalidParameter("fit abscissae and ordinates differ in length");
  const std::size_t n = x.size();
  if (n < 2) throw DegenerateFit("a linear fit needs at least two points");
  double mx = 0.0;
  double my = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    if (!std::isfinite(x[i]) || !std::isfinite(y[i])) throw DegenerateFit("non-finite fit data");
    mx += x[i];
    my += y[i];
  }
  mx /= static_cast<double>(n);
  my /= static_cast<double>(n);
  double sxx = 0.0;
  double sxy = 0.0;
  double syy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
    syy += (y[i] - my) * (y[i] - my);
  }
  if (sxx == 0.0) throw DegenerateFit("fit abscissae have zero spread");

  LinearFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  double ss_res = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double r = y[i] - (fit.slope * x[i] + fit.intercept);
    ss_res += r * r;
  }
  fit.r_squared = syy == 0.0 ? 1.0 : std::clamp(1.0 - ss_res / syy, 0.0, 1.0);
  fit.n_points = n;
  const auto [lo, hi] = std::minmax_element(x.begin(), x.end());
  fit.x_min = *lo;
  fit.x_max = *hi;
  return fit;
}

PseudocriticalResult find_pseudocritical(double gamma, double temperature, const PseudocriticalOptions& opt) {
  const ThermalPoint t(temperature);
  if (t.is_ground_state()) throw InvalidParameter("pseudocritical search requires T > 0");
  const FieldBracket br = opt.bracket;
  if (!(br.lo >= 0.0) || !(br.lo < br.hi)) throw InvalidParameter("field bracket must satisfy 0 <= lo < hi");
  if (opt.grid_points < 3) throw InvalidParameter("coarse scan needs at least three points");
  validate(ModelParams{gamma, br.lo});

  auto chi = [&](double lambda) { return susceptibility({gamma, lambda}, t, opt.quadrature); };

  const int n = opt.grid_points;
  const double step = (br.hi - br.lo) / (n - 1);
  int best = 0;
  double best_chi = -1.0;
  for (int i = 0; i < n; ++i) {
    const double lambda = i == n - 1 ? br.hi : br.lo + step * i;
    const double v = chi(lambda);
    if (v > best_chi) {
      best_chi = v;
      best = i;
    }
  }
  if (best == 0 || best == n - 1) {
    throw NoInteriorMaximum("susceptibility peaks at the bracket edge for T = " + std::to_string(temperature));
  }

  const double centre = br.lo + step * best;
  const Extremum peak = golden_section_maximize(chi, centre - step, centre + step, opt.tol);
  if (peak.value >= best_chi) return {temperature, peak.x, peak.value};
  return {temperature, centre, best_chi};
}

std::vector<PseudocriticalResult> find_pseudocritical(double gamma, std::span<const double> temperatures,
                                                      const PseudocriticalOptions& opt) {
  std::vector<PseudocriticalResult> out(temperatures.size());
  parallel_for(temperatures.size(), [&](std::size_t i) { out[i] = find_pseudocritical(gamma, temperatures[i], opt); });
  return out;
}

LinearFit drift_fit(std::span<const PseudocriticalResult> points) {
  std::vector<double> x;
  std::vector<double> y;
  for (const auto& r : points) {
    const double distance = std::abs(kCriticalField - r.lambda_m);
    if (!(distance > 0.0)) throw DegenerateFit("pseudocritical point coincides with lambda_c");
    x.push_back(std::log(r.temperature));
    y.push_back(std::log(distance));
  }
  return least_squares(x, y);
}

LinearFit kappa1_fit(std::span<const PseudocriticalResult> points) {
  std::vector<double> x;
  std::vector<double> y;
  for (const auto& r : points) {
    x.push_back(std::log(r.temperature));
    y.push_back(r.chi_max);
  }
  return least_squares(x, y);
}

LinearFit pseudocritical_exponent(double gamma, std::span<const double> temperatures,
                                  const PseudocriticalOptions& opt) {
  if (temperatures.size() < 4) throw InvalidParameter("drift exponent needs at least four temperatures");
  const auto peaks = find_pseudocritical(gamma, temperatures, opt);
  return drift_fit(peaks);
}

LinearFit fit_kappa1(double gamma, std::span<const double> temperatures, const PseudocriticalOptions& opt) {
  if (temperatures.size() < 4) throw InvalidParameter("kappa1 fit needs at least four temperatures");
  const auto [lo, hi] = std::minmax_element(temperatures.begin(), temperatures.end());
  if (!(*lo > 0.0) || std::log(*hi / *lo) < 2.0) {
    throw InvalidParameter("kappa1 fit temperatures must span at least two e-foldings");
  }
  const auto peaks = find_pseudocritical(gamma, temperatures, opt);
  return kappa1_fit(peaks);
}

LinearFit fit_kappa2(double gamma, std::span<const double> deltas, ApproachSide side, const QuadratureSpec& q) {
  std::vector<double> x(deltas.size());
  std::vector<double> y(deltas.size());
  const ThermalPoint ground = ThermalPoint::ground_state();
  parallel_for(deltas.size(), [&](std::size_t i) {
    const double delta = deltas[i];
    if (!(delta >= 0.0)) throw InvalidParameter("field offsets must be >= 0");
    const double lambda = side == ApproachSide::below ? kCriticalField - delta : kCriticalField + delta;
    y[i] = susceptibility({gamma, lambda}, ground, q);
    x[i] = std::log(delta);
  });
  return least_squares(x, y);
}

double critical_exponent_nu(const LinearFit& kappa1, const LinearFit& kappa2) {
  if (kappa1.slope == 0.0) throw DegenerateFit("kappa1 slope is zero");
  return std::abs(kappa2.slope / kappa1.slope);
}

std::vector<LinearFit> kappa1_ceiling_scan(double gamma, double t_floor, std::span<const double> ceilings,
                                           std::size_t points, const PseudocriticalOptions& opt) {
  std::vector<LinearFit> fits;
  for (double ceiling : ceilings) {
    const auto temps = log_spaced(t_floor, ceiling, points);
    fits.push_back(fit_kappa1(gamma, temps, opt));
  }
  return fits;
}

CollapseData collapse_curves(double gamma, std::span<const PseudocriticalResult> peaks,
                             std::span<const double> x_grid, const QuadratureSpec& q) {
  if (!std::is_sorted(x_grid.begin(), x_grid.end())) throw InvalidParameter("collapse grid must be ascending");
  CollapseData data;
  data.gamma = gamma;
  data.curves.resize(peaks.size());
  std::vector<double> flat(peaks.size() * x_grid.size());
  parallel_for(flat.size(), [&](std::size_t idx) {
    const auto& peak = peaks[idx / x_grid.size()];
    const double x = x_grid[idx % x_grid.size()];
    if (x == 0.0) {
      flat[idx] = 0.0;
      return;
    }
    const double lambda = peak.lambda_m + x * peak.temperature;
    const double chi = susceptibility({gamma, lambda}, ThermalPoint(peak.temperature), q);
    flat[idx] = -std::expm1(chi - peak.chi_max);
  });
  for (std::size_t c = 0; c < peaks.size(); ++c) {
    CollapseCurve& curve = data.curves[c];
    curve.temperature = peaks[c].temperature;
    curve.lambda_m = peaks[c].lambda_m;
    curve.chi_max = peaks[c].chi_max;
    curve.x.assign(x_grid.begin(), x_grid.end());
    curve.f.assign(flat.begin() + c * x_grid.size(), flat.begin() + (c + 1) * x_grid.size());
  }
  return data;
}

CollapseData collapse_curves(double gamma, std::span<const double> temperatures, std::span<const double> x_grid,
                             const PseudocriticalOptions& opt) {
  const auto peaks = find_pseudocritical(gamma, temperatures, opt);
  return collapse_curves(gamma, peaks, x_grid, opt.quadrature);
}

namespace {

double interpolate(const CollapseCurve& c, double x) {
  const auto it = std::lower_bound(c.x.begin(), c.x.end(), x);
  const std::size_t hi = static_cast<std::size_t>(it - c.x.begin());
  if (hi < c.x.size() && c.x[hi] == x) return c.f[hi];
  const std::size_t lo = hi - 1;
  const double w = (x - c.x[lo]) / (c.x[hi] - c.x[lo]);
  return c.f[lo] + w * (c.f[hi] - c.f[lo]);
}

}  // namespace

double collapse_quality(const CollapseData& data) {
  const auto& curves = data.curves;
  if (curves.size() < 2) throw InsufficientOverlap("collapse quality needs at least two curves");
  double lo = -std::numeric_limits<double>::infinity();
  double hi = std::numeric_limits<double>::infinity();
  for (const auto& c : curves) {
    if (c.x.size() < 2 || c.x.size() != c.f.size()) throw InsufficientOverlap("collapse curve has too few points");
    lo = std::max(lo, c.x.front());
    hi = std::min(hi, c.x.back());
  }
  std::vector<double> grid;
  for (double x : curves.front().x) {
    if (x >= lo && x <= hi) grid.push_back(x);
  }
  if (grid.size() < 2) throw InsufficientOverlap("collapse curves share fewer than two abscissae");

  const double n = static_cast<double>(curves.size());
  double sum_var = 0.0;
  for (double x : grid) {
    double mean = 0.0;
    for (const auto& c : curves) mean += interpolate(c, x);
    mean /= n;
    double var = 0.0;
    for (const auto& c : curves) {
      const double r = interpolate(c, x) - mean;
      var += r * r;
    }
    sum_var += var / (n - 1.0);
  }
  return std::sqrt(sum_var / static_cast<double>(grid.size()));
}

double xx_ground_magnetization(double lambda) {
  if (!(lambda >= 0.0) || !std::isfinite(lambda)) throw InvalidParameter("lambda must be finite and >= 0");
  if (lambda > kCriticalField) return 1.0;
  return 1.0 - 2.0 / std::numbers::pi * std::acos(lambda);
}

double xx_asymptotic_susceptibility(double lambda) {
  if (!(lambda > 0.0 && lambda < kCriticalField)) throw InvalidParameter("XX asymptote needs 0 < lambda < 1");
  return std::numbers::sqrt2 / std::sqrt(1.0 - lambda);
}

double crossover_temperature(double lambda, double nu, double z, double amplitude) {
  return amplitude * std::pow(std::abs(lambda - kCriticalField), nu * z);
}

}  // namespace xychain
