#include "xychain/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <queue>
#include <string>

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace xychain {
namespace {

constexpr int kKronrodHalf = 10;  // positive Kronrod abscissae
constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kTiny = std::numeric_limits<double>::min();
constexpr double kRoundoff = 50.0 * kEps;

// Node layout on [-1, 1]: index 0 is the centre, 2j-1 / 2j are -x_j / +x_j.
struct Rule {
  std::array<double, kKronrodHalf + 1> abscissa{};
  std::array<double, kKronrodHalf + 1> kronrod{};
  std::array<double, kKronrodHalf + 1> gauss{};  // zero where the node is Kronrod-only
};

Rule make_rule() {
  using kronrod = boost::math::quadrature::gauss_kronrod<double, kPanelNodes>;
  using gauss = boost::math::quadrature::gauss<double, kKronrodHalf>;
  Rule r;
  const auto& kx = kronrod::abscissa();
  const auto& kw = kronrod::weights();
  const auto& gx = gauss::abscissa();
  const auto& gw = gauss::weights();
  for (int i = 0; i <= kKronrodHalf; ++i) {
    r.abscissa[i] = kx[i];
    r.kronrod[i] = kw[i];
    for (std::size_t j = 0; j < gx.size(); ++j) {
      if (std::abs(gx[j] - kx[i]) < 1e-14) r.gauss[i] = gw[j];
    }
  }
  return r;
}

const Rule& rule() {
  static const Rule r = make_rule();
  return r;
}

struct Panel {
  double a;
  double b;
  double value;
  double error;
  double absolute;  // integral of |f|, sets the rounding floor
};

struct WorseFirst {
  bool operator()(const Panel& x, const Panel& y) const {
    if (x.error != y.error) return x.error < y.error;
    return x.a > y.a;
  }
};

Panel evaluate_panel(const BatchIntegrand& f, double a, double b) {
  const Rule& r = rule();
  const double centre = 0.5 * (a + b);
  const double half = 0.5 * (b - a);

  std::array<double, kPanelNodes> x{};
  std::array<double, kPanelNodes> fx{};
  x[0] = centre;
  for (int j = 1; j <= kKronrodHalf; ++j) {
    const double dx = half * r.abscissa[j];
    x[2 * j - 1] = centre - dx;
    x[2 * j] = centre + dx;
  }
  f(x, fx);
  for (int i = 0; i < kPanelNodes; ++i) {
    if (!std::isfinite(fx[i])) {
      throw NonFiniteIntegrand("integrand is not finite at x = " + std::to_string(x[i]), x[i]);
    }
  }

  double kronrod = r.kronrod[0] * fx[0];
  double gauss = r.gauss[0] * fx[0];
  double absolute = std::abs(kronrod);
  for (int j = 1; j <= kKronrodHalf; ++j) {
    const double pair = fx[2 * j - 1] + fx[2 * j];
    kronrod += r.kronrod[j] * pair;
    gauss += r.gauss[j] * pair;
    absolute += r.kronrod[j] * (std::abs(fx[2 * j - 1]) + std::abs(fx[2 * j]));
  }
  const double mean = 0.5 * kronrod;
  double deviation = r.kronrod[0] * std::abs(fx[0] - mean);
  for (int j = 1; j <= kKronrodHalf; ++j) {
    deviation += r.kronrod[j] * (std::abs(fx[2 * j - 1] - mean) + std::abs(fx[2 * j] - mean));
  }

  // QUADPACK qk21 error heuristic.
  const double value = kronrod * half;
  absolute *= std::abs(half);
  deviation *= std::abs(half);
  double error = std::abs((kronrod - gauss) * half);
  if (deviation != 0.0 && error != 0.0) {
    error = deviation * std::min(1.0, std::pow(200.0 * error / deviation, 1.5));
  }
  if (absolute > kTiny / kRoundoff) error = std::max(kRoundoff * absolute, error);
  return {a, b, value, error, absolute};
}

void check_spec(double a, double b, const QuadratureSpec& spec) {
  if (!(a < b) || !std::isfinite(a) || !std::isfinite(b)) {
    throw InvalidParameter("integration bounds must be finite with a < b");
  }
  if (!(spec.rel_tol > 0.0) || !(spec.abs_tol >= 0.0) || spec.max_subdivisions < 1) {
    throw InvalidParameter("quadrature needs rel_tol > 0, abs_tol >= 0, max_subdivisions >= 1");
  }
  double previous = a;
  for (double s : spec.forced_splits) {
    if (!(s > previous) || !(s < b)) {
      throw InvalidParameter("forced splits must be sorted, unique and strictly inside (a, b)");
    }
    previous = s;
  }
}

// Below twice the summed rounding floor no bisection can lower the estimate, which
// matters when the integral cancels to (near) zero.
double tolerance(const QuadratureSpec& spec, double value, double absolute) {
  return std::max({spec.abs_tol, spec.rel_tol * std::abs(value), 2.0 * kRoundoff * absolute});
}

QuadratureResult summarize(std::vector<Panel> panels) {
  std::sort(panels.begin(), panels.end(), [](const Panel& x, const Panel& y) { return x.a < y.a; });
  // Neumaier summation in fixed order.
  double sum = 0.0;
  double carry = 0.0;
  double error = 0.0;
  for (const Panel& p : panels) {
    const double t = sum + p.value;
    carry += std::abs(sum) >= std::abs(p.value) ? (sum - t) + p.value : (p.value - t) + sum;
    sum = t;
    error += p.error;
  }
  return {sum + carry, error, static_cast<int>(panels.size())};
}

}  // namespace

QuadratureResult integrate(const BatchIntegrand& f, double a, double b, const QuadratureSpec& spec) {
  check_spec(a, b, spec);

  std::priority_queue<Panel, std::vector<Panel>, WorseFirst> queue;
  double value = 0.0;
  double error = 0.0;
  double absolute = 0.0;
  double left = a;
  auto add = [&](double lo, double hi) {
    const Panel p = evaluate_panel(f, lo, hi);
    value += p.value;
    error += p.error;
    absolute += p.absolute;
    queue.push(p);
  };
  for (double s : spec.forced_splits) {
    add(left, s);
    left = s;
  }
  add(left, b);

  while (error > tolerance(spec, value, absolute)) {
    const Panel worst = queue.top();
    const double mid = 0.5 * (worst.a + worst.b);
    const bool splittable = mid > worst.a && mid < worst.b;
    if (static_cast<int>(queue.size()) >= spec.max_subdivisions || !splittable) {
      std::vector<Panel> all;
      all.reserve(queue.size());
      while (!queue.empty()) {
        all.push_back(queue.top());
        queue.pop();
      }
      const QuadratureResult partial = summarize(std::move(all));
      throw NonConvergence("quadrature did not converge: error estimate " +
                               std::to_string(partial.error_estimate) + " after " +
                               std::to_string(partial.subdivisions_used) + " panels",
                           partial);
    }
    queue.pop();
    value -= worst.value;
    error -= worst.error;
    absolute -= worst.absolute;
    add(worst.a, mid);
    add(mid, worst.b);
  }

  std::vector<Panel> all;
  all.reserve(queue.size());
  while (!queue.empty()) {
    all.push_back(queue.top());
    queue.pop();
  }
  return summarize(std::move(all));
}

QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           const QuadratureSpec& spec) {
  const BatchIntegrand batch = [&f](std::span<const double> x, std::span<double> fx) {
    for (std::size_t i = 0; i < x.size(); ++i) fx[i] = f(x[i]);
  };
  return integrate(batch, a, b, spec);
}

}  // namespace xychain
