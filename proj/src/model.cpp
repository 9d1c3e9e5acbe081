#include "xychain/model.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "xychain/errors.hpp"

namespace xychain {

void validate(const ModelParams& p) {
  if (!std::isfinite(p.gamma) || p.gamma < 0.0 || p.gamma > 1.0) {
    throw InvalidParameter("gamma must lie in [0, 1], got " + std::to_string(p.gamma));
  }
  if (!std::isfinite(p.lambda) || p.lambda < 0.0) {
    throw InvalidParameter("lambda must be finite and >= 0, got " + std::to_string(p.lambda));
  }
}

double field_offset(double k, double lambda) {
  if (std::abs(k) < 0.5 * std::numbers::pi) {
    // 1 - cos k = 2 sin^2(k/2); lambda - 1 is exact for lambda in [0.5, 2].
    const double h = std::sin(0.5 * k);
    return (lambda - 1.0) + 2.0 * h * h;
  }
  return lambda - std::cos(k);
}

double dispersion(double k, const ModelParams& p) {
  const double d = field_offset(k, p.lambda);
  const double q = p.gamma * std::sin(k);
  return std::sqrt(d * d + q * q);
}

double bogoliubov_angle(double k, const ModelParams& p) {
  return std::atan2(p.gamma * std::sin(k), field_offset(k, p.lambda));
}

namespace {

// Lambda^2 as a quadratic in c = cos k: (1 - g^2) c^2 - 2 l c + l^2 + g^2.
struct GapCandidate {
  double cosine;
  double squared;
};

GapCandidate gap_minimum(const ModelParams& p) {
  const double g2 = p.gamma * p.gamma;
  const double l = p.lambda;
  GapCandidate best{1.0, (l - 1.0) * (l - 1.0)};
  const GapCandidate back{-1.0, (l + 1.0) * (l + 1.0)};
  if (back.squared < best.squared) best = back;
  if (g2 < 1.0) {
    const double c = l / (1.0 - g2);
    if (std::abs(c) <= 1.0) {
      // Closed form of the stationary value; non-negative whenever |c| <= 1.
      const double v = std::max(0.0, g2 * (1.0 - g2 - l * l) / (1.0 - g2));
      if (v < best.squared) best = {c, v};
    }
  }
  return best;
}

}  // namespace

double min_gap(const ModelParams& p) { return std::sqrt(gap_minimum(p).squared); }

double gap_minimum_momentum(const ModelParams& p) {
  const double c = gap_minimum(p).cosine;
  if (c >= 1.0) return 0.0;
  if (c <= -1.0) return std::numbers::pi;
  return std::acos(c);
}

ModeGrid finite_modes(int n_sites) {
  if (n_sites < 4 || n_sites % 2 != 0) {
    throw InvalidParameter("number of sites must be even and >= 4, got " +
                           std::to_string(n_sites));
  }
  ModeGrid grid;
  grid.n_sites = n_sites;
  const int modes = n_sites / 2;
  grid.momentum.resize(modes);
  grid.sine.resize(modes);
  for (int i = 0; i < modes; ++i) {
    const double k = 2.0 * std::numbers::pi * (i + 0.5) / n_sites;
    grid.momentum[i] = k;
    grid.sine[i] = std::sin(k);
  }
  return grid;
}

}  // namespace xychain
