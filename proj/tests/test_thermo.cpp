#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "xychain/errors.hpp"
#include "xychain/thermo.hpp"

using namespace xychain;
using std::numbers::pi;

namespace {

double simpson(const std::function<double(double)>& f, double a, double b, long n) {
  const long double h = (static_cast<long double>(b) - a) / n;
  long double sum = f(a) + f(b);
  for (long i = 1; i < n; ++i) sum += (i % 2 ? 4.0L : 2.0L) * f(static_cast<double>(a + i * h));
  return static_cast<double>(sum * h / 3.0L);
}

double lam_k(double k, double g, double l) { return std::hypot(l - std::cos(k), g * std::sin(k)); }

// Textbook forms with std::cosh / std::tanh, for gapped points at moderate T only.
double F_textbook(double g, double l, double T) {
  const double I = simpson([&](double k) { return std::log(std::cosh(lam_k(k, g, l) / T)); }, 0.0, pi, 200'000);
  return -T * std::log(2.0) - T / pi * I;
}

double chi_textbook(double g, double l, double T) {
  const double b = 1.0 / T;
  return simpson(
             [&](double k) {
               const double L = lam_k(k, g, l), d = l - std::cos(k), c = std::cosh(b * L);
               return b * d * d / (L * L * c * c) + std::tanh(b * L) * g * g * std::sin(k) * std::sin(k) / (L * L * L);
             },
             0.0, pi, 200'000) /
         pi;
}

}  // namespace

TEST_CASE("ThermalPoint") {
  CHECK(ThermalPoint::ground_state().is_ground_state());
  CHECK(ThermalPoint(0.5).beta() == 2.0);
  CHECK_THROWS_AS(ThermalPoint(-1.0), InvalidParameter);
  CHECK_THROWS_AS(ThermalPoint(NAN), InvalidParameter);
  CHECK_THROWS_AS(ThermalPoint(0.0).beta(), InvalidParameter);
}

TEST_CASE("free energy closed values") {
  CHECK(free_energy({1.0, 0.0}, ThermalPoint(0.0)) == doctest::Approx(-1.0).epsilon(1e-13));
  CHECK(free_energy({1.0, 0.0}, ThermalPoint(1.0)) == doctest::Approx(-std::log(2.0 * std::cosh(1.0))).epsilon(1e-13));
  for (double g : {0.0, 0.5, 1.0}) {
    const double l = 1e6;
    CHECK(free_energy({g, l}, ThermalPoint(0.3)) / l == doctest::Approx(-1.0).epsilon(1e-9));
  }
  // Ising critical point: -(1/pi) int 2 sin(k/2) = -4/pi
  CHECK(free_energy({1.0, 1.0}, ThermalPoint(0.0)) == doctest::Approx(-4.0 / pi).epsilon(1e-12));
}

TEST_CASE("magnetization closed values") {
  for (double T : {0.0, 0.1, 1.0, 10.0}) CHECK(std::abs(magnetization({1.0, 0.0}, ThermalPoint(T))) < 1e-14);
  CHECK(magnetization({0.0, 0.5}, ThermalPoint(0.0)) == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
  CHECK(magnetization({0.0, 1.5}, ThermalPoint(0.0)) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(magnetization({1.0, 1.0}, ThermalPoint(0.0)) == doctest::Approx(2.0 / pi).epsilon(1e-12));
}

TEST_CASE("susceptibility closed values and divergence") {
  CHECK(susceptibility({1.0, 0.0}, ThermalPoint(0.0)) == doctest::Approx(0.5).epsilon(1e-12));
  const double step = susceptibility({1.0, 0.9999}, ThermalPoint(0.0)) - susceptibility({1.0, 0.999}, ThermalPoint(0.0));
  CHECK(step == doctest::Approx(std::log(10.0) / pi).epsilon(5e-3));
  CHECK_THROWS_AS(susceptibility({1.0, 1.0}, ThermalPoint(0.0)), CriticalDivergence);
  CHECK_THROWS_AS(susceptibility({0.4, 1.0}, ThermalPoint(0.0)), CriticalDivergence);
  CHECK_THROWS_AS(susceptibility({0.0, 1.0}, ThermalPoint(0.0)), CriticalDivergence);
  CHECK_NOTHROW(susceptibility({1.0, 1.0}, ThermalPoint(1e-3)));
  // XX ground state: delta at the Fermi point
  CHECK(susceptibility({0.0, 0.5}, ThermalPoint(0.0)) == doctest::Approx(2.0 / (pi * std::sqrt(0.75))).epsilon(1e-14));
  CHECK(susceptibility({0.0, 1.5}, ThermalPoint(0.0)) == 0.0);
}

TEST_CASE("textbook integrals at gapped points") {
  const struct {
    double g, l, T;
  } points[] = {{1.0, 0.5, 0.3}, {0.8, 1.4, 0.1}, {0.5, 0.2, 1.0}, {0.0, 0.7, 0.5}};
  for (const auto& p : points) {
    const ThermalPoint t(p.T);
    CHECK(free_energy({p.g, p.l}, t) == doctest::Approx(F_textbook(p.g, p.l, p.T)).epsilon(1e-11));
    CHECK(susceptibility({p.g, p.l}, t) == doctest::Approx(chi_textbook(p.g, p.l, p.T)).epsilon(1e-9));
  }
}

TEST_CASE("finite-N mode sums") {
  const ThermalPoint one(1.0);
  CHECK(free_energy_finite_n({1.0, 0.0}, one, 4) == doctest::Approx(-std::log(2.0 * std::cosh(1.0))).epsilon(1e-14));
  CHECK(std::abs(magnetization_finite_n({1.0, 0.0}, one, 64)) < 1e-15);
  CHECK(std::abs(free_energy_finite_n({1.0, 0.5}, ThermalPoint(0.5), 4096) - free_energy({1.0, 0.5}, ThermalPoint(0.5))) < 1e-6);
  CHECK(std::abs(free_energy_finite_n({0.8, 1.2}, ThermalPoint(0.1), 8192) - free_energy({0.8, 1.2}, ThermalPoint(0.1))) < 1e-6);

  const ModelParams p{1.0, 0.5};
  const ThermalPoint t(0.2);
  const double chi_n = susceptibility_finite_n(p, t, 4096);
  CHECK(std::abs(chi_n - susceptibility(p, t)) < 1e-5);
  const double h = 1e-4;
  const double fd = -(free_energy_finite_n({1.0, 0.5 + h}, t, 4096) - 2.0 * free_energy_finite_n(p, t, 4096) +
                      free_energy_finite_n({1.0, 0.5 - h}, t, 4096)) / (h * h);
  CHECK(std::abs(chi_n - fd) < 1e-5);

  CHECK_THROWS_AS(free_energy_finite_n(p, ThermalPoint(0.0), 64), InvalidParameter);
  CHECK_THROWS_AS(free_energy_finite_n(p, t, 63), InvalidParameter);
}

TEST_CASE("finite-N converges to the integral") {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> ug(0.1, 1.0), ul(0.0, 2.0), uT(0.05, 1.0);
  for (int i = 0; i < 10; ++i) {
    const double l = ul(rng);
    if (std::abs(l - 1.0) < 0.05) continue;
    const ModelParams p{ug(rng), l};
    const ThermalPoint t(uT(rng));
    const double m = magnetization(p, t);
    double prev = INFINITY;
    for (int n : {64, 256, 1024, 8192}) {
      const double err = std::abs(magnetization_finite_n(p, t, n) - m);
      CHECK(err <= prev + 1e-15);
      prev = err;
    }
    CHECK(prev < 1e-6);
  }
}

TEST_CASE("finite-difference oracles") {
  CHECK(susceptibility_fd({1.0, 0.5}, ThermalPoint(0.3)) ==
        doctest::Approx(susceptibility({1.0, 0.5}, ThermalPoint(0.3))).epsilon(1e-6));
  CHECK(susceptibility_fd({0.8, 1.4}, ThermalPoint(0.1)) ==
        doctest::Approx(susceptibility({0.8, 1.4}, ThermalPoint(0.1))).epsilon(1e-6));
  CHECK(susceptibility_fd({1.0, 0.0}, ThermalPoint(0.0)) == doctest::Approx(0.5).epsilon(1e-6));
  CHECK_THROWS_AS(susceptibility_fd({1.0, 1.0}, ThermalPoint(0.0)), InvalidParameter);
  // nearly XX, far above saturation: chi ~ 5e-4 against |F| ~ 1.5
  CHECK(susceptibility_fd({0.0069, 1.456}, ThermalPoint(0.101)) ==
        doctest::Approx(susceptibility({0.0069, 1.456}, ThermalPoint(0.101))).epsilon(1e-6));

  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> ug(0.0, 1.0), ul(0.0, 2.0), uT(0.05, 2.0);
  for (int i = 0; i < 15; ++i) {
    const ModelParams p{ug(rng), ul(rng)};
    const ThermalPoint t(uT(rng));
    CHECK(magnetization_fd(p, t) == doctest::Approx(magnetization(p, t)).epsilon(1e-7).scale(1e-3));
    // chi = dM/dlambda
    const double h = 1e-4;
    const double dm = (magnetization({p.gamma, p.lambda + h}, t) -
                       magnetization({p.gamma, std::abs(p.lambda - h)}, t) * (p.lambda >= h ? 1.0 : -1.0)) /
                      (2.0 * h);
    CHECK(dm == doctest::Approx(susceptibility(p, t)).epsilon(1e-6));
  }
}

TEST_CASE("magnetization is nondecreasing in the field") {
  for (double g : {0.0, 0.5, 1.0}) {
    for (double T : {0.0, 0.05, 0.5}) {
      double prev = -INFINITY;
      for (int i = 0; i <= 60; ++i) {
        const double m = magnetization({g, 0.05 * i}, ThermalPoint(T));
        CHECK(m >= prev - 1e-13);
        CHECK(std::abs(m) <= 1.0 + 1e-14);
        prev = m;
      }
    }
  }
}

TEST_CASE("low temperature approaches the ground state") {
  for (const ModelParams& p : {ModelParams{1.0, 0.5}, ModelParams{0.6, 1.5}, ModelParams{0.3, 0.2}}) {
    REQUIRE(min_gap(p) >= 0.1);
    const ThermoOutput a = thermodynamics(p, ThermalPoint(1e-4));
    const ThermoOutput b = thermodynamics(p, ThermalPoint(0.0));
    CHECK(std::abs(a.free_energy - b.free_energy) < 1e-6);
    CHECK(std::abs(a.magnetization - b.magnetization) < 1e-6);
    CHECK(std::abs(a.susceptibility - b.susceptibility) < 1e-6);
  }
}

TEST_CASE("feature splits are sorted and interior") {
  const auto s = feature_splits({1.0, 0.999}, ThermalPoint(0.01));
  REQUIRE(!s.empty());
  for (std::size_t i = 0; i < s.size(); ++i) {
    CHECK(s[i] > 0.0);
    CHECK(s[i] < pi);
    if (i) CHECK(s[i] > s[i - 1]);
  }
}
