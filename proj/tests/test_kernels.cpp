#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "xychain/errors.hpp"
#include "xychain/kernels.hpp"
#include "xychain/thermo.hpp"

using namespace xychain;
using kernels::Density;
using kernels::Isa;

namespace {

constexpr Density kAll[] = {Density::dispersion, Density::free_energy, Density::magnetization,
                            Density::susceptibility, Density::gp_phase};

struct Batch {
  std::vector<double> d, s;
};

Batch random_batch(std::mt19937_64& rng, std::size_t n) {
  std::uniform_real_distribution<double> ud(-2.0, 3.0), us(0.0, 1.0), pick(0.0, 1.0);
  Batch b{std::vector<double>(n), std::vector<double>(n)};
  for (std::size_t i = 0; i < n; ++i) {
    b.d[i] = ud(rng);
    b.s[i] = us(rng);
    const double r = pick(rng);
    if (r < 0.05) {
      b.d[i] = 0.0;  // gapless mode
      b.s[i] = 0.0;
    } else if (r < 0.15) {
      b.d[i] *= 1e-6;  // near-gapless
      b.s[i] *= 1e-6;
    }
  }
  return b;
}

// Relative agreement, with an absolute floor for values that are zero in exact arithmetic.
bool close(double a, double b, double rel, double floor) {
  if (std::isinf(a) || std::isinf(b)) return a == b;
  return std::abs(a - b) <= rel * std::max(std::abs(a), std::abs(b)) + floor;
}

}  // namespace

TEST_CASE("avx2 matches the scalar reference") {
  if (!kernels::supported(Isa::avx2)) {
    MESSAGE("AVX2 not available on this machine; skipping");
    return;
  }
  std::mt19937_64 rng(2024);
  const double gammas[] = {0.0, 0.3, 1.0};
  const double temps[] = {0.0, 1e-3, 0.05, 1.0, 100.0};
  double worst = 0.0;
  for (std::size_t n : {1u, 3u, 4u, 5u, 21u, 37u, 256u}) {
    const Batch b = random_batch(rng, n);
    for (double g : gammas) {
      for (double t : temps) {
        for (Density dens : kAll) {
          std::vector<double> ref(n), vec(n);
          const kernels::Coupling c{g, t};
          kernels::evaluate(Isa::scalar, dens, c, {b.d, b.s}, ref);
          kernels::evaluate(Isa::avx2, dens, c, {b.d, b.s}, vec);
          for (std::size_t i = 0; i < n; ++i) {
            INFO("density ", static_cast<int>(dens), " gamma ", g, " T ", t, " d ", b.d[i], " s ", b.s[i]);
            CHECK(close(ref[i], vec[i], 1e-13, 1e-15));
            // gp_phase is a difference of two Gibbs weights; it is only accurate in absolute terms
            if (dens != Density::gp_phase && std::abs(ref[i]) > 1e-6) {
              worst = std::max(worst, std::abs(ref[i] - vec[i]) / std::abs(ref[i]));
            }
          }
        }
      }
    }
  }
  MESSAGE("worst relative deviation for |value| > 1e-6: ", worst);
  CHECK(worst < 1e-14);
}

TEST_CASE("thermodynamics agree across instruction sets") {
  if (!kernels::supported(Isa::avx2)) return;
  const Isa saved = kernels::active_isa();
  const ModelParams points[] = {{1.0, 0.5}, {0.8, 1.2}, {0.3, 0.95}, {0.0, 0.5}};
  for (const auto& p : points) {
    for (double t : {0.0, 0.02, 0.5}) {
      if (t == 0.0 && p.gamma == 0.0) continue;
      kernels::set_isa(Isa::scalar);
      const ThermoOutput a = thermodynamics(p, ThermalPoint(t));
      kernels::set_isa(Isa::avx2);
      const ThermoOutput b = thermodynamics(p, ThermalPoint(t));
      CHECK(a.free_energy == doctest::Approx(b.free_energy).epsilon(1e-12));
      CHECK(a.magnetization == doctest::Approx(b.magnetization).epsilon(1e-12));
      CHECK(a.susceptibility == doctest::Approx(b.susceptibility).epsilon(1e-12));
    }
  }
  kernels::set_isa(saved);
}

TEST_CASE("dispatch") {
  CHECK(kernels::supported(Isa::scalar));
  CHECK(kernels::name(Isa::scalar) == "scalar");
  CHECK(kernels::name(Isa::avx2) == "avx2");
  std::vector<double> d(3, 0.5), s(2, 0.5), out(3);
  CHECK_THROWS_AS(kernels::evaluate(Density::dispersion, {1.0, 0.0}, {d, s}, out), InvalidParameter);
  if (!kernels::supported(Isa::avx2)) CHECK_THROWS_AS(kernels::set_isa(Isa::avx2), InvalidParameter);
}

TEST_CASE("scalar reference closed values") {
  const std::vector<double> d{0.0, 1.0, -0.5};
  const std::vector<double> s{1.0, 0.0, 0.0};
  std::vector<double> out(3);
  kernels::evaluate(Isa::scalar, Density::free_energy, {1.0, 1.0}, {d, s}, out);
  CHECK(out[0] == doctest::Approx(std::log(2.0 * std::cosh(1.0))));
  kernels::evaluate(Isa::scalar, Density::magnetization, {1.0, 0.0}, {d, s}, out);
  CHECK(out[1] == 1.0);
  CHECK(out[2] == -1.0);
  // Lambda -> 0 at T > 0: the thermal term tends to beta
  const std::vector<double> z{0.0}, zs{0.0};
  std::vector<double> one(1);
  kernels::evaluate(Isa::scalar, Density::susceptibility, {1.0, 0.25}, {z, zs}, one);
  CHECK(one[0] == doctest::Approx(4.0));
}
