#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "xychain/quadrature.hpp"

using namespace xychain;
using std::numbers::pi;

namespace {

// Composite Simpson on n (even) intervals, accumulated in long double.
double simpson(const std::function<double(double)>& f, double a, double b, long n) {
  const long double h = (static_cast<long double>(b) - a) / n;
  long double sum = f(a) + f(b);
  for (long i = 1; i < n; ++i) sum += (i % 2 ? 4.0L : 2.0L) * f(static_cast<double>(a + i * h));
  return static_cast<double>(sum * h / 3.0L);
}

}  // namespace

TEST_CASE("closed-form integrals") {
  const auto r = integrate([](double x) { return std::sin(x); }, 0.0, pi);
  CHECK(r.value == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(r.error_estimate <= 1e-10 * 2.0);

  const auto c = integrate([](double) { return 1.0; }, 0.0, pi);
  CHECK(c.value == doctest::Approx(pi).epsilon(4e-16));
  CHECK(c.subdivisions_used == 1);
}

TEST_CASE("peaked integrand against a brute-force composite rule") {
  const double l = 0.999;
  auto f = [l](double k) {
    const double s = std::sin(k);
    return s * s / std::pow(1.0 + l * l - 2.0 * l * std::cos(k), 1.5);
  };
  const double reference = simpson(f, 0.0, pi, 10'000'000);
  const auto r = integrate(f, 0.0, pi);
  CHECK(r.value == doctest::Approx(reference).epsilon(1e-8));
  CHECK(r.error_estimate <= 1e-10 * std::abs(r.value));
}

TEST_CASE("polynomials up to the Gauss degree are exact on one panel") {
  for (int degree = 0; degree <= 19; ++degree) {
    const auto r = integrate([degree](double x) { return std::pow(x, degree); }, 0.0, 1.0,
                             {1e-12, 0.0, 1, {}});
    CHECK(r.value == doctest::Approx(1.0 / (degree + 1)).epsilon(1e-14));
    CHECK(r.subdivisions_used == 1);
  }
}

TEST_CASE("linearity on random smooth integrands") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int trial = 0; trial < 20; ++trial) {
    const double a1 = u(rng), a2 = u(rng), w = 1.0 + std::abs(u(rng)), alpha = u(rng), beta = u(rng);
    auto f = [=](double x) { return std::exp(a1 * x) * std::cos(w * x); };
    auto g = [=](double x) { return 1.0 / (1.0 + a2 * a2 * x * x); };
    const QuadratureSpec spec;
    const double If = integrate(f, 0.0, 3.0, spec).value;
    const double Ig = integrate(g, 0.0, 3.0, spec).value;
    const double Ih = integrate([&](double x) { return alpha * f(x) + beta * g(x); }, 0.0, 3.0, spec).value;
    const double scale = std::abs(alpha * If) + std::abs(beta * Ig);
    CHECK(std::abs(Ih - (alpha * If + beta * Ig)) <= 10 * spec.rel_tol * scale);
  }
}

TEST_CASE("forced split at a smooth point") {
  auto f = [](double x) { return std::exp(-x) * std::sin(3 * x); };
  const auto plain = integrate(f, 0.0, 4.0);
  const auto split = integrate(f, 0.0, 4.0, {1e-10, 1e-14, 2000, {1.3}});
  CHECK(std::abs(plain.value - split.value) <= plain.error_estimate + split.error_estimate + 1e-15);
  CHECK(split.subdivisions_used >= 2);
}

TEST_CASE("batched and scalar entry points agree bit for bit") {
  auto f = [](double x) { return std::log1p(x * x); };
  BatchIntegrand batch = [&](std::span<const double> x, std::span<double> fx) {
    for (std::size_t i = 0; i < x.size(); ++i) fx[i] = f(x[i]);
  };
  CHECK(integrate(batch, 0.0, 5.0).value == integrate(f, 0.0, 5.0).value);
}

TEST_CASE("errors") {
  CHECK_THROWS_AS(integrate([](double) { return 1.0; }, 1.0, 1.0), InvalidParameter);
  CHECK_THROWS_AS(integrate([](double) { return 1.0; }, 0.0, 1.0, {0.0, 0.0, 10, {}}), InvalidParameter);
  CHECK_THROWS_AS(integrate([](double) { return 1.0; }, 0.0, 1.0, {1e-10, 0.0, 0, {}}), InvalidParameter);
  CHECK_THROWS_AS(integrate([](double) { return 1.0; }, 0.0, 1.0, {1e-10, 0.0, 10, {0.6, 0.3}}), InvalidParameter);
  CHECK_THROWS_AS(integrate([](double) { return 1.0; }, 0.0, 1.0, {1e-10, 0.0, 10, {1.0}}), InvalidParameter);

  try {
    integrate([](double x) { return x > 0.5 ? NAN : 1.0; }, 0.0, 1.0);
    FAIL("expected NonFiniteIntegrand");
  } catch (const NonFiniteIntegrand& e) {
    CHECK(e.abscissa() > 0.5);
  }

  // 1/sqrt(x) is integrable but converges slowly; a tiny budget runs out.
  try {
    integrate([](double x) { return 1.0 / std::sqrt(x); }, 0.0, 1.0, {1e-14, 0.0, 3, {}});
    FAIL("expected NonConvergence");
  } catch (const NonConvergence& e) {
    CHECK(e.partial().value == doctest::Approx(2.0).epsilon(0.05));
    CHECK(e.partial().error_estimate > 0.0);
  }
}

TEST_CASE("integrals that cancel to zero stop at the rounding level") {
  const auto r = integrate([](double x) { return std::cos(x); }, 0.0, pi);
  CHECK(std::abs(r.value) < 1e-14);
  CHECK(r.subdivisions_used < 50);
}
