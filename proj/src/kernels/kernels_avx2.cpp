// AVX2/FMA densities. Compiled with -mavx2 -mfma; only called after a runtime CPU check.
//
// exp, expm1 and log1p are evaluated with fixed-degree polynomials accurate to a few
// ulp on the ranges the densities need (non-positive exponents, log1p on [0, 1]).

#include <immintrin.h>

#include <array>
#include <cstddef>
#include <numbers>

#include "xychain/kernels.hpp"

namespace xychain::kernels::avx2 {
namespace {

using vec = __m256d;
constexpr std::size_t kLanes = 4;

inline vec splat(double x) { return _mm256_set1_pd(x); }

// Horner evaluation of sum_i c[i] x^i.
template <std::size_t N>
inline vec horner(vec x, const std::array<double, N>& c) {
  vec acc = splat(c[N - 1]);
  for (std::size_t i = N - 1; i-- > 0;) acc = _mm256_fmadd_pd(acc, x, splat(c[i]));
  return acc;
}

// 1/n!, n = 0..13.
constexpr std::array<double, 14> kExpTaylor = {
    1.0,
    1.0,
    1.0 / 2.0,
    1.0 / 6.0,
    1.0 / 24.0,
    1.0 / 120.0,
    1.0 / 720.0,
    1.0 / 5040.0,
    1.0 / 40320.0,
    1.0 / 362880.0,
    1.0 / 3628800.0,
    1.0 / 39916800.0,
    1.0 / 479001600.0,
    1.0 / 6227020800.0,
};

// expm1(y) / y = sum 1/(n+1)! y^n, n = 0..14.
constexpr std::array<double, 15> kExpm1Taylor = {
    1.0,
    1.0 / 2.0,
    1.0 / 6.0,
    1.0 / 24.0,
    1.0 / 120.0,
    1.0 / 720.0,
    1.0 / 5040.0,
    1.0 / 40320.0,
    1.0 / 362880.0,
    1.0 / 3628800.0,
    1.0 / 39916800.0,
    1.0 / 479001600.0,
    1.0 / 6227020800.0,
    1.0 / 87178291200.0,
    1.0 / 1307674368000.0,
};

// atanh(u)/u = sum u^{2j}/(2j+1), j = 0..17; u <= 1/3 keeps the tail below 1e-18.
constexpr std::array<double, 18> kAtanhSeries = [] {
  std::array<double, 18> c{};
  for (std::size_t j = 0; j < c.size(); ++j) c[j] = 1.0 / static_cast<double>(2 * j + 1);
  return c;
}();

// e^x for x <= 0. Results below the normal range flush to zero.
inline vec exp_nonpositive(vec x) {
  const vec log2e = splat(std::numbers::log2e);
  const vec ln2_hi = splat(6.93145751953125e-1);
  const vec ln2_lo = splat(1.42860682030941723212e-6);
  const vec underflow = _mm256_cmp_pd(x, splat(-708.0), _CMP_LT_OQ);
  x = _mm256_max_pd(x, splat(-708.0));

  const vec n = _mm256_round_pd(_mm256_mul_pd(x, log2e), _MM_FROUND_TO_NEAREST_INT | _MM_FROUND_NO_EXC);
  vec r = _mm256_fnmadd_pd(n, ln2_hi, x);
  r = _mm256_fnmadd_pd(n, ln2_lo, r);
  const vec p = horner(r, kExpTaylor);

  const __m256i ni = _mm256_cvtepi32_epi64(_mm256_cvtpd_epi32(n));
  const __m256i bits = _mm256_slli_epi64(_mm256_add_epi64(ni, _mm256_set1_epi64x(1023)), 52);
  const vec scaled = _mm256_mul_pd(p, _mm256_castsi256_pd(bits));
  return _mm256_andnot_pd(underflow, scaled);
}

// e^y - 1 for y <= 0 given e^y, without cancellation near 0.
inline vec expm1_nonpositive(vec y, vec exp_y) {
  const vec small = _mm256_cmp_pd(y, splat(-0.35), _CMP_GT_OQ);
  const vec series = _mm256_mul_pd(y, horner(y, kExpm1Taylor));
  return _mm256_blendv_pd(_mm256_sub_pd(exp_y, splat(1.0)), series, small);
}

// ln(1 + t) for t in [0, 1] via 2 atanh(t / (2 + t)).
inline vec log1p_unit(vec t) {
  const vec u = _mm256_div_pd(t, _mm256_add_pd(splat(2.0), t));
  const vec u2 = _mm256_mul_pd(u, u);
  return _mm256_mul_pd(_mm256_add_pd(u, u), horner(u2, kAtanhSeries));
}

inline vec is_zero(vec x) { return _mm256_cmp_pd(x, _mm256_setzero_pd(), _CMP_EQ_OQ); }

struct Lanes {
  vec d;
  vec q;
  vec lam;
};

// Thermal factors of x = Lambda / T: t = e^{-2x}, tanh x, sech^2 x.
struct Thermal {
  vec t;
  vec tanh;
  vec sech2;
};

inline Thermal thermal(vec lam, vec beta) {
  const vec y = _mm256_mul_pd(splat(-2.0), _mm256_mul_pd(beta, lam));
  const vec t = exp_nonpositive(y);
  const vec em = expm1_nonpositive(y, t);
  const vec one_plus_t = _mm256_add_pd(splat(1.0), t);
  Thermal th;
  th.t = t;
  th.tanh = _mm256_div_pd(_mm256_sub_pd(_mm256_setzero_pd(), em), one_plus_t);
  th.sech2 = _mm256_div_pd(_mm256_mul_pd(splat(4.0), t), _mm256_mul_pd(one_plus_t, one_plus_t));
  return th;
}

inline vec density(Density which, const Lanes& v, double gamma, double temperature) {
  const vec zero_gap = is_zero(v.lam);
  const bool ground = temperature == 0.0;
  const vec temp = splat(temperature);
  const vec beta = splat(ground ? 0.0 : 1.0 / temperature);
  switch (which) {
    case Density::dispersion:
      return v.lam;
    case Density::free_energy: {
      if (ground) return v.lam;
      const Thermal th = thermal(v.lam, beta);
      return _mm256_fmadd_pd(temp, log1p_unit(th.t), v.lam);
    }
    case Density::magnetization: {
      vec p = _mm256_div_pd(v.d, v.lam);
      if (!ground) p = _mm256_mul_pd(thermal(v.lam, beta).tanh, p);
      return _mm256_blendv_pd(p, _mm256_setzero_pd(), zero_gap);
    }
    case Density::susceptibility: {
      const vec r = _mm256_div_pd(v.q, v.lam);
      const vec r2 = _mm256_mul_pd(r, r);
      if (ground) {
        const vec value = _mm256_div_pd(r2, v.lam);
        const double at_zero = gamma == 0.0 ? 0.0 : __builtin_inf();
        return _mm256_blendv_pd(value, splat(at_zero), zero_gap);
      }
      const Thermal th = thermal(v.lam, beta);
      const vec p = _mm256_div_pd(v.d, v.lam);
      const vec first = _mm256_mul_pd(_mm256_mul_pd(beta, th.sech2), _mm256_mul_pd(p, p));
      const vec second = _mm256_mul_pd(_mm256_div_pd(th.tanh, v.lam), r2);
      return _mm256_blendv_pd(_mm256_add_pd(first, second), beta, zero_gap);
    }
    case Density::gp_phase: {
      const vec pi_p = _mm256_mul_pd(splat(std::numbers::pi), _mm256_div_pd(v.d, v.lam));
      vec phase = pi_p;
      if (!ground) {
        const vec t = thermal(v.lam, beta).t;
        const vec one_plus_t = _mm256_add_pd(splat(1.0), t);
        const vec z = _mm256_mul_pd(one_plus_t, one_plus_t);
        const vec w00 = _mm256_div_pd(splat(1.0), z);
        const vec w11 = _mm256_div_pd(_mm256_mul_pd(t, t), z);
        // |01>, |10> carry zero phase.
        phase = _mm256_fmsub_pd(w00, pi_p, _mm256_mul_pd(w11, pi_p));
      }
      return _mm256_blendv_pd(phase, _mm256_setzero_pd(), zero_gap);
    }
  }
  return v.lam;
}

inline void block(Density which, double gamma, double temperature, const double* d, const double* s,
                  double* out) {
  Lanes v;
  v.d = _mm256_loadu_pd(d);
  v.q = _mm256_mul_pd(splat(gamma), _mm256_loadu_pd(s));
  v.lam = _mm256_sqrt_pd(_mm256_fmadd_pd(v.d, v.d, _mm256_mul_pd(v.q, v.q)));
  _mm256_storeu_pd(out, density(which, v, gamma, temperature));
}

}  // namespace

void evaluate(Density which, const Coupling& c, const double* offset, const double* sine,
              double* out, std::size_t n) {
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) block(which, c.gamma, c.temperature, offset + i, sine + i, out + i);
  if (i < n) {
    // Pad the tail with a gapped dummy mode so every element takes the vector path.
    std::array<double, kLanes> d{1.0, 1.0, 1.0, 1.0};
    std::array<double, kLanes> s{};
    std::array<double, kLanes> r{};
    for (std::size_t j = 0; i + j < n; ++j) {
      d[j] = offset[i + j];
      s[j] = sine[i + j];
    }
    block(which, c.gamma, c.temperature, d.data(), s.data(), r.data());
    for (std::size_t j = 0; i + j < n; ++j) out[i + j] = r[j];
  }
}

}  // namespace xychain::kernels::avx2
