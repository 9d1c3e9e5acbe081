#pragma once

// Per-mode densities of the XY chain evaluated over batches of momenta.
//
// Every thermodynamic integral and every finite-N mode sum in the library reduces
// to the same inner loop: given the field offsets d_k = lambda - cos k and the
// sines s_k = sin k of a batch of momenta, evaluate one density per mode. The loop
// is written twice, once as a scalar reference on top of <cmath> and once with AVX2
// intrinsics and polynomial exp/log1p. The variant is chosen at runtime from CPU
// support and can be pinned with the XYCHAIN_ISA environment variable
// (scalar | avx2) or set_isa().

#include <cstddef>
#include <span>
#include <string_view>

namespace xychain::kernels {

enum class Density {
  dispersion,      ///< Lambda_k
  free_energy,     ///< T ln(2 cosh(Lambda/T));  Lambda at T = 0
  magnetization,   ///< tanh(Lambda/T) d/Lambda; d/Lambda at T = 0
  susceptibility,  ///< beta sech^2(beta Lambda) d^2/Lambda^2 + tanh(beta Lambda) g^2 s^2/Lambda^3
  gp_phase,        ///< Gibbs average of the four mode-pair Berry phases (units of rad)
};

enum class Isa { scalar, avx2 };

/// Inputs shared by every element of a batch. temperature == 0 selects the
/// ground-state limit of each density.
struct Coupling {
  double gamma = 1.0;
  double temperature = 0.0;
};

/// Batch view. offset, sine and out must have the same length.
struct ModeBatch {
  std::span<const double> offset;
  std::span<const double> sine;
};

/// Evaluates with the active instruction set.
void evaluate(Density density, const Coupling& c, ModeBatch in, std::span<double> out);

/// Evaluates with an explicit instruction set. Throws InvalidParameter when the
/// variant is not compiled in or the CPU lacks it.
void evaluate(Isa isa, Density density, const Coupling& c, ModeBatch in, std::span<double> out);

bool supported(Isa isa) noexcept;
Isa active_isa() noexcept;
void set_isa(Isa isa);
std::string_view name(Isa isa) noexcept;

namespace scalar {
void evaluate(Density density, const Coupling& c, const double* offset, const double* sine,
              double* out, std::size_t n);
}  // namespace scalar

namespace avx2 {
void evaluate(Density density, const Coupling& c, const double* offset, const double* sine,
              double* out, std::size_t n);
}  // namespace avx2

}  // namespace xychain::kernels
