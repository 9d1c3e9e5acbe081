#include <atomic>
#include <cstdlib>
#include <string>
#include <string_view>

#include "xychain/errors.hpp"
#include "xychain/kernels.hpp"

namespace xychain::kernels {
namespace {

bool cpu_has_avx2() noexcept {
#if defined(XYCHAIN_HAVE_AVX2) && (defined(__x86_64__) || defined(__i386__))
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

Isa initial_isa() noexcept {
  const bool avx2 = cpu_has_avx2();
  if (const char* env = std::getenv("XYCHAIN_ISA")) {
    const std::string_view v(env);
    if (v == "scalar") return Isa::scalar;
    if (v == "avx2" && avx2) return Isa::avx2;
  }
  return avx2 ? Isa::avx2 : Isa::scalar;
}

std::atomic<Isa>& active() noexcept {
  static std::atomic<Isa> isa{initial_isa()};
  return isa;
}

void check_batch(ModeBatch in, std::span<double> out) {
  if (in.offset.size() != in.sine.size() || in.offset.size() != out.size()) {
    throw InvalidParameter("kernel batch spans differ in length");
  }
}

}  // namespace

bool supported(Isa isa) noexcept {
  switch (isa) {
    case Isa::scalar:
      return true;
    case Isa::avx2:
      return cpu_has_avx2();
  }
  return false;
}

Isa active_isa() noexcept { return active().load(std::memory_order_relaxed); }

void set_isa(Isa isa) {
  if (!supported(isa)) throw InvalidParameter(std::string("instruction set unavailable: ") + std::string(name(isa)));
  active().store(isa, std::memory_order_relaxed);
}

std::string_view name(Isa isa) noexcept {
  switch (isa) {
    case Isa::scalar:
      return "scalar";
    case Isa::avx2:
      return "avx2";
  }
  return "unknown";
}

void evaluate(Isa isa, Density density, const Coupling& c, ModeBatch in, std::span<double> out) {
  check_batch(in, out);
  switch (isa) {
    case Isa::scalar:
      scalar::evaluate(density, c, in.offset.data(), in.sine.data(), out.data(), out.size());
      return;
    case Isa::avx2:
#if defined(XYCHAIN_HAVE_AVX2)
      if (supported(Isa::avx2)) {
        avx2::evaluate(density, c, in.offset.data(), in.sine.data(), out.data(), out.size());
        return;
      }
#endif
      throw InvalidParameter("avx2 kernels unavailable");
  }
}

void evaluate(Density density, const Coupling& c, ModeBatch in, std::span<double> out) {
  evaluate(active_isa(), density, c, in, out);
}

}  // namespace xychain::kernels
