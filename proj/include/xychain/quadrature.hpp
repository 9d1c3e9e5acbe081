#pragma once

// Globally adaptive Gauss-Kronrod (10/21 point) quadrature on a finite interval.
//
// The integrand is called with the 21 nodes of a panel at once so that callers can
// route them through the batched density kernels. Panels are bisected in order of
// decreasing error estimate until the total estimate meets
// max(abs_tol, rel_tol * |value|), or falls to the rounding level of int |f| when the
// integral cancels to near zero. The final value is summed over panels in
// left-to-right order, so a given input always produces the same bits.

#include <functional>
#include <span>
#include <vector>

#include "xychain/errors.hpp"

namespace xychain {

struct QuadratureSpec {
  double rel_tol = 1e-10;
  double abs_tol = 1e-14;
  int max_subdivisions = 2000;
  /// Interior abscissae that always start a new panel. Sorted, unique, strictly inside (a, b).
  std::vector<double> forced_splits;
};

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  int subdivisions_used = 0;
};

/// Raised when the subdivision budget runs out above tolerance. Carries the partial estimate.
class NonConvergence : public Error {
 public:
  NonConvergence(const std::string& what, QuadratureResult partial)
      : Error(what), partial_(partial) {}
  const QuadratureResult& partial() const noexcept { return partial_; }

 private:
  QuadratureResult partial_;
};

/// fx[i] = f(x[i]) for every node of a panel.
using BatchIntegrand = std::function<void(std::span<const double> x, std::span<double> fx)>;

/// Throws InvalidParameter for a malformed spec or a >= b, NonFiniteIntegrand,
/// or NonConvergence.
QuadratureResult integrate(const BatchIntegrand& f, double a, double b, const QuadratureSpec& spec = {});

QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           const QuadratureSpec& spec = {});

/// Number of nodes per panel.
inline constexpr int kPanelNodes = 21;

}  // namespace xychain
