#pragma once

#include <functional>
#include <memory>
#include <utility>
#include <vector>

#include "hypasym/bigfloat.hpp"
#include "hypasym/rational.hpp"

namespace hypasym {

struct QuadratureConfig {
  /// Lower bound on the panel count; raised to the oscillation-based count.
  long panelCount = 0;
  int nodesPerPanel = 16;
  /// Working precision. Results are trusted to half of it.
  Precision precisionBits = 256;
  /// Maximum number of panel doublings before giving up.
  int refinementLimit = 6;
};

struct QuadratureResult {
  BigComplex value;
  /// max(|Q(2P) - Q(P)|, rounding floor).
  BigFloat errorEstimate;
  /// Panel count of the returned value.
  long panels;
};

struct GaussLegendreRule {
  std::vector<BigFloat> nodes;    // ascending, on [-1, 1]
  std::vector<BigFloat> weights;
};

/// Cached per (count, precision); safe to call concurrently.
std::shared_ptr<const GaussLegendreRule> gaussLegendre(int count, Precision bits);

/// max(32, ceil(4 * oscillation)) and at least cfg.panelCount.
long effectivePanelCount(const QuadratureConfig& cfg, double oscillation);

/// Integral over [0, pi] of `integrand(theta)` by composite Gauss-Legendre,
/// doubling the panel count until two successive results agree to
/// 2^-(precisionBits/2). `oscillation` is the phase speed of the integrand
/// (radians of phase per radian of theta).
QuadratureResult integrateTheta(const std::function<BigComplex(const BigFloat&)>& integrand,
                                double oscillation, const QuadratureConfig& cfg);

/// I_n = int_{-1}^{1} T_n(t) exp(-int/y) dt, evaluated as
/// int_0^pi cos(n theta) exp(-i n cos(theta)/y) sin(theta) d theta.
QuadratureResult chebIntegral(long n, const BigRational& y, const QuadratureConfig& cfg);

/// I_n^+- = int_0^pi exp(in[-cos(theta)/y +- theta]) sin(theta) d theta; returns {I^+, I^-}.
std::pair<QuadratureResult, QuadratureResult> iPlusMinus(long n, const BigRational& y, const QuadratureConfig& cfg);

/// int_{-1}^{1} P_n^(alpha,beta)(t) e^(i lambda t) dt.
QuadratureResult jacobiFourierLHS(long n, const BigRational& alpha, const BigRational& beta,
                                  const BigFloat& lambda, const QuadratureConfig& cfg);

/// Closed form of the same transform as two terminating 3F1 terms; lambda != 0.
BigComplex jacobiFourierRHS(long n, const BigRational& alpha, const BigRational& beta, const BigFloat& lambda,
                   Precision bits);

}  // namespace hypasym
