#pragma once

#include <array>
#include <variant>

#include "hypasym/bigfloat.hpp"
#include "hypasym/rational.hpp"

namespace hypasym {

/// Degree n and upper parameter alpha of the family
/// F_n(z) = 3F1(-n, n, alpha; 1/2 | z/(2n)).
struct PolyParams {
  long n = 0;
  long alpha = 1;

  PolyParams(long degree, long upper);
};

/// A terminating 3F1(a, b, c; d | x) with an explicit term count.
struct Terminating3F1Spec {
  std::array<BigRational, 3> upper;
  BigRational lower;
  std::variant<GaussianRational, BigComplex> argument;
  long termCount = 0;

  /// Throws std::invalid_argument unless one upper parameter is -termCount
  /// and (lower)_k is nonzero for every k <= termCount.
  void validate() const;
};

/// Float evaluation together with the cancellation data that drove it.
struct SeriesEvaluation {
  BigComplex value;
  /// Largest |term| seen in the first pass.
  BigFloat maxTerm;
  /// Precision of the pass that produced `value`.
  Precision workingBits;
};

inline constexpr Precision kDefaultPrecisionCeiling = 1 << 16;

GaussianRational f3F1Exact(const PolyParams& params, const GaussianRational& z);

/// Exact terminating sum; requires a GaussianRational argument.
GaussianRational f3F1GeneralExact(const Terminating3F1Spec& spec);

/// Two-pass float evaluation: a first pass at `bits` measures the ratio of
/// the largest term to the sum, and a second pass adds that many bits plus
/// 32. The result is rounded to `bits`. The argument is taken as exact.
SeriesEvaluation f3F1Float(const Terminating3F1Spec& spec, Precision bits,
                           Precision ceiling = kDefaultPrecisionCeiling);

/// Jacobi polynomial P_n^(alpha,beta)(x) from the finite binomial sum.
BigRational jacobiP(long n, const BigRational& alpha, const BigRational& beta, const BigRational& x);
BigFloat jacobiP(long n, const BigRational& alpha, const BigRational& beta, const BigFloat& x);

/// Chebyshev T_n(x) by the three-term recurrence.
BigRational chebyshevT(long n, const BigRational& x);

/// S = (-1)^(n+1) e^(in/y) F_n(-iy) + e^(-in/y) F_n(iy) with alpha = 1.
BigComplex computeS(long n, const BigRational& y, Precision bits);

/// Im{e^(-in/y) F_n(iy)} for even n, Re{...} for odd n, alpha = 1, 0 < y <= 1.
BigFloat targetQuantity(long n, const BigRational& y, Precision bits);

}  // namespace hypasym
