#pragma once

#include "hypasym/bigfloat.hpp"
#include "hypasym/rational.hpp"

namespace hypasym {

/// Rising factorial a(a+1)...(a+k-1); the empty product (k = 0) is 1.
BigRational pochhammer(const BigRational& a, unsigned long k);

/// Generalized binomial coefficient binom(a, k) = (-1)^k (-a)_k / k!.
BigRational genBinomial(const BigRational& a, unsigned long k);

BigInt factorial(unsigned long k);

/// Gamma(alpha) = (alpha-1)! for a positive integer alpha.
BigRational gammaPosInt(long alpha);

/// Gamma(alpha + 1/2) = (1/2)_alpha * sqrt(pi), alpha >= 1.
BigFloat gammaHalfShift(long alpha, Precision bits);

/// Gamma(s) for rational s > 0.
///
/// Uses the lower incomplete gamma series at a cutoff X chosen so the upper
/// tail falls below 2^-(bits+16), after reducing s into (0, 1] by the
/// functional equation. The series has only positive terms, so the only
/// precision loss is the dynamic range e^X, which is covered by guard bits.
BigFloat gammaRational(const BigRational& s, Precision bits);

/// Gamma(1/3) ~ 2.6789385347077476337.
BigFloat gammaOneThird(Precision bits);

/// cos(theta) + i sin(theta) rounded to `bits`.
BigComplex expUnit(const BigFloat& theta, Precision bits);

}  // namespace hypasym
