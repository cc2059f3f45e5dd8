#include "hypasym/special.hpp"

#include <cmath>
#include <stdexcept>

namespace hypasym {

BigRational pochhammer(const BigRational& a, unsigned long k) {
  BigRational result(1);
  BigRational factor = a;
  for (unsigned long j = 0; j < k; ++j) {
    if (factor.isZero()) return BigRational(0);
    result *= factor;
    factor += 1;
  }
  return result;
}

BigRational genBinomial(const BigRational& a, unsigned long k) {
  BigRational value = pochhammer(-a, k) / BigRational(factorial(k));
  return (k % 2 == 0) ? value : -value;
}

BigInt factorial(unsigned long k) {
  BigInt result;
  mpz_fac_ui(result.get_mpz_t(), k);
  return result;
}

BigRational gammaPosInt(long alpha) {
  if (alpha <= 0) throw std::domain_error("gammaPosInt: alpha must be a positive integer");
  return BigRational(factorial(static_cast<unsigned long>(alpha - 1)));
}

BigFloat gammaHalfShift(long alpha, Precision bits) {
  if (alpha < 1) throw std::domain_error("gammaHalfShift: alpha must be >= 1");
  return (sqrtPi(bits + 8) * pochhammer(BigRational(1, 2), static_cast<unsigned long>(alpha)))
      .withPrecision(bits);
}

BigFloat gammaRational(const BigRational& s, Precision bits) {
  if (s.sign() <= 0) throw std::domain_error("gammaRational: argument must be positive");

  // Gamma(s) = (s-1)(s-2)...(s0) Gamma(s0) with s0 in (0, 1].
  BigRational reduced = s;
  BigRational shiftProduct(1);
  while (reduced > BigRational(1)) {
    reduced -= 1;
    shiftProduct *= reduced;
  }

  // Upper tail Gamma(s0, X) <= X^(s0-1) e^-X <= e^-X for X >= 1.
  const long cutoff = static_cast<long>(std::ceil((bits + 16) * std::log(2.0))) + 1;
  const Precision work = bits + static_cast<Precision>(std::ceil(cutoff / std::log(2.0))) + 32;

  BigFloat term = BigFloat(1L, work) / reduced;
  BigFloat sum = term;
  const BigFloat negligible = pow2(-work, 64);
  for (long k = 1;; ++k) {
    term = term * cutoff / (reduced + k);
    sum += term;
    if (k > cutoff && term < sum * negligible) break;
  }

  const BigFloat x(cutoff, work);
  const BigFloat prefactor = exp(BigFloat(reduced, work) * log(x) - x);
  return (prefactor * sum * shiftProduct).withPrecision(bits);
}

BigFloat gammaOneThird(Precision bits) { return gammaRational(BigRational(1, 3), bits); }

BigComplex expUnit(const BigFloat& theta, Precision bits) {
  BigFloat s(bits);
  BigFloat c(bits);
  mpfr_sin_cos(s.get(), c.get(), theta.get(), MPFR_RNDN);
  return {std::move(c), std::move(s)};
}

}  // namespace hypasym
