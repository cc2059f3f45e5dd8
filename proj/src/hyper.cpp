#include "hypasym/hyper.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "hypasym/errors.hpp"
#include "hypasym/special.hpp"

namespace hypasym {
namespace {

constexpr Precision kGuardBits = 32;

// (a+k)(b+k)(c+k) / ((d+k)(k+1)): ratio of consecutive coefficients.
BigRational termRatio(const Terminating3F1Spec& spec, long k) {
  BigRational num = (spec.upper[0] + k) * (spec.upper[1] + k) * (spec.upper[2] + k);
  if (num.isZero()) return num;
  return num / ((spec.lower + k) * BigRational(k + 1));
}

BigComplex argumentAt(const Terminating3F1Spec& spec, Precision bits) {
  if (const auto* exact = std::get_if<GaussianRational>(&spec.argument)) return BigComplex(*exact, bits);
  return std::get<BigComplex>(spec.argument).withPrecision(bits);
}

struct FloatPass {
  BigComplex sum;
  BigFloat maxTerm;
};

FloatPass sumFloat(const Terminating3F1Spec& spec, Precision bits) {
  const BigComplex x = argumentAt(spec, bits);
  BigComplex term(1, 0, bits);
  BigComplex sum = term;
  BigFloat maxTerm(1L, bits);
  for (long k = 0; k < spec.termCount; ++k) {
    const BigRational ratio = termRatio(spec, k);
    if (ratio.isZero()) break;
    term = term * ratio * x;
    sum += term;
    const BigFloat size = abs(term);
    if (size > maxTerm) maxTerm = size;
  }
  return {std::move(sum), std::move(maxTerm)};
}

void requireNonzeroY(const BigRational& y) {
  if (y.isZero()) throw std::invalid_argument("y must be nonzero");
  if (abs(y) > BigRational(1)) throw std::invalid_argument("|y| must not exceed 1");
}

// e^(-in/y) F_n(iy), the common building block of S and the target quantity.
BigComplex rotatedValue(long n, const BigRational& y, Precision work) {
  const GaussianRational z(BigRational(0), y);
  const BigComplex value(f3F1Exact(PolyParams(n, 1), z), work);
  return expUnit(BigFloat(BigRational(n) / y, work), work).conj() * value;
}

}  // namespace

PolyParams::PolyParams(long degree, long upper) : n(degree), alpha(upper) {
  if (n < 0) throw std::invalid_argument("degree n must be non-negative");
  if (alpha < 1) throw std::invalid_argument("alpha must be a positive integer");
}

void Terminating3F1Spec::validate() const {
  if (termCount < 0) throw std::invalid_argument("termCount must be non-negative");
  const BigRational witness(-termCount);
  if (std::none_of(upper.begin(), upper.end(), [&](const BigRational& a) { return a == witness; })) {
    throw std::invalid_argument("no upper parameter equals -termCount");
  }
  for (long j = 0; j < termCount; ++j) {
    if ((lower + j).isZero()) {
      throw std::invalid_argument("lower parameter Pochhammer vanishes at k = " + std::to_string(j + 1));
    }
  }
}

GaussianRational f3F1GeneralExact(const Terminating3F1Spec& spec) {
  spec.validate();
  const auto* x = std::get_if<GaussianRational>(&spec.argument);
  if (x == nullptr) throw std::invalid_argument("exact evaluation needs a Gaussian rational argument");
  GaussianRational term(1);
  GaussianRational sum(1);
  for (long k = 0; k < spec.termCount; ++k) {
    const BigRational ratio = termRatio(spec, k);
    if (ratio.isZero()) break;
    term *= *x * ratio;
    sum += term;
  }
  return sum;
}

GaussianRational f3F1Exact(const PolyParams& params, const GaussianRational& z) {
  if (params.n == 0) return GaussianRational(1);
  Terminating3F1Spec spec{
      {BigRational(-params.n), BigRational(params.n), BigRational(params.alpha)},
      BigRational(1, 2),
      z / BigRational(2 * params.n),
      params.n};
  return f3F1GeneralExact(spec);
}

SeriesEvaluation f3F1Float(const Terminating3F1Spec& spec, Precision bits, Precision ceiling) {
  spec.validate();
  if (spec.termCount == 0) return {BigComplex(1, 0, bits), BigFloat(1L, bits), bits};

  FloatPass first = sumFloat(spec, bits);
  const BigFloat magnitude = abs(first.sum);
  const long extra = magnitude.isZero()
                         ? static_cast<long>(bits)
                         : std::max(0L, first.maxTerm.exponent2() - magnitude.exponent2()) + 1;
  const Precision work = bits + extra + kGuardBits;
  if (work > ceiling) {
    throw PrecisionCeilingError("3F1 float path needs " + std::to_string(work) +
                                " bits, ceiling is " + std::to_string(ceiling));
  }
  FloatPass second = sumFloat(spec, work);
  return {second.sum.withPrecision(bits), std::move(first.maxTerm), work};
}

BigRational jacobiP(long n, const BigRational& alpha, const BigRational& beta, const BigRational& x) {
  if (n < 0) throw std::invalid_argument("jacobiP: n must be non-negative");
  const auto un = static_cast<unsigned long>(n);
  BigRational sum(0);
  const BigRational below = x - 1;
  const BigRational above = x + 1;
  for (unsigned long k = 0; k <= un; ++k) {
    sum += genBinomial(alpha + n, k) * genBinomial(beta + n, un - k) * pow(below, un - k) * pow(above, k);
  }
  return sum / pow(BigRational(2), un);
}

BigFloat jacobiP(long n, const BigRational& alpha, const BigRational& beta, const BigFloat& x) {
  if (n < 0) throw std::invalid_argument("jacobiP: n must be non-negative");
  const auto un = static_cast<unsigned long>(n);
  BigFloat sum(x.precision());
  const BigFloat below = x - 1;
  const BigFloat above = x + 1;
  for (unsigned long k = 0; k <= un; ++k) {
    const BigRational coefficient = genBinomial(alpha + n, k) * genBinomial(beta + n, un - k);
    sum += pow(below, static_cast<long>(un - k)) * pow(above, static_cast<long>(k)) * coefficient;
  }
  return ldexp(sum, -n);
}

BigRational chebyshevT(long n, const BigRational& x) {
  if (n < 0) throw std::invalid_argument("chebyshevT: n must be non-negative");
  if (n == 0) return BigRational(1);
  BigRational previous(1);
  BigRational current = x;
  const BigRational twoX = x * BigRational(2);
  for (long k = 1; k < n; ++k) {
    BigRational next = twoX * current - previous;
    previous = std::move(current);
    current = std::move(next);
  }
  return current;
}

BigComplex computeS(long n, const BigRational& y, Precision bits) {
  requireNonzeroY(y);
  const Precision work = bits + kGuardBits;
  const PolyParams params(n, 1);
  const BigComplex rotation = expUnit(BigFloat(BigRational(n) / y, work), work);
  const BigComplex plus(f3F1Exact(params, GaussianRational(BigRational(0), y)), work);
  const BigComplex minus(f3F1Exact(params, GaussianRational(BigRational(0), -y)), work);
  BigComplex first = rotation * minus;
  if (n % 2 == 0) first = -first;
  return (first + rotation.conj() * plus).withPrecision(bits);
}

BigFloat targetQuantity(long n, const BigRational& y, Precision bits) {
  if (y.sign() <= 0 || y > BigRational(1)) throw std::invalid_argument("targetQuantity needs 0 < y <= 1");
  const BigComplex value = rotatedValue(n, y, bits + kGuardBits);
  return (n % 2 == 0 ? value.im() : value.re()).withPrecision(bits);
}

}  // namespace hypasym
