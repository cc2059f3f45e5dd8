#include "hypasym/asym.hpp"

#include <cstdlib>
#include <stdexcept>
#include <string>

#include "hypasym/errors.hpp"
#include "hypasym/special.hpp"

namespace hypasym {
namespace {

constexpr Precision kGuardBits = 32;

// Extra bits so that an argument of size ~n keeps `bits` after reduction.
Precision withMagnitudeGuard(Precision bits, long n) {
  Precision extra = kGuardBits;
  for (long m = n; m > 0; m >>= 1) ++extra;
  return bits + extra;
}

void requireRegime(const Regime& regime, RegimeTag expected) {
  if (regime.tag != expected) {
    throw RegimeError("point is " + regimeName(regime.tag) + ", approximant needs " + regimeName(expected));
  }
}

void requireOpenUnit(const BigRational& y) {
  if (y.sign() <= 0 || y >= BigRational(1)) throw std::invalid_argument("y must lie in (0, 1)");
}

void requirePositive(long n) {
  if (n < 1) throw std::invalid_argument("n must be positive");
}

BigFloat sqrtOneMinusSquare(const BigRational& y, Precision bits) {
  return sqrt(BigFloat(BigRational(1) - y * y, bits));
}

AsymptoticResult exteriorFromPoint(const PolyParams& params, const BigComplex& z, Precision bits) {
  requirePositive(params.n);
  const Precision work = withMagnitudeGuard(bits, params.n) + std::labs(abs(z).exponent2());
  const BigComplex zw = z.withPrecision(std::max(work, z.precision())).withPrecision(work);
  const BigComplex w = mapW(zw, work);
  const BigComplex root = w - zw;  // sqrt(z^2 + 1) on mapW's branch

  const BigFloat n(params.n, work);
  BigFloat scale = pow(n, params.alpha - 1) * sqrt(n) * sqrt(pi(work) / 2) / gammaPosInt(params.alpha);
  if (params.n % 2 != 0) scale = -scale;

  const BigComplex shape = pow((root + 1L) / zw, params.alpha - 1) / sqrt(root / zw);
  const BigComplex value = shape * pow(phi(zw, work), params.n) * scale;
  return {value.withPrecision(bits), RegimeTag::Exterior, leadingOrder(RegimeTag::Exterior, params.alpha)};
}

AsymptoticResult interiorFromPoint(const PolyParams& params, const BigComplex& z, Precision bits) {
  requirePositive(params.n);
  const Precision work = bits + kGuardBits;
  const BigComplex zw = z.withPrecision(std::max(work, z.precision())).withPrecision(work);
  const BigFloat scale = pow(BigFloat(BigRational(2, params.n), work), params.alpha) *
                         gammaHalfShift(params.alpha, work) / sqrtPi(work);
  const BigComplex value = pow(-1L / zw, params.alpha) * scale;
  return {value.withPrecision(bits), RegimeTag::Interior, leadingOrder(RegimeTag::Interior, params.alpha)};
}

}  // namespace

BigRational leadingOrder(RegimeTag regime, long alpha) {
  switch (regime) {
    case RegimeTag::Interior: return BigRational(-alpha);
    case RegimeTag::Exterior: return BigRational(2 * alpha - 1, 2);
    case RegimeTag::SegmentInterior: return BigRational(1, 2);
    case RegimeTag::SegmentEndpoint: return BigRational(2, 3);
    case RegimeTag::CurveOther: break;
  }
  throw std::invalid_argument("no asymptotic formula is known on the rest of the curve");
}

AsymptoticResult exteriorApprox(const PolyParams& params, const BigComplex& z, Precision bits, double tol) {
  requireRegime(classify(z, tol, bits), RegimeTag::Exterior);
  return exteriorFromPoint(params, z, bits);
}

AsymptoticResult exteriorApprox(const PolyParams& params, const GaussianRational& z, Precision bits, double tol) {
  requireRegime(classify(z, tol, bits), RegimeTag::Exterior);
  const Precision work = withMagnitudeGuard(bits, params.n) + 64;
  return exteriorFromPoint(params, BigComplex(z, work), bits);
}

AsymptoticResult interiorApprox(const PolyParams& params, const BigComplex& z, Precision bits, double tol) {
  requireRegime(classify(z, tol, bits), RegimeTag::Interior);
  return interiorFromPoint(params, z, bits);
}

AsymptoticResult interiorApprox(const PolyParams& params, const GaussianRational& z, Precision bits, double tol) {
  requireRegime(classify(z, tol, bits), RegimeTag::Interior);
  return interiorFromPoint(params, BigComplex(z, bits + kGuardBits), bits);
}

BigFloat segmentAmplitude(long n, const BigRational& y, Precision bits) {
  requireOpenUnit(y);
  const Precision work = bits + kGuardBits;
  const BigFloat ratio = pi(work) * BigRational(n) * y / (sqrtOneMinusSquare(y, work) * 2);
  return sqrt(ratio).withPrecision(bits);
}

BigFloat segmentPhase(long n, const BigRational& y, Precision bits) {
  requireOpenUnit(y);
  const Precision work = withMagnitudeGuard(bits, n);
  const BigFloat yf(y, work);
  const BigFloat bracket = sqrtOneMinusSquare(y, work) / yf + asin(yf);
  return (bracket * n - pi(work) / 4).withPrecision(bits);
}

BigFloat segmentOscillation(long n, const BigRational& y, Precision bits) {
  const BigFloat phase = segmentPhase(n, y, withMagnitudeGuard(bits, n));
  return (n % 2 == 0 ? cos(phase) : sin(phase)).withPrecision(bits);
}

BigFloat segmentApprox(long n, const BigRational& y, Precision bits) {
  const Precision work = bits + kGuardBits;
  return (-(segmentAmplitude(n, y, work) * segmentOscillation(n, y, work))).withPrecision(bits);
}

BigFloat endpointCoefficient(Precision bits) {
  const Precision work = bits + kGuardBits;
  const BigFloat y(1L, work);  // the formula's 1/y, instantiated at the endpoint y = 1
  const BigFloat sixCbrt = cbrt(BigFloat(6L, work));
  return (sixCbrt * gammaOneThird(work) / (sqrt(BigFloat(3L, work)) * 4 * y)).withPrecision(bits);
}

BigFloat endpointApprox(long n, Precision bits) {
  requirePositive(n);
  const Precision work = bits + kGuardBits;
  const BigFloat magnitude = endpointCoefficient(work) * pow(BigFloat(n, work), BigFloat(BigRational(2, 3), work));
  // even n: -(-1)^(n/2); odd n: (-1)^((n+1)/2)
  const long quarter = n % 2 == 0 ? n / 2 : (n + 1) / 2;
  const bool negative = (n % 2 == 0) == (quarter % 2 == 0);
  return (negative ? -magnitude : magnitude).withPrecision(bits);
}

BigFloat iMinusEnvelope(long n, const BigRational& y, Precision bits) {
  requireOpenUnit(y);
  requirePositive(n);
  const Precision work = bits + kGuardBits;
  const BigFloat inner = pi(work) * y * 2 / (sqrtOneMinusSquare(y, work) * n);
  return (sqrt(inner) * y * 2).withPrecision(bits);
}

BigComplex iMinusApprox(long n, const BigRational& y, Precision bits) {
  const Precision work = bits + kGuardBits;
  const BigFloat envelope = iMinusEnvelope(n, y, work);
  const BigFloat oscillation = segmentOscillation(n, y, work);
  BigComplex value = n % 2 == 0 ? BigComplex(envelope * oscillation)
                                : BigComplex(BigFloat(work), -(envelope * oscillation));
  return value.withPrecision(bits);
}

BigComplex iMinusEndpointApprox(long n, Precision bits) {
  requirePositive(n);
  const Precision work = bits + kGuardBits;
  const BigFloat magnitude =
      gammaOneThird(work) / sqrt(BigFloat(3L, work)) * cbrt(BigFloat(BigRational(6, n), work));
  const BigFloat zero(work);
  switch (n % 4) {
    case 0: return BigComplex(magnitude, zero).withPrecision(bits);
    case 1: return BigComplex(zero, -magnitude).withPrecision(bits);
    case 2: return BigComplex(-magnitude, zero).withPrecision(bits);
    default: return BigComplex(zero, magnitude).withPrecision(bits);
  }
}

BigFloat phaseMinus(const BigFloat& theta, const BigRational& y) { return -(cos(theta) / y) - theta; }
BigFloat phasePlus(const BigFloat& theta, const BigRational& y) { return -(cos(theta) / y) + theta; }

BigFloat phasePlusDerivative(const BigFloat& theta, const BigRational& y) { return (sin(theta) + y) / y; }
BigFloat phaseMinusDerivative(const BigFloat& theta, const BigRational& y) { return (sin(theta) - y) / y; }

StationaryPhaseData phaseData(const BigRational& y, Precision bits) {
  if (y.sign() <= 0 || y > BigRational(1)) throw std::invalid_argument("phaseData needs 0 < y <= 1");
  const Precision work = bits + kGuardBits;
  const BigFloat yf(y, work);
  const BigFloat theta1 = asin(yf);
  const BigFloat halfTurn = pi(work);
  const BigFloat slope = sqrtOneMinusSquare(y, work) / yf;

  StationaryPhaseData data{
      theta1.withPrecision(bits),
      (halfTurn - theta1).withPrecision(bits),
      (-slope - theta1).withPrecision(bits),
      (slope + theta1 - halfTurn).withPrecision(bits),
      slope.withPrecision(bits),
      (-slope).withPrecision(bits),
      std::nullopt};

  if (y == BigRational(1)) {
    const BigFloat top = halfTurn / 2;
    auto [s, c] = sinCos(top);
    data.endpoint = EndpointPhaseData{
        phaseMinus(top, y).withPrecision(bits),
        ((s - y) / y).withPrecision(bits),
        (c / y).withPrecision(bits),
        (-(s / y)).withPrecision(bits)};
  }
  return data;
}

}  // namespace hypasym
