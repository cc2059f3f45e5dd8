#pragma once

#include <optional>

#include "hypasym/bigfloat.hpp"
#include "hypasym/geometry.hpp"
#include "hypasym/hyper.hpp"
#include "hypasym/rational.hpp"

namespace hypasym {

struct AsymptoticResult {
  BigComplex value;
  RegimeTag regime;
  /// Power of n in the leading behaviour (ignoring exponential factors).
  BigRational leadingOrder;
};

/// -alpha (interior), alpha - 1/2 (exterior), 1/2 (segment), 2/3 (endpoint);
/// throws for CurveOther.
BigRational leadingOrder(RegimeTag regime, long alpha);

/// (-1)^n / Gamma(alpha) n^(alpha-1/2) sqrt(pi/2) ((1 + s)/z)^(alpha-1) (s/z)^(-1/2) phi(z)^n
/// with s = sqrt(z^2 + 1) on mapW's branch. Throws RegimeError unless z is exterior.
AsymptoticResult exteriorApprox(const PolyParams& params, const BigComplex& z, Precision bits,
                                double tol = kDefaultClassifyTolerance);
AsymptoticResult exteriorApprox(const PolyParams& params, const GaussianRational& z, Precision bits,
                                double tol = kDefaultClassifyTolerance);

/// (2/n)^alpha Gamma(alpha + 1/2)/sqrt(pi) (-1/z)^alpha. Throws RegimeError
/// unless z is interior.
AsymptoticResult interiorApprox(const PolyParams& params, const BigComplex& z, Precision bits,
                                double tol = kDefaultClassifyTolerance);
AsymptoticResult interiorApprox(const PolyParams& params, const GaussianRational& z, Precision bits,
                                double tol = kDefaultClassifyTolerance);

/// (n pi y / (2 sqrt(1 - y^2)))^(1/2)
BigFloat segmentAmplitude(long n, const BigRational& y, Precision bits);
/// n (sqrt(1 - y^2)/y + asin y) - pi/4
BigFloat segmentPhase(long n, const BigRational& y, Precision bits);
/// cos(segmentPhase) for even n, sin(segmentPhase) for odd n.
BigFloat segmentOscillation(long n, const BigRational& y, Precision bits);

/// -segmentAmplitude * segmentOscillation; approximates targetQuantity(n, y)
/// for 0 < y < 1.
BigFloat segmentApprox(long n, const BigRational& y, Precision bits);

/// 6^(1/3) Gamma(1/3) / (4 sqrt(3) y) at y = 1.
BigFloat endpointCoefficient(Precision bits);

/// Signed endpointCoefficient * n^(2/3); approximates targetQuantity(n, 1).
BigFloat endpointApprox(long n, Precision bits);

/// Two-stationary-point approximation of I_n^- for 0 < y < 1.
BigComplex iMinusApprox(long n, const BigRational& y, Precision bits);
/// 2y (2 pi y / (n sqrt(1 - y^2)))^(1/2), the modulus envelope of iMinusApprox.
BigFloat iMinusEnvelope(long n, const BigRational& y, Precision bits);

/// Gamma(1/3) (-i)^n / sqrt(3) (6/n)^(1/3): I_n^- at y = 1.
BigComplex iMinusEndpointApprox(long n, Precision bits);

/// phi_-(theta) = -cos(theta)/y - theta and phi_+(theta) = -cos(theta)/y + theta.
BigFloat phaseMinus(const BigFloat& theta, const BigRational& y);
BigFloat phasePlus(const BigFloat& theta, const BigRational& y);
/// phi_+-'(theta) = (sin(theta) +- y)/y
BigFloat phasePlusDerivative(const BigFloat& theta, const BigRational& y);
BigFloat phaseMinusDerivative(const BigFloat& theta, const BigRational& y);

struct EndpointPhaseData {
  BigFloat phase;   // phi_-(pi/2)
  BigFloat first;   // phi_-'(pi/2)
  BigFloat second;  // phi_-''(pi/2)
  BigFloat third;   // phi_-'''(pi/2)
};

struct StationaryPhaseData {
  BigFloat theta1;  // asin y
  BigFloat theta2;  // pi - asin y
  BigFloat phaseAt1;
  BigFloat phaseAt2;
  BigFloat curvatureAt1;  //  sqrt(1 - y^2)/y
  BigFloat curvatureAt2;  // -sqrt(1 - y^2)/y
  /// Present only for y = 1, where the two points coalesce at pi/2.
  std::optional<EndpointPhaseData> endpoint;
};

StationaryPhaseData phaseData(const BigRational& y, Precision bits);

}  // namespace hypasym
