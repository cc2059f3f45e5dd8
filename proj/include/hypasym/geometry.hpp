#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hypasym/bigfloat.hpp"
#include "hypasym/rational.hpp"

namespace hypasym {

enum class RegimeTag { Exterior, Interior, SegmentInterior, SegmentEndpoint, CurveOther };

std::string regimeName(RegimeTag tag);

/// Position of a point relative to the curve |phi(z)| = 1.
struct Regime {
  RegimeTag tag;
  /// |phi(z)|; empty for points of the segment [-i, i].
  std::optional<BigFloat> absPhi;
};

inline constexpr double kDefaultClassifyTolerance = 1e-12;

/// Inverse Joukowsky map w = z + sqrt(z^2 + 1): |w| > 1 off [-i, i], and
/// w = iy + sqrt(1 - y^2) on it.
BigComplex mapW(const BigComplex& z, Precision bits);
BigComplex mapW(const GaussianRational& z, Precision bits);

/// phi(z) = w exp(-1/z - sqrt(z^2+1)/z), sharing mapW's square-root branch.
BigComplex phi(const BigComplex& z, Precision bits);
BigComplex phi(const GaussianRational& z, Precision bits);
/// The equivalent form w exp(-2/(w - 1) - 1).
BigComplex phiFromW(const BigComplex& w);

/// Segment membership is decided exactly for Gaussian rationals.
Regime classify(const GaussianRational& z, double tol, Precision bits);
Regime classify(const BigComplex& z, double tol, Precision bits);

struct CurvePoint {
  BigFloat theta;
  BigComplex z;
  /// | |phi(z)| - 1 |
  BigFloat residual;
};

struct RayAnomaly {
  BigFloat theta;
  std::string reason;
};

struct CurveTrace {
  std::vector<CurvePoint> points;
  std::vector<RayAnomaly> anomalies;
};

struct TraceOptions {
  /// Rays closer than this (radians) to +-pi/2 are skipped; C has corners at +-i.
  double guardAngle = 1e-2;
  /// Segment samples appended after the rays.
  int segmentSamples = 64;
};

/// Traces C: one bisection per ray from the origin at angles in
/// (-pi/2, pi/2), then the segment [-i, i]. Rays with no crossing or more
/// than one crossing are reported as anomalies instead of points.
CurveTrace traceCurve(int angleCount, double tol, Precision bits, const TraceOptions& options = {});

/// Root of |phi(x)| = 1 on (2, 3), to absolute tolerance `tol`.
BigFloat realAxisCrossing(double tol, Precision bits);

}  // namespace hypasym
