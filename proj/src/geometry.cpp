#include "hypasym/geometry.hpp"

#include <cmath>
#include <stdexcept>

namespace hypasym {
namespace {

BigFloat residualAt(const BigComplex& z, Precision bits) { return abs(abs(phi(z, bits)) - 1); }

// |phi(r e^{i theta})| - 1 along a ray.
struct Ray {
  BigFloat cosTheta;
  BigFloat sinTheta;
  Precision bits;

  BigComplex point(const BigFloat& r) const { return {r * cosTheta, r * sinTheta}; }
  BigFloat excess(const BigFloat& r) const { return abs(phi(point(r), bits)) - 1; }
};

struct Bracket {
  BigFloat lo;
  BigFloat hi;
};

// Scans a log-spaced grid on [lo, hi] and collects cells with a sign change.
std::vector<Bracket> signChanges(const Ray& ray, double lo, double hi, int cells) {
  std::vector<Bracket> found;
  const double step = std::log(hi / lo) / cells;
  BigFloat left(lo, ray.bits);
  int leftSign = ray.excess(left).sign();
  for (int j = 1; j <= cells; ++j) {
    BigFloat right(lo * std::exp(step * j), ray.bits);
    const int rightSign = ray.excess(right).sign();
    if (leftSign != rightSign) found.push_back({left, right});
    left = std::move(right);
    leftSign = rightSign;
  }
  return found;
}

BigFloat bisect(const Ray& ray, Bracket bracket, double tol) {
  const BigFloat target(tol / 4, ray.bits);
  const int loSign = ray.excess(bracket.lo).sign();
  BigFloat mid = (bracket.lo + bracket.hi) / 2;
  for (Precision iteration = 0; iteration < ray.bits; ++iteration) {
    mid = (bracket.lo + bracket.hi) / 2;
    const BigFloat value = ray.excess(mid);
    if (abs(value) <= target) break;
    if (value.sign() == loSign) {
      bracket.lo = mid;
    } else {
      bracket.hi = mid;
    }
  }
  return mid;
}

}  // namespace

std::string regimeName(RegimeTag tag) {
  switch (tag) {
    case RegimeTag::Exterior: return "exterior";
    case RegimeTag::Interior: return "interior";
    case RegimeTag::SegmentInterior: return "segment-interior";
    case RegimeTag::SegmentEndpoint: return "segment-endpoint";
    case RegimeTag::CurveOther: return "curve-other";
  }
  return "unknown";
}

BigComplex mapW(const BigComplex& z, Precision bits) {
  const BigComplex zp = z.withPrecision(bits);
  const BigComplex root = sqrt(zp * zp + 1L);
  BigComplex plus = zp + root;
  BigComplex minus = zp - root;
  const BigFloat plusSize = abs(plus);
  const BigFloat minusSize = abs(minus);
  // On [-i, i] both candidates lie on the unit circle; take the right half.
  if (abs(plusSize - minusSize) <= pow2(16 - bits, bits)) {
    return plus.re() >= minus.re() ? plus : minus;
  }
  return plusSize > minusSize ? plus : minus;
}

BigComplex mapW(const GaussianRational& z, Precision bits) {
  if (z.isImaginary() && abs(z.im()) <= BigRational(1)) {
    const BigFloat y(z.im(), bits);
    return {sqrt(BigFloat(BigRational(1) - z.im() * z.im(), bits)), y};
  }
  return mapW(BigComplex(z, bits), bits);
}

BigComplex phiFromW(const BigComplex& w) { return w * exp(-2L / (w + -1L) + -1L); }

namespace {

BigComplex phiWith(const BigComplex& z, const BigComplex& w) {
  // -1/z - sqrt(z^2+1)/z with sqrt(z^2+1) = w - z on mapW's branch.
  const BigComplex exponent = -((w - z) + 1L) / z;
  return w * exp(exponent);
}

}  // namespace

// The exponent is about -2/z near the origin and z near infinity; its absolute
// error becomes relative error of phi, so widen by log2 of its size.
Precision guardedPrecision(const BigComplex& z, Precision bits) {
  const long scale = std::abs(abs(z).exponent2());
  return bits + 16 + scale;
}

BigComplex phi(const BigComplex& z, Precision bits) {
  if (z.isZero()) throw std::domain_error("phi is singular at z = 0");
  const Precision work = guardedPrecision(z, bits);
  const BigComplex zw = z.withPrecision(std::max(work, z.precision()));
  return phiWith(zw.withPrecision(work), mapW(zw, work)).withPrecision(bits);
}

BigComplex phi(const GaussianRational& z, Precision bits) {
  if (z.isZero()) throw std::domain_error("phi is singular at z = 0");
  const Precision work = guardedPrecision(BigComplex(z, 64), bits);
  return phiWith(BigComplex(z, work), mapW(z, work)).withPrecision(bits);
}

Regime classify(const GaussianRational& z, double tol, Precision bits) {
  if (!(tol > 0)) throw std::invalid_argument("classification tolerance must be positive");
  if (z.isImaginary()) {
    const BigRational height = abs(z.im());
    if (height < BigRational(1)) return {RegimeTag::SegmentInterior, std::nullopt};
    if (height == BigRational(1)) return {RegimeTag::SegmentEndpoint, std::nullopt};
  }
  return classify(BigComplex(z, bits), tol, bits);
}

Regime classify(const BigComplex& z, double tol, Precision bits) {
  if (!(tol > 0)) throw std::invalid_argument("classification tolerance must be positive");
  if (z.re().isZero()) {
    const BigFloat height = abs(z.im());
    if (height < 1.0) return {RegimeTag::SegmentInterior, std::nullopt};
    if (height == 1.0) return {RegimeTag::SegmentEndpoint, std::nullopt};
  }
  BigFloat size = abs(phi(z, bits));
  const BigFloat excess = size - 1;
  RegimeTag tag = RegimeTag::CurveOther;
  if (excess > tol) {
    tag = RegimeTag::Exterior;
  } else if (excess < -tol) {
    tag = RegimeTag::Interior;
  }
  return {tag, std::move(size)};
}

CurveTrace traceCurve(int angleCount, double tol, Precision bits, const TraceOptions& options) {
  if (angleCount < 8) throw std::invalid_argument("traceCurve needs at least 8 rays");
  if (!(tol > 0)) throw std::invalid_argument("trace tolerance must be positive");
  constexpr int kScanCells = 64;

  CurveTrace trace;
  // theta_j = (2j - (N-1))/(N-1) * (pi/2 - guard): symmetric about 0 by construction.
  const BigFloat halfSpan = pi(bits) / 2 - BigFloat(options.guardAngle, bits);
  const long last = angleCount - 1;
  for (long j = 0; j < angleCount; ++j) {
    const BigFloat theta = halfSpan * BigRational(2 * j - last, last);
    auto [s, c] = sinCos(theta);
    const Ray ray{c, s, bits};

    std::vector<Bracket> brackets = signChanges(ray, 1e-3, 10.0, kScanCells);
    if (brackets.empty()) brackets = signChanges(ray, 1e-3, 100.0, kScanCells);
    if (brackets.size() != 1) {
      trace.anomalies.push_back(
          {theta, brackets.empty() ? "no sign change of |phi|-1 in [1e-3, 100]"
                                   : std::to_string(brackets.size()) + " sign changes of |phi|-1"});
      continue;
    }
    const BigFloat r = bisect(ray, brackets.front(), tol);
    BigComplex z = ray.point(r);
    BigFloat residual = residualAt(z, bits);
    trace.points.push_back({theta, std::move(z), std::move(residual)});
  }

  // Segment samples: y = -1, the midpoints of an even grid (skipping 0), and 1.
  const BigFloat up = pi(bits) / 2;
  const int m = std::max(2, options.segmentSamples - 2 + (options.segmentSamples % 2));
  std::vector<BigRational> heights{BigRational(-1)};
  for (int j = 0; j < m; ++j) heights.emplace_back(BigRational(2 * j + 1 - m, m));
  heights.emplace_back(1);
  for (const BigRational& y : heights) {
    const GaussianRational z(BigRational(0), y);
    BigComplex point(z, bits);
    BigFloat residual = abs(abs(phi(z, bits)) - 1);
    trace.points.push_back({y.sign() > 0 ? up : -up, std::move(point), std::move(residual)});
  }
  return trace;
}

BigFloat realAxisCrossing(double tol, Precision bits) {
  if (!(tol > 0)) throw std::invalid_argument("tolerance must be positive");
  const Ray ray{BigFloat(1L, bits), BigFloat(0L, bits), bits};
  Bracket bracket{BigFloat(2L, bits), BigFloat(3L, bits)};
  const int loSign = ray.excess(bracket.lo).sign();
  if (loSign == ray.excess(bracket.hi).sign()) throw std::logic_error("no crossing of C on (2, 3)");
  const BigFloat width(tol, bits);
  for (Precision iteration = 0; iteration < 4 * bits && bracket.hi - bracket.lo > width; ++iteration) {
    const BigFloat mid = (bracket.lo + bracket.hi) / 2;
    const BigFloat value = ray.excess(mid);
    if (value.isZero()) return mid;
    if (value.sign() == loSign) {
      bracket.lo = mid;
    } else {
      bracket.hi = mid;
    }
  }
  return (bracket.lo + bracket.hi) / 2;
}

}  // namespace hypasym
