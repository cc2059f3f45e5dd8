#include "hypasym/quad.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>
#include <string>

#include "hypasym/errors.hpp"
#include "hypasym/hyper.hpp"
#include "hypasym/special.hpp"

namespace hypasym {
namespace {

GaussLegendreRule buildRule(int count, Precision bits) {
  const Precision work = bits + 32;
  const BigFloat tolerance = pow2(-(work - 8), work);
  GaussLegendreRule rule;
  rule.nodes.assign(count, BigFloat(bits));
  rule.weights.assign(count, BigFloat(bits));
  for (int i = 0; i < (count + 1) / 2; ++i) {
    BigFloat x(std::cos(M_PI * (i + 0.75) / (count + 0.5)), work);
    BigFloat derivative(work);
    for (int iteration = 0; iteration < 100; ++iteration) {
      // Legendre recurrence for P_count(x) and P_{count-1}(x).
      BigFloat previous(1L, work);
      BigFloat current = x;
      for (int k = 2; k <= count; ++k) {
        BigFloat next = (x * current * (2 * k - 1) - previous * (k - 1)) / k;
        previous = std::move(current);
        current = std::move(next);
      }
      derivative = (x * current - previous) * count / (x * x - 1);
      const BigFloat step = current / derivative;
      x -= step;
      if (abs(step) <= tolerance) break;
    }
    const BigFloat weight = 2L / ((1L - x * x) * derivative * derivative);
    // Node i counts down from near +1; store mirrored pairs in ascending order.
    rule.nodes[count - 1 - i] = x.withPrecision(bits);
    rule.nodes[i] = (-x).withPrecision(bits);
    rule.weights[count - 1 - i] = weight.withPrecision(bits);
    rule.weights[i] = weight.withPrecision(bits);
  }
  if (count % 2 == 1) rule.nodes[count / 2] = BigFloat(bits);
  return rule;
}

BigComplex pairwiseSum(const std::vector<BigComplex>& values, std::size_t begin, std::size_t end) {
  if (end - begin == 1) return values[begin];
  const std::size_t mid = begin + (end - begin) / 2;
  return pairwiseSum(values, begin, mid) + pairwiseSum(values, mid, end);
}

struct PanelSum {
  BigComplex value;
  BigFloat magnitude;  // sum of |panel| for the rounding floor
};

PanelSum compositeRule(const std::function<BigComplex(const BigFloat&)>& integrand, long panels,
                       const GaussLegendreRule& rule, Precision bits) {
  const BigFloat width = pi(bits) / panels;
  const BigFloat half = width / 2;
  std::vector<BigComplex> sums;
  sums.reserve(static_cast<std::size_t>(panels));
  BigFloat magnitude(bits);
  for (long j = 0; j < panels; ++j) {
    const BigFloat mid = width * j + half;
    BigComplex panel(bits);
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
      panel += integrand(mid + half * rule.nodes[i]) * rule.weights[i];
    }
    panel = panel * half;
    magnitude += abs(panel);
    sums.push_back(std::move(panel));
  }
  return {pairwiseSum(sums, 0, sums.size()), std::move(magnitude)};
}

double oscillationOf(long n, const BigRational& y) { return std::fabs(static_cast<double>(n)) * (1.0 + 1.0 / std::fabs(y.toDouble())); }

void requireValidY(const BigRational& y) {
  if (y.isZero() || abs(y) > BigRational(1)) throw std::invalid_argument("need y != 0 and |y| <= 1");
}

}  // namespace

std::shared_ptr<const GaussLegendreRule> gaussLegendre(int count, Precision bits) {
  if (count < 1) throw std::invalid_argument("Gauss-Legendre rule needs at least one node");
  static std::mutex mutex;
  static std::map<std::pair<int, Precision>, std::shared_ptr<const GaussLegendreRule>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto& slot = cache[{count, bits}];
  if (!slot) slot = std::make_shared<const GaussLegendreRule>(buildRule(count, bits));
  return slot;
}

long effectivePanelCount(const QuadratureConfig& cfg, double oscillation) {
  const long automatic = std::max(32L, static_cast<long>(std::ceil(4 * oscillation)));
  return std::max(cfg.panelCount, automatic);
}

QuadratureResult integrateTheta(const std::function<BigComplex(const BigFloat&)>& integrand,
                                double oscillation, const QuadratureConfig& cfg) {
  const Precision bits = cfg.precisionBits;
  const auto rule = gaussLegendre(cfg.nodesPerPanel, bits);
  const BigFloat target = pow2(-bits / 2, bits);

  long panels = effectivePanelCount(cfg, oscillation);
  PanelSum coarse = compositeRule(integrand, panels, *rule, bits);
  BigFloat lastError(bits);
  for (int attempt = 0; attempt <= cfg.refinementLimit; ++attempt) {
    panels *= 2;
    PanelSum fine = compositeRule(integrand, panels, *rule, bits);
    const BigFloat floor = fine.magnitude * pow2(-(bits - 12), bits);
    lastError = max(abs(fine.value - coarse.value), floor);
    if (lastError <= target) return {std::move(fine.value), std::move(lastError), panels};
    coarse = std::move(fine);
  }
  throw ConvergenceError("quadrature did not reach 2^-" + std::to_string(bits / 2) + " after " +
                         std::to_string(cfg.refinementLimit) + " doublings (last estimate " +
                         lastError.toString(6) + ")");
}

QuadratureResult chebIntegral(long n, const BigRational& y, const QuadratureConfig& cfg) {
  requireValidY(y);
  const Precision bits = cfg.precisionBits;
  const BigFloat speed(BigRational(n) / y, bits);
  const auto integrand = [&](const BigFloat& theta) {
    auto [s, c] = sinCos(theta);
    const BigComplex wave = expUnit(-(speed * c), bits);
    return wave * (cos(theta * n) * s);
  };
  return integrateTheta(integrand, oscillationOf(n, y), cfg);
}

std::pair<QuadratureResult, QuadratureResult> iPlusMinus(long n, const BigRational& y, const QuadratureConfig& cfg) {
  requireValidY(y);
  const Precision bits = cfg.precisionBits;
  const BigFloat speed(BigRational(n) / y, bits);
  const auto withSign = [&](long sign) {
    return [&speed, n, sign, bits](const BigFloat& theta) {
      auto [s, c] = sinCos(theta);
      return expUnit(theta * (sign * n) - speed * c, bits) * s;
    };
  };
  QuadratureResult plus = integrateTheta(withSign(1), oscillationOf(n, y), cfg);
  QuadratureResult minus = integrateTheta(withSign(-1), oscillationOf(n, y), cfg);
  return {std::move(plus), std::move(minus)};
}

QuadratureResult jacobiFourierLHS(long n, const BigRational& alpha, const BigRational& beta,
                                  const BigFloat& lambda, const QuadratureConfig& cfg) {
  if (alpha <= BigRational(-1) || beta <= BigRational(-1)) {
    throw std::invalid_argument("Jacobi parameters must exceed -1");
  }
  const Precision bits = cfg.precisionBits;
  const BigFloat rate = lambda.withPrecision(std::max(bits, lambda.precision())).withPrecision(bits);
  const auto integrand = [&](const BigFloat& theta) {
    auto [s, c] = sinCos(theta);
    return expUnit(rate * c, bits) * (jacobiP(n, alpha, beta, c) * s);
  };
  return integrateTheta(integrand, static_cast<double>(n) + std::fabs(lambda.toDouble()), cfg);
}

BigComplex jacobiFourierRHS(long n, const BigRational& alpha, const BigRational& beta, const BigFloat& lambda,
                   Precision bits) {
  if (lambda.isZero()) throw std::invalid_argument("the closed form is undefined at lambda = 0");
  if (n < 0) throw std::invalid_argument("n must be non-negative");
  const Precision work = bits + 32;
  const BigFloat rate = lambda.withPrecision(std::max(work, lambda.precision())).withPrecision(work);
  const auto un = static_cast<unsigned long>(n);

  // 1/(2 i lambda) = -i/(2 lambda)
  const BigFloat quarter = BigFloat(1L, work) / (rate * 2);
  const std::array<BigRational, 3> upper{alpha + beta + BigRational(n + 1), BigRational(-n), BigRational(1)};
  const Terminating3F1Spec lowerBeta{upper, beta + 1, BigComplex(BigFloat(work), quarter), n};
  const Terminating3F1Spec lowerAlpha{upper, alpha + 1, BigComplex(BigFloat(work), -quarter), n};
  const BigComplex seriesBeta = f3F1Float(lowerBeta, work).value;
  const BigComplex seriesAlpha = f3F1Float(lowerAlpha, work).value;

  // 1/(i lambda) = -i/lambda
  const BigComplex inverse(BigFloat(work), -(BigFloat(1L, work) / rate));
  const BigRational nFactorial(factorial(un));
  const BigComplex rotation = expUnit(rate, work);

  BigComplex first = rotation.conj() * inverse * seriesBeta * (pochhammer(beta + 1, un) / nFactorial);
  if (n % 2 == 0) first = -first;
  const BigComplex second = rotation * inverse * seriesAlpha * (pochhammer(alpha + 1, un) / nFactorial);
  return (first + second).withPrecision(bits);
}

}  // namespace hypasym
