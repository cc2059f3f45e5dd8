// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "hypasym/asym.hpp"
#include "hypasym/geometry.hpp"
#include "hypasym/hyper.hpp"
#include "hypasym/quad.hpp"
#include "hypasym/special.hpp"

using namespace hypasym;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

std::string fmt(const BigFloat& x, int digits = 4) { return x.toString(digits); }
std::string fmt(double x) {
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.4g", x);
  return buffer;
}

double median(std::vector<double> values) {
  std::sort(values.begin(), values.end());
  const std::size_t m = values.size() / 2;
  return values.size() % 2 ? values[m] : 0.5 * (values[m - 1] + values[m]);
}

// Least-squares slope of log(value) against log(n).
double logLogSlope(const std::vector<long>& ns, const std::vector<double>& values) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double k = static_cast<double>(ns.size());
  for (std::size_t i = 0; i < ns.size(); ++i) {
    const double x = std::log(static_cast<double>(ns[i])), y = std::log(values[i]);
    sx += x, sy += y, sxx += x * x, sxy += x * y;
  }
  return (k * sxy - sx * sy) / (k * sxx - sx * sx);
}

const std::vector<BigRational> kYs{BigRational(1, 4), BigRational(1, 2), BigRational(3, 4), BigRational(1)};

Outcome masterIdentity() {
  const Precision p = 256;
  QuadratureConfig cfg;
  cfg.precisionBits = p;
  BigFloat worst(p);
  std::string where;
  for (long n : {5L, 10L, 20L, 40L, 80L}) {
    for (const auto& y : kYs) {
      const QuadratureResult integral = chebIntegral(n, y, cfg);
      const BigComplex scale(BigFloat(p), BigFloat(BigRational(n) / y, p));
      const BigFloat residual = abs(computeS(n, y, p) + scale * integral.value);
      if (residual >= worst) worst = residual, where = "n=" + std::to_string(n) + " y=" + y.toString();
    }
  }
  return {worst <= BigFloat(1e-20, p), "max |S + (in/y) I_n| = " + fmt(worst) + " at " + where + " (bound 1e-20)"};
}

Outcome jacobiTransformIdentity() {
  const Precision p = 128;
  QuadratureConfig cfg;
  cfg.precisionBits = p;
  const std::vector<std::pair<BigRational, BigRational>> params{
      {BigRational(0), BigRational(0)}, {BigRational(1, 2), BigRational(-1, 2)}, {BigRational(1), BigRational(2)}};
  BigFloat worst(p);
  std::string where;
  int cases = 0;
  for (const auto& [a, b] : params) {
    for (long n = 0; n <= 10; ++n) {
      for (long lambda : {3L, 10L}) {
        const BigFloat l(lambda, p);
        const BigFloat diff = abs(jacobiFourierLHS(n, a, b, l, cfg).value - jacobiFourierRHS(n, a, b, l, p));
        ++cases;
        if (diff >= worst) {
          worst = diff;
          where = "(" + a.toString() + "," + b.toString() + ") n=" + std::to_string(n) + " lambda=" + std::to_string(lambda);
        }
      }
    }
  }
  return {worst <= BigFloat(1e-15, p),
          std::to_string(cases) + " cases, max |LHS - RHS| = " + fmt(worst) + " at " + where + " (bound 1e-15)"};
}

Outcome interiorRegime() {
  const Precision p = 128;
  const GaussianRational one(1);
  const Regime regime = classify(one, kDefaultClassifyTolerance, p);
  bool pass = regime.tag == RegimeTag::Interior;
  std::ostringstream detail;
  detail << "|phi(1)| = " << fmt(*regime.absPhi, 6) << ";";
  for (long alpha : {1L, 2L}) {
    std::vector<double> dev;
    detail << " alpha=" << alpha << " ratios";
    for (long n : {100L, 200L, 400L, 800L}) {
      const PolyParams params(n, alpha);
      const BigComplex exact(f3F1Exact(params, one), p);
      const BigFloat ratio = (exact / interiorApprox(params, one, p).value).re();
      dev.push_back(std::fabs(ratio.toDouble() - 1));
      detail << " " << n << ":" << fmt(ratio, 6);
    }
    const bool at200 = dev[1] <= 0.05, at800 = dev[3] <= 0.02;
    const bool monotone = std::is_sorted(dev.rbegin(), dev.rend()) && std::adjacent_find(dev.begin(), dev.end()) == dev.end();
    if (!at200) detail << " [n=200 outside 5%]";
    if (!at800) detail << " [n=800 outside 2%]";
    if (!monotone) detail << " [not monotone]";
    pass = pass && at200 && at800 && monotone;
    detail << ";";
  }
  return {pass, detail.str()};
}

Outcome exteriorRegime() {
  const Precision p = 128;
  const GaussianRational three(3);
  const Regime regime = classify(three, kDefaultClassifyTolerance, p);
  const PolyParams params(200, 1);
  const BigComplex exact(f3F1Exact(params, three), p);
  const BigComplex ratio = exact / exteriorApprox(params, three, p).value;
  const double dev = abs(ratio - BigComplex(1L, 0L, p)).toDouble();
  return {regime.tag == RegimeTag::Exterior && dev <= 0.05,
          "|phi(3)| = " + fmt(*regime.absPhi, 6) + ", n=200 ratio = " + fmt(ratio.re(), 8) + " (|ratio - 1| = " +
              fmt(dev) + ", bound 0.05)"};
}

Outcome segmentAsymptotics() {
  const Precision p = 128;
  const BigRational y(1, 2);
  std::vector<double> low, mid, high;
  double worstSafe = 0;
  int safeCount = 0;
  for (long n = 50; n <= 400; ++n) {
    const BigFloat exact = targetQuantity(n, y, p);
    const BigFloat approx = segmentApprox(n, y, p);
    const double scaled = abs(exact - approx).toDouble() / std::sqrt(static_cast<double>(n));
    (n < 100 ? low : n < 200 ? mid : high).push_back(scaled);
    if (n >= 300 && abs(segmentOscillation(n, y, p)) >= 0.5) {
      ++safeCount;
      worstSafe = std::max(worstSafe, std::fabs((exact / approx).toDouble() - 1));
    }
  }
  const double m1 = median(low), m2 = median(mid), m3 = median(high);
  const bool decreasing = m1 > m2 && m2 > m3;
  const bool safe = safeCount > 0 && worstSafe <= 0.1;
  return {decreasing && safe, "median absError/sqrt(n) over [50,100) [100,200) [200,400]: " + fmt(m1) + " " + fmt(m2) +
                                  " " + fmt(m3) + "; " + std::to_string(safeCount) +
                                  " phase-safe n >= 300, max |ratio - 1| = " + fmt(worstSafe) + " (bound 0.1)"};
}

Outcome endpointAsymptotics() {
  const Precision p = 128;
  const BigFloat coefficient = endpointCoefficient(p);
  const std::vector<long> ns{250, 500, 1000};
  std::vector<double> dev;
  std::string detail = "coefficient " + fmt(coefficient, 8) + "; |q_n/c - 1|:";
  for (long n : ns) {
    const BigFloat scaled = abs(targetQuantity(n, BigRational(1), p)) / pow(BigFloat(n, p), BigFloat(BigRational(2, 3), p));
    dev.push_back(std::fabs((scaled / coefficient).toDouble() - 1));
    detail += " " + std::to_string(n) + ":" + fmt(dev.back());
  }
  const double slope = logLogSlope(ns, dev);
  detail += "; log-log slope " + fmt(slope) + " (improving if < 0; bound 0.1 at n=1000)";
  return {dev.back() <= 0.1 && slope < 0, detail};
}

Outcome iPlusDecay() {
  QuadratureConfig cfg;
  cfg.precisionBits = 128;
  const BigRational y(1, 2);
  std::vector<double> scaled;
  std::string detail = "n|I_n^+|:";
  for (long n : {50L, 100L, 200L, 400L}) {
    const auto [plus, minus] = iPlusMinus(n, y, cfg);
    scaled.push_back(abs(plus.value).toDouble() * static_cast<double>(n));
    detail += " " + std::to_string(n) + ":" + fmt(scaled.back());
  }
  const bool bounded = std::is_sorted(scaled.rbegin(), scaled.rend());
  return {bounded, detail + " (non-increasing required)"};
}

Outcome stationaryPhase() {
  QuadratureConfig cfg;
  cfg.precisionBits = 128;
  const BigRational y(1, 2);
  std::vector<double> rel;
  std::string detail = "|I_n^- - approx|/envelope:";
  for (long n : {200L, 400L, 800L}) {
    const auto [plus, minus] = iPlusMinus(n, y, cfg);
    const BigFloat error = abs(minus.value - iMinusApprox(n, y, 128)) / iMinusEnvelope(n, y, 128);
    rel.push_back(error.toDouble());
    detail += " " + std::to_string(n) + ":" + fmt(rel.back());
  }
  const bool decreasing = rel[0] > rel[1] && rel[1] > rel[2];
  return {rel[0] <= 0.2 && decreasing, detail + " (bound 0.2 at n=200, decreasing)"};
}

Outcome geometry() {
  const Precision p = 128;
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> coord(-4, 4);
  BigFloat worst(p);
  for (int i = 0; i < 100; ++i) {
    const BigComplex z(BigFloat(coord(rng), p), BigFloat(coord(rng), p));
    const BigComplex w = mapW(z, p);
    const BigComplex back = (w - BigComplex(1L, 0L, p) / w) / BigFloat(2L, p);
    worst = max(worst, abs(back - z));
  }
  const bool roundTrip = worst <= pow2(-120, p);

  const double tol = 1e-12;
  const CurveTrace trace = traceCurve(64, tol, p);
  BigFloat worstResidual(p);
  int unpaired = 0;
  for (const auto& point : trace.points) {
    worstResidual = max(worstResidual, point.residual);
    const bool paired = std::any_of(trace.points.begin(), trace.points.end(), [&](const CurvePoint& other) {
      return abs(other.z - point.z.conj()) <= BigFloat(1e-10, p);
    });
    unpaired += paired ? 0 : 1;
  }
  const BigFloat crossing = realAxisCrossing(tol, p);
  const bool traced = worstResidual <= BigFloat(1e-10, p) && unpaired == 0 && trace.anomalies.empty();
  const bool bracketed = crossing > 2 && crossing < 3;
  return {roundTrip && traced && bracketed,
          "round-trip max error " + fmt(worst) + " (bound 2^-120); " + std::to_string(trace.points.size()) +
              " traced points, max residual " + fmt(worstResidual) + ", " + std::to_string(unpaired) +
              " without conjugate, " + std::to_string(trace.anomalies.size()) + " anomalies; crossing " +
              fmt(crossing, 10)};
}

Outcome exactSuite() {
  bool parity = true;
  for (const auto& y : kYs) {
    for (long n = 1; n <= 60; ++n) {
      // F_n(-iy) = conj F_n(iy) exactly, which makes S = 2i Im(...) or 2 Re(...).
      const PolyParams params(n, 1);
      parity = parity && f3F1Exact(params, GaussianRational(BigRational(0), -y)) ==
                             f3F1Exact(params, GaussianRational(BigRational(0), y)).conj();
      const BigComplex s = computeS(n, y, 128);
      parity = parity && (n % 2 == 0 ? s.re().isZero() : s.im().isZero());
    }
  }

  bool bridge = true;
  const BigRational half(-1, 2);
  std::mt19937_64 rng(40);
  std::uniform_int_distribution<long> num(-997, 997), den(1, 997);
  for (int trial = 0; trial < 10; ++trial) {
    const BigRational x(num(rng), den(rng));
    for (long n = 0; n <= 40; ++n) {
      const auto un = static_cast<unsigned long>(n);
      bridge = bridge && chebyshevT(n, x) * pochhammer(BigRational(1, 2), un) ==
                             BigRational(factorial(un)) * jacobiP(n, half, half, x);
    }
  }

  bool leading = true;
  for (long alpha : {1L, 2L}) {
    for (long n = 1; n <= 60; ++n) {
      const auto un = static_cast<unsigned long>(n);
      std::vector<BigRational> values;
      for (long j = 0; j <= n; ++j) values.push_back(f3F1Exact(PolyParams(n, alpha), BigRational(j)).re());
      for (long order = 0; order < n; ++order) {
        for (long j = 0; j + order < n; ++j) values[j] = values[j + 1] - values[j];
      }
      const BigRational expected = pochhammer(BigRational(-n), un) * pochhammer(BigRational(n), un) *
                                   pochhammer(BigRational(alpha), un) /
                                   (pochhammer(BigRational(1, 2), un) * BigRational(factorial(un)) *
                                    pow(BigRational(2 * n), un));
      leading = leading && values[0] / BigRational(factorial(un)) == expected;
    }
  }
  auto word = [](bool ok) { return ok ? std::string("exact") : std::string("MISMATCH"); };
  return {parity && bridge && leading, "S parity (n <= 60, 4 values of y): " + word(parity) +
                                           "; Chebyshev-Jacobi bridge (n <= 40): " + word(bridge) +
                                           "; leading coefficient (n <= 60, alpha 1,2): " + word(leading)};
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    double budgetSeconds;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {"master identity", 120, masterIdentity},
      {"Jacobi transform identity", 60, jacobiTransformIdentity},
      {"interior regime", 120, interiorRegime},
      {"exterior regime", 180, exteriorRegime},
      {"segment asymptotics", 600, segmentAsymptotics},
      {"endpoint asymptotics", 180, endpointAsymptotics},
      {"I_n^+ decay", 600, iPlusDecay},
      {"stationary-phase approximation of I_n^-", 600, stationaryPhase},
      {"geometry", 600, geometry},
      {"exact arithmetic", 60, exactSuite},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome{false, ""};
    try {
      outcome = criteria[i].run();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (seconds > criteria[i].budgetSeconds) {
      outcome.pass = false;
      outcome.detail += " [over time budget]";
    }
    failures += outcome.pass ? 0 : 1;
    std::printf("%s [%zu] %s: %s (%.1f s)\n", outcome.pass ? "PASS" : "FAIL", i + 1, criteria[i].name,
                outcome.detail.c_str(), seconds);
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
