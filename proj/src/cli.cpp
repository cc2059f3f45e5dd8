#include "hypasym/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <sstream>

#include "hypasym/asym.hpp"
#include "hypasym/errors.hpp"
#include "hypasym/geometry.hpp"
#include "hypasym/hyper.hpp"
#include "hypasym/quad.hpp"

namespace hypasym {
namespace {

struct CommonOptions {
  Precision bits = 128;
  double tol = 1e-12;
  std::string format = "csv";
  int digits = 30;
  Precision ceiling = kDefaultPrecisionCeiling;
};

class Table {
 public:
  explicit Table(std::vector<std::string> columns) : columns_(std::move(columns)) {}

  void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }

  void write(std::ostream& out, const std::string& format) const {
    if (format == "json") {
      nlohmann::ordered_json array = nlohmann::ordered_json::array();
      for (const auto& row : rows_) {
        nlohmann::ordered_json object;
        for (std::size_t i = 0; i < columns_.size(); ++i) object[columns_[i]] = row[i];
        array.push_back(std::move(object));
      }
      out << array.dump(2) << '\n';
      return;
    }
    writeLine(out, columns_);
    for (const auto& row : rows_) writeLine(out, row);
  }

 private:
  static void writeLine(std::ostream& out, const std::vector<std::string>& fields) {
    for (std::size_t i = 0; i < fields.size(); ++i) out << (i ? "," : "") << fields[i];
    out << '\n';
  }

  std::vector<std::string> columns_;
  std::vector<std::vector<std::string>> rows_;
};

void addCommon(CLI::App* cmd, CommonOptions& opts) {
  cmd->add_option("--precision-bits", opts.bits, "working precision in bits")->check(CLI::Range(16, 1 << 20));
  cmd->add_option("--tol", opts.tol, "classification / tracing tolerance")->check(CLI::PositiveNumber);
  cmd->add_option("--format", opts.format, "output format")->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--digits", opts.digits, "significant digits printed")->check(CLI::Range(1, 100000));
  cmd->add_option("--precision-ceiling", opts.ceiling, "largest working precision the series may use")
      ->check(CLI::Range(16, 1 << 24));
}

// Digits that the working precision can actually carry.
int printable(const CommonOptions& opts) {
  return std::max(1, std::min(opts.digits, static_cast<int>(opts.bits * 0.30103) + 1));
}

std::string complexLiteral(const BigComplex& z, int digits) {
  std::string im = z.im().toString(digits);
  if (im.front() != '-') im.insert(im.begin(), '+');
  return z.re().toString(digits) + im + "i";
}

// F_n(z) with the exact path when z is a Gaussian rational.
struct PolyValue {
  BigComplex value;
  std::optional<GaussianRational> exact;
};

std::optional<GaussianRational> tryGaussian(const std::string& text) {
  try {
    return GaussianRational::parse(text);
  } catch (const ParseError&) {
    return std::nullopt;
  }
}

PolyValue evaluatePoly(const PolyParams& params, const std::string& literal, Precision bits, Precision ceiling) {
  if (auto exact = tryGaussian(literal)) {
    const GaussianRational value = f3F1Exact(params, *exact);
    return {BigComplex(value, bits), value};
  }
  const BigComplex z = BigComplex::parse(literal, bits);
  if (params.n == 0) return {BigComplex(1L, 0L, bits), std::nullopt};
  const Terminating3F1Spec spec{
      {BigRational(-params.n), BigRational(params.n), BigRational(params.alpha)},
      BigRational(1, 2),
      z / BigFloat(2 * params.n, bits + 32),
      params.n};
  return {f3F1Float(spec, bits, ceiling).value, std::nullopt};
}

int cmdEval(const CommonOptions& opts, long n, long alpha, const std::string& z, std::ostream& out) {
  const PolyParams params(n, alpha);
  const PolyValue result = evaluatePoly(params, z, opts.bits, opts.ceiling);
  const int digits = printable(opts);
  Table table({"n", "alpha", "z", "exact", "re", "im"});
  table.add({std::to_string(n), std::to_string(alpha), z, result.exact ? result.exact->toString() : "n/a",
             result.value.re().toString(digits), result.value.im().toString(digits)});
  table.write(out, opts.format);
  return kExitOk;
}

int cmdClassify(const CommonOptions& opts, const std::string& literal, std::ostream& out) {
  const auto exact = tryGaussian(literal);
  const Regime regime = exact ? classify(*exact, opts.tol, opts.bits)
                              : classify(BigComplex::parse(literal, opts.bits), opts.tol, opts.bits);
  Table table({"z", "regime", "abs_phi"});
  table.add({literal, regimeName(regime.tag), regime.absPhi ? regime.absPhi->toString(printable(opts)) : "n/a"});
  table.write(out, opts.format);
  return kExitOk;
}

struct ConvergeInputs {
  std::string regime;
  std::string nRange;
  std::optional<std::string> y;
  std::optional<std::string> z;
  long alpha = 1;
};

[[noreturn]] void mismatch(const std::string& message) { throw RegimeError(message); }

int cmdConverge(const CommonOptions& opts, const ConvergeInputs& in, std::ostream& out) {
  const std::vector<long> ns = NRange::parse(in.nRange).values();
  const int digits = printable(opts);
  const Precision bits = opts.bits;

  std::optional<BigRational> y;
  if (in.regime == "segment" || in.regime == "endpoint") {
    y = in.y ? BigRational::parse(*in.y) : BigRational(in.regime == "endpoint" ? 1 : 0);
    if (!in.y && in.regime == "segment") throw ParseError("--y is required for the segment regime");
    const Regime regime = classify(GaussianRational(BigRational(0), *y), opts.tol, bits);
    const RegimeTag wanted = in.regime == "segment" ? RegimeTag::SegmentInterior : RegimeTag::SegmentEndpoint;
    if (regime.tag != wanted || y->sign() <= 0) {
      mismatch("y = " + y->toString() + " is " + regimeName(regime.tag) + ", not the positive " + in.regime +
               " point");
    }
  } else if (!in.z) {
    throw ParseError("--z is required for the " + in.regime + " regime");
  }

  Table table({"n", "exact_re", "exact_im", "approx_re", "approx_im", "abs_error", "ratio"});
  for (long n : ns) {
    BigComplex exact(bits);
    BigComplex approx(bits);
    BigFloat amplitude(bits);
    if (y) {
      exact = BigComplex(targetQuantity(n, *y, bits));
      if (in.regime == "segment") {
        approx = BigComplex(segmentApprox(n, *y, bits));
        amplitude = segmentAmplitude(n, *y, bits);
      } else {
        approx = BigComplex(endpointApprox(n, bits));
        amplitude = abs(approx.re());
      }
    } else {
      const PolyParams params(n, in.alpha);
      exact = evaluatePoly(params, *in.z, bits, opts.ceiling).value;
      const auto gaussian = tryGaussian(*in.z);
      const bool exterior = in.regime == "exterior";
      AsymptoticResult result =
          gaussian ? (exterior ? exteriorApprox(params, *gaussian, bits, opts.tol)
                               : interiorApprox(params, *gaussian, bits, opts.tol))
                   : (exterior ? exteriorApprox(params, BigComplex::parse(*in.z, bits), bits, opts.tol)
                               : interiorApprox(params, BigComplex::parse(*in.z, bits), bits, opts.tol));
      approx = result.value;
      amplitude = abs(approx);
    }

    const std::string exactRe = exact.re().toString(digits), exactIm = exact.im().toString(digits);
    const std::string approxRe = approx.re().toString(digits), approxIm = approx.im().toString(digits);
    // Error from the printed fields so that the row is self-consistent.
    const BigComplex printedExact(BigFloat::parse(exactRe, bits), BigFloat::parse(exactIm, bits));
    const BigComplex printedApprox(BigFloat::parse(approxRe, bits), BigFloat::parse(approxIm, bits));
    const std::string absError = abs(printedExact - printedApprox).toString(digits);

    std::string ratio = "n/a";
    const BigFloat floor = amplitude * pow(BigFloat(10L, bits), -static_cast<long>(opts.digits / 2));
    if (!abs(approx).isZero() && abs(approx) >= floor) {
      const BigComplex q = exact / approx;
      ratio = q.im().isZero() ? q.re().toString(digits) : complexLiteral(q, digits);
    }
    table.add({std::to_string(n), exactRe, exactIm, approxRe, approxIm, absError, ratio});
  }
  table.write(out, opts.format);
  return kExitOk;
}

int cmdIdentity(const CommonOptions& opts, long n, const std::string& yText, const std::string& thresholdText,
                std::ostream& out) {
  const BigRational y = BigRational::parse(yText);
  if (y.isZero()) throw ParseError("y must be nonzero");
  const Precision bits = opts.bits;
  const BigFloat threshold = BigFloat::parse(thresholdText, std::max<Precision>(bits, 64));

  QuadratureConfig cfg;
  cfg.precisionBits = bits;
  const QuadratureResult integral = chebIntegral(n, y, cfg);
  const BigComplex s = computeS(n, y, bits);
  const BigComplex scale(BigFloat(bits), BigFloat(BigRational(n) / y, bits));
  const BigFloat residual = abs(s + scale * integral.value);
  const bool pass = residual <= threshold;

  const int digits = std::min(printable(opts), 20);
  Table table({"n", "y", "residual", "quadrature_error", "threshold", "status"});
  table.add({std::to_string(n), y.toString(), residual.toString(digits), integral.errorEstimate.toString(digits),
             thresholdText, pass ? "pass" : "fail"});
  table.write(out, opts.format);
  return pass ? kExitOk : kExitIdentityFail;
}

int cmdTrace(const CommonOptions& opts, int angles, const std::string& path, std::ostream& out, std::ostream& err) {
  const CurveTrace trace = traceCurve(angles, opts.tol, opts.bits);
  const int digits = printable(opts);
  Table table({"theta", "re", "im", "residual"});
  for (const auto& point : trace.points) {
    table.add({point.theta.toString(digits), point.z.re().toString(digits), point.z.im().toString(digits),
               point.residual.toString(std::min(digits, 6))});
  }
  for (const auto& anomaly : trace.anomalies) {
    err << "warning: ray at theta=" << anomaly.theta.toString(12) << ": " << anomaly.reason << '\n';
  }
  if (path.empty() || path == "-") {
    table.write(out, opts.format);
    return kExitOk;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw ParseError("cannot open output file '" + path + "'");
  table.write(file, opts.format);
  file.close();
  if (!file) throw std::runtime_error("failed writing '" + path + "'");
  return kExitOk;
}

}  // namespace

NRange NRange::parse(const std::string& text) {
  NRange range;
  const auto first = text.find(':');
  const auto second = first == std::string::npos ? std::string::npos : text.find(':', first + 1);
  const auto number = [&](std::string_view part) {
    if (part.empty() || part.find_first_not_of("0123456789") != std::string_view::npos || part.size() > 15) {
      throw ParseError("malformed n-range '" + text + "' (expected lo:hi:step)");
    }
    return std::stol(std::string(part));
  };
  const std::string_view view(text);
  if (first == std::string::npos) {
    range.lo = range.hi = number(view);
  } else {
    range.lo = number(view.substr(0, first));
    range.hi = number(view.substr(first + 1, second == std::string::npos ? std::string::npos : second - first - 1));
    if (second != std::string::npos) range.step = number(view.substr(second + 1));
  }
  if (range.step < 1 || range.hi < range.lo) throw ParseError("empty n-range '" + text + "'");
  return range;
}

std::vector<long> NRange::values() const {
  std::vector<long> out;
  for (long n = lo; n <= hi; n += step) out.push_back(n);
  return out;
}

int runCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Asymptotics of a terminating 3F1 family: evaluation, regimes, tables, identity checks."};
  app.name("hypasym");
  app.require_subcommand(1);

  CommonOptions opts;
  long n = 0;
  long alpha = 1;
  std::string z;
  std::string y;
  std::string threshold = "1e-20";
  std::string outPath;
  int angles = 64;
  ConvergeInputs converge;

  auto* eval = app.add_subcommand("eval", "print F_n(z)");
  addCommon(eval, opts);
  eval->add_option("--n", n, "degree")->required()->check(CLI::NonNegativeNumber);
  eval->add_option("--alpha", alpha, "upper parameter")->check(CLI::PositiveNumber);
  eval->add_option("--z", z, "point, e.g. 1/2-3/4i or 0.25+1e-3i")->required();

  auto* classifyCmd = app.add_subcommand("classify", "report the regime of z");
  addCommon(classifyCmd, opts);
  classifyCmd->add_option("--z", z, "point")->required();

  auto* convergeCmd = app.add_subcommand("converge", "exact value against the leading-order approximant");
  addCommon(convergeCmd, opts);
  convergeCmd->add_option("--regime", converge.regime, "regime")
      ->required()
      ->check(CLI::IsMember({"exterior", "interior", "segment", "endpoint"}));
  convergeCmd->add_option("--n-range", converge.nRange, "lo:hi:step")->required();
  convergeCmd->add_option("--y", converge.y, "segment point iy, rational p/q");
  convergeCmd->add_option("--z", converge.z, "exterior or interior point");
  convergeCmd->add_option("--alpha", converge.alpha, "upper parameter")->check(CLI::PositiveNumber);

  auto* identity = app.add_subcommand("identity", "check S + (in/y) I_n = 0 by quadrature");
  addCommon(identity, opts);
  identity->add_option("--n", n, "degree")->required()->check(CLI::NonNegativeNumber);
  identity->add_option("--y", y, "rational p/q, 0 < |y| <= 1")->required();
  identity->add_option("--threshold", threshold, "pass threshold for the residual");

  auto* trace = app.add_subcommand("trace", "sample the curve |phi(z)| = 1");
  addCommon(trace, opts);
  trace->add_option("--angles", angles, "number of rays")->check(CLI::Range(2, 1 << 20));
  trace->add_option("--out", outPath, "output file (stdout if omitted)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitParse;
  }

  try {
    if (eval->parsed()) return cmdEval(opts, n, alpha, z, out);
    if (classifyCmd->parsed()) return cmdClassify(opts, z, out);
    if (convergeCmd->parsed()) return cmdConverge(opts, converge, out);
    if (identity->parsed()) return cmdIdentity(opts, n, y, threshold, out);
    if (trace->parsed()) return cmdTrace(opts, angles, outPath, out, err);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitParse;
  } catch (const PrecisionCeilingError& e) {
    err << "error: " << e.what() << '\n';
    return kExitPrecisionCeiling;
  } catch (const RegimeError& e) {
    err << "error: " << e.what() << '\n';
    return kExitRegimeMismatch;
  } catch (const ConvergenceError& e) {
    err << "error: " << e.what() << '\n';
    return kExitQuadrature;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitParse;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitFailure;
}

}  // namespace hypasym
