#pragma once

#include <gmp.h>
#include <mpfr.h>

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>

#include "hypasym/rational.hpp"

namespace hypasym {

/// Working precision in bits.
using Precision = mpfr_prec_t;

/// Arbitrary-precision binary floating-point value.
///
/// Every value carries its own precision. Binary operations round to the
/// smaller of the two operand precisions; operations with an exact scalar
/// (integer or BigRational) keep the precision of the floating operand. All
/// rounding is to nearest.
class BigFloat {
 public:
  explicit BigFloat(Precision bits);
  BigFloat(long value, Precision bits);
  BigFloat(double value, Precision bits);
  BigFloat(const BigRational& value, Precision bits);
  BigFloat(const BigInt& value, Precision bits);

  /// Decimal or scientific notation, e.g. "2.5", "-1e-20".
  static BigFloat parse(std::string_view text, Precision bits);

  BigFloat(const BigFloat& other);
  BigFloat(BigFloat&& other) noexcept;
  BigFloat& operator=(const BigFloat& other);
  BigFloat& operator=(BigFloat&& other) noexcept;
  ~BigFloat();

  Precision precision() const { return mpfr_get_prec(v_); }
  /// Re-rounds to `bits`; exact when raising precision.
  BigFloat withPrecision(Precision bits) const;

  mpfr_srcptr get() const { return v_; }
  mpfr_ptr get() { return v_; }

  int sign() const { return mpfr_sgn(v_); }
  bool isZero() const { return mpfr_zero_p(v_) != 0; }
  bool isFinite() const { return mpfr_number_p(v_) != 0; }
  double toDouble() const { return mpfr_get_d(v_, MPFR_RNDN); }
  /// Exponent e with 2^(e-1) <= |x| < 2^e; undefined for zero.
  long exponent2() const { return mpfr_get_exp(v_); }

  /// Scientific notation with `digits` significant digits.
  std::string toString(int digits) const;

  BigFloat operator-() const;
  BigFloat& operator+=(const BigFloat& rhs);
  BigFloat& operator-=(const BigFloat& rhs);
  BigFloat& operator*=(const BigFloat& rhs);
  BigFloat& operator/=(const BigFloat& rhs);

  friend BigFloat operator+(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator-(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator*(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator/(const BigFloat& a, const BigFloat& b);

  friend BigFloat operator+(const BigFloat& a, long b);
  friend BigFloat operator-(const BigFloat& a, long b);
  friend BigFloat operator*(const BigFloat& a, long b);
  friend BigFloat operator/(const BigFloat& a, long b);
  friend BigFloat operator*(long a, const BigFloat& b) { return b * a; }
  friend BigFloat operator+(long a, const BigFloat& b) { return b + a; }
  friend BigFloat operator-(long a, const BigFloat& b);
  friend BigFloat operator/(long a, const BigFloat& b);

  friend BigFloat operator+(const BigFloat& a, const BigRational& b);
  friend BigFloat operator-(const BigFloat& a, const BigRational& b);
  friend BigFloat operator*(const BigFloat& a, const BigRational& b);
  friend BigFloat operator/(const BigFloat& a, const BigRational& b);

  friend bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
  friend std::partial_ordering operator<=>(const BigFloat& a, const BigFloat& b);
  friend std::partial_ordering operator<=>(const BigFloat& a, double b);
  friend bool operator==(const BigFloat& a, double b) { return mpfr_cmp_d(a.v_, b) == 0; }

 private:
  mpfr_t v_;
};

std::ostream& operator<<(std::ostream& os, const BigFloat& x);

BigFloat abs(const BigFloat& x);
BigFloat sqrt(const BigFloat& x);
BigFloat cbrt(const BigFloat& x);
BigFloat exp(const BigFloat& x);
BigFloat log(const BigFloat& x);
BigFloat log2(const BigFloat& x);
BigFloat sin(const BigFloat& x);
BigFloat cos(const BigFloat& x);
/// {sin x, cos x} in one call.
std::pair<BigFloat, BigFloat> sinCos(const BigFloat& x);
BigFloat asin(const BigFloat& x);
BigFloat atan2(const BigFloat& y, const BigFloat& x);
BigFloat hypot(const BigFloat& x, const BigFloat& y);
BigFloat pow(const BigFloat& base, const BigFloat& exponent);
BigFloat pow(const BigFloat& base, long exponent);
BigFloat min(const BigFloat& a, const BigFloat& b);
BigFloat max(const BigFloat& a, const BigFloat& b);
/// x * 2^k, exact.
BigFloat ldexp(const BigFloat& x, long k);

/// pi rounded to `bits`; cached per precision, safe to call concurrently.
BigFloat pi(Precision bits);
/// sqrt(pi) rounded to `bits`; cached like pi().
BigFloat sqrtPi(Precision bits);

/// 2^-k at the given precision.
BigFloat pow2(long k, Precision bits);

/// Complex value with BigFloat parts of a common precision.
class BigComplex {
 public:
  explicit BigComplex(Precision bits) : re_(bits), im_(bits) {}
  BigComplex(BigFloat re, BigFloat im);
  explicit BigComplex(BigFloat re);
  BigComplex(const GaussianRational& z, Precision bits)
      : re_(z.re(), bits), im_(z.im(), bits) {}
  BigComplex(long re, long im, Precision bits) : re_(re, bits), im_(im, bits) {}

  /// Decimal complex literal: "1.5-2e-3i", "0.25", "-i", or "(1.5, -2)".
  static BigComplex parse(std::string_view text, Precision bits);

  static BigComplex i(Precision bits) { return {0, 1, bits}; }

  const BigFloat& re() const { return re_; }
  const BigFloat& im() const { return im_; }
  Precision precision() const { return re_.precision(); }
  BigComplex withPrecision(Precision bits) const {
    return {re_.withPrecision(bits), im_.withPrecision(bits)};
  }

  bool isZero() const { return re_.isZero() && im_.isZero(); }

  BigComplex conj() const { return {re_, -im_}; }
  BigComplex operator-() const { return {-re_, -im_}; }

  BigComplex& operator+=(const BigComplex& rhs);
  BigComplex& operator-=(const BigComplex& rhs);
  BigComplex& operator*=(const BigComplex& rhs);
  BigComplex& operator/=(const BigComplex& rhs);

  friend BigComplex operator+(const BigComplex& a, const BigComplex& b);
  friend BigComplex operator-(const BigComplex& a, const BigComplex& b);
  friend BigComplex operator*(const BigComplex& a, const BigComplex& b);
  friend BigComplex operator/(const BigComplex& a, const BigComplex& b);

  friend BigComplex operator*(const BigComplex& a, const BigFloat& b) { return {a.re_ * b, a.im_ * b}; }
  friend BigComplex operator*(const BigFloat& a, const BigComplex& b) { return b * a; }
  friend BigComplex operator/(const BigComplex& a, const BigFloat& b) { return {a.re_ / b, a.im_ / b}; }
  friend BigComplex operator+(const BigComplex& a, const BigFloat& b);
  friend BigComplex operator*(const BigComplex& a, long b) { return {a.re_ * b, a.im_ * b}; }
  friend BigComplex operator/(const BigComplex& a, long b) { return {a.re_ / b, a.im_ / b}; }
  friend BigComplex operator*(const BigComplex& a, const BigRational& b) { return {a.re_ * b, a.im_ * b}; }
  friend BigComplex operator/(const BigComplex& a, const BigRational& b) { return {a.re_ / b, a.im_ / b}; }
  friend BigComplex operator+(const BigComplex& a, long b) { return {a.re_ + b, a.im_}; }
  friend BigComplex operator-(long a, const BigComplex& b) { return {a - b.re_, -b.im_}; }
  friend BigComplex operator/(long a, const BigComplex& b);

  friend bool operator==(const BigComplex& a, const BigComplex& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  /// "re im" pair in scientific notation with `digits` significant digits.
  std::string toString(int digits) const;

 private:
  BigFloat re_;
  BigFloat im_;
};

std::ostream& operator<<(std::ostream& os, const BigComplex& z);

BigFloat abs(const BigComplex& z);
/// Principal argument in (-pi, pi].
BigFloat arg(const BigComplex& z);
BigComplex exp(const BigComplex& z);
/// Principal logarithm.
BigComplex log(const BigComplex& z);
/// Principal square root (non-negative real part; branch cut on the negative axis).
BigComplex sqrt(const BigComplex& z);
/// Integer power by repeated squaring.
BigComplex pow(const BigComplex& base, long exponent);
/// Principal power exp(exponent * log(base)).
BigComplex pow(const BigComplex& base, const BigFloat& exponent);

}  // namespace hypasym
