#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>

namespace hypasym {

using BigInt = mpz_class;

/// Exact rational number, always kept in lowest terms with a positive
/// denominator.
class BigRational {
 public:
  BigRational() = default;
  BigRational(long value) : q_(value) {}  // NOLINT(google-explicit-constructor)
  BigRational(const BigInt& value) : q_(value) {}  // NOLINT
  BigRational(const BigInt& num, const BigInt& den);
  BigRational(long num, long den);

  /// Parses "p/q" or "p" with an optional leading minus sign.
  static BigRational parse(std::string_view text);

  BigInt numerator() const { return q_.get_num(); }
  BigInt denominator() const { return q_.get_den(); }
  int sign() const { return sgn(q_); }
  bool isZero() const { return sign() == 0; }
  bool isInteger() const { return q_.get_den() == 1; }

  mpq_srcptr get() const { return q_.get_mpq_t(); }

  BigRational operator-() const;
  BigRational& operator+=(const BigRational& rhs);
  BigRational& operator-=(const BigRational& rhs);
  BigRational& operator*=(const BigRational& rhs);
  BigRational& operator/=(const BigRational& rhs);

  friend BigRational operator+(BigRational a, const BigRational& b) { return a += b; }
  friend BigRational operator-(BigRational a, const BigRational& b) { return a -= b; }
  friend BigRational operator*(BigRational a, const BigRational& b) { return a *= b; }
  friend BigRational operator/(BigRational a, const BigRational& b) { return a /= b; }

  friend bool operator==(const BigRational& a, const BigRational& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const BigRational& a, const BigRational& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  std::string toString() const;
  double toDouble() const { return q_.get_d(); }

 private:
  mpq_class q_;
};

BigRational abs(const BigRational& x);
BigRational pow(const BigRational& base, unsigned long exponent);

std::ostream& operator<<(std::ostream& os, const BigRational& x);

/// Complex number with exact rational real and imaginary parts.
class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(BigRational re) : re_(std::move(re)) {}  // NOLINT
  GaussianRational(long re) : re_(re) {}  // NOLINT
  GaussianRational(BigRational re, BigRational im) : re_(std::move(re)), im_(std::move(im)) {}

  static GaussianRational i() { return {BigRational(0), BigRational(1)}; }

  /// Parses "a/b+c/di", "a/b", "c/di", "i", "-i" or the pair "(a/b, c/d)".
  static GaussianRational parse(std::string_view text);

  const BigRational& re() const { return re_; }
  const BigRational& im() const { return im_; }

  bool isZero() const { return re_.isZero() && im_.isZero(); }
  bool isReal() const { return im_.isZero(); }
  bool isImaginary() const { return re_.isZero(); }

  GaussianRational conj() const { return {re_, -im_}; }
  /// |z|^2, exact.
  BigRational norm() const { return re_ * re_ + im_ * im_; }

  GaussianRational operator-() const { return {-re_, -im_}; }
  GaussianRational& operator+=(const GaussianRational& rhs);
  GaussianRational& operator-=(const GaussianRational& rhs);
  GaussianRational& operator*=(const GaussianRational& rhs);
  GaussianRational& operator*=(const BigRational& rhs);
  GaussianRational& operator/=(const GaussianRational& rhs);
  GaussianRational& operator/=(const BigRational& rhs);

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator*(GaussianRational a, const BigRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  friend GaussianRational operator/(GaussianRational a, const BigRational& b) { return a /= b; }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  /// Canonical text form, e.g. "1-1/2i", "3/4", "-2i", "0".
  std::string toString() const;

 private:
  BigRational re_;
  BigRational im_;
};

std::ostream& operator<<(std::ostream& os, const GaussianRational& z);

}  // namespace hypasym
