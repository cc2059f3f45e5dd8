#include "hypasym/rational.hpp"

#include <cctype>
#include <ostream>

#include "hypasym/errors.hpp"

namespace hypasym {
namespace {

bool allDigits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

std::string stripSpaces(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  }
  return out;
}

// Accepts an optional leading sign, used for the imaginary part after a split.
BigRational parseSigned(std::string_view text) {
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  return BigRational::parse(text);
}

}  // namespace

BigRational::BigRational(const BigInt& num, const BigInt& den) : q_(num, den) {
  if (den == 0) throw std::domain_error("BigRational: zero denominator");
  q_.canonicalize();
}

BigRational::BigRational(long num, long den) : BigRational(BigInt(num), BigInt(den)) {}

BigRational BigRational::parse(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && body.front() == '-') {
    negative = true;
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  const std::string_view numText = body.substr(0, slash);
  const std::string_view denText =
      slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!allDigits(numText) || !allDigits(denText)) {
    throw ParseError("malformed rational literal: '" + std::string(text) + "'");
  }
  BigInt num(std::string(numText), 10);
  BigInt den(std::string(denText), 10);
  if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  if (negative) num = -num;
  return {num, den};
}

BigRational BigRational::operator-() const {
  BigRational r;
  mpq_neg(r.q_.get_mpq_t(), q_.get_mpq_t());
  return r;
}

BigRational& BigRational::operator+=(const BigRational& rhs) {
  q_ += rhs.q_;
  return *this;
}

BigRational& BigRational::operator-=(const BigRational& rhs) {
  q_ -= rhs.q_;
  return *this;
}

BigRational& BigRational::operator*=(const BigRational& rhs) {
  q_ *= rhs.q_;
  return *this;
}

BigRational& BigRational::operator/=(const BigRational& rhs) {
  if (rhs.isZero()) throw std::domain_error("BigRational: division by zero");
  q_ /= rhs.q_;
  return *this;
}

std::string BigRational::toString() const { return q_.get_str(10); }

BigRational abs(const BigRational& x) { return x.sign() < 0 ? -x : x; }

BigRational pow(const BigRational& base, unsigned long exponent) {
  BigInt num;
  BigInt den;
  mpz_pow_ui(num.get_mpz_t(), base.numerator().get_mpz_t(), exponent);
  mpz_pow_ui(den.get_mpz_t(), base.denominator().get_mpz_t(), exponent);
  return {num, den};
}

std::ostream& operator<<(std::ostream& os, const BigRational& x) { return os << x.toString(); }

GaussianRational GaussianRational::parse(std::string_view text) {
  const std::string s = stripSpaces(text);
  const auto fail = [&] {
    return ParseError("malformed Gaussian rational literal: '" + std::string(text) + "'");
  };
  if (s.empty()) throw fail();
  try {
    if (s.front() == '(') {
      if (s.back() != ')') throw fail();
      const std::string_view inner(s.data() + 1, s.size() - 2);
      const auto comma = inner.find(',');
      if (comma == std::string_view::npos) throw fail();
      return {BigRational::parse(inner.substr(0, comma)), BigRational::parse(inner.substr(comma + 1))};
    }
    if (s.back() != 'i') return {BigRational::parse(s)};

    const std::string_view body(s.data(), s.size() - 1);
    std::size_t split = std::string_view::npos;
    for (std::size_t k = body.size(); k-- > 1;) {
      if (body[k] == '+' || body[k] == '-') {
        split = k;
        break;
      }
    }
    const std::string_view rePart = split == std::string_view::npos ? "0" : body.substr(0, split);
    std::string_view imPart = split == std::string_view::npos ? body : body.substr(split);
    BigRational im;
    if (imPart.empty() || imPart == "+") {
      im = 1;
    } else if (imPart == "-") {
      im = -1;
    } else {
      im = parseSigned(imPart);
    }
    return {BigRational::parse(rePart), im};
  } catch (const ParseError&) {
    throw fail();
  }
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& rhs) {
  re_ += rhs.re_;
  im_ += rhs.im_;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& rhs) {
  re_ -= rhs.re_;
  im_ -= rhs.im_;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& rhs) {
  if (rhs.im_.isZero()) return *this *= rhs.re_;
  if (rhs.re_.isZero()) {
    // (a+bi)(di) = -bd + adi
    BigRational re = -(im_ * rhs.im_);
    im_ = re_ * rhs.im_;
    re_ = std::move(re);
    return *this;
  }
  BigRational re = re_ * rhs.re_ - im_ * rhs.im_;
  im_ = re_ * rhs.im_ + im_ * rhs.re_;
  re_ = std::move(re);
  return *this;
}

GaussianRational& GaussianRational::operator*=(const BigRational& rhs) {
  re_ *= rhs;
  im_ *= rhs;
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& rhs) {
  if (rhs.isZero()) throw std::domain_error("GaussianRational: division by zero");
  const BigRational n = rhs.norm();
  *this *= rhs.conj();
  return *this /= n;
}

GaussianRational& GaussianRational::operator/=(const BigRational& rhs) {
  re_ /= rhs;
  im_ /= rhs;
  return *this;
}

std::string GaussianRational::toString() const {
  if (im_.isZero()) return re_.toString();
  std::string imText;
  if (im_ == BigRational(1)) {
    imText = "i";
  } else if (im_ == BigRational(-1)) {
    imText = "-i";
  } else {
    imText = im_.toString() + "i";
  }
  if (re_.isZero()) return imText;
  return re_.toString() + (im_.sign() > 0 ? "+" : "") + imText;
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& z) { return os << z.toString(); }

}  // namespace hypasym
