#include "hypasym/bigfloat.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <mutex>
#include <ostream>
#include <string>

#include "hypasym/errors.hpp"

namespace hypasym {
namespace {

Precision lesser(const BigFloat& a, const BigFloat& b) { return std::min(a.precision(), b.precision()); }

template <class Fn>
BigFloat unary(const BigFloat& x, Fn fn) {
  BigFloat r(x.precision());
  fn(r.get(), x.get(), MPFR_RNDN);
  return r;
}

std::partial_ordering fromCmp(int c) {
  return c < 0 ? std::partial_ordering::less
               : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}

std::string stripSpaces(std::string_view text) {
  std::string out;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  }
  return out;
}

class ConstantCache {
 public:
  template <class Make>
  BigFloat get(Precision bits, Make make) {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = values_.find(bits);
    if (it == values_.end()) it = values_.emplace(bits, make(bits)).first;
    return it->second;
  }

 private:
  std::mutex mutex_;
  std::map<Precision, BigFloat> values_;
};

}  // namespace

BigFloat::BigFloat(Precision bits) {
  mpfr_init2(v_, bits);
  mpfr_set_zero(v_, 1);
}

BigFloat::BigFloat(long value, Precision bits) {
  mpfr_init2(v_, bits);
  mpfr_set_si(v_, value, MPFR_RNDN);
}

BigFloat::BigFloat(double value, Precision bits) {
  mpfr_init2(v_, bits);
  mpfr_set_d(v_, value, MPFR_RNDN);
}

BigFloat::BigFloat(const BigRational& value, Precision bits) {
  mpfr_init2(v_, bits);
  mpfr_set_q(v_, value.get(), MPFR_RNDN);
}

BigFloat::BigFloat(const BigInt& value, Precision bits) {
  mpfr_init2(v_, bits);
  mpfr_set_z(v_, value.get_mpz_t(), MPFR_RNDN);
}

BigFloat BigFloat::parse(std::string_view text, Precision bits) {
  const std::string s = stripSpaces(text);
  BigFloat r(bits);
  char* end = nullptr;
  if (!s.empty()) mpfr_strtofr(r.v_, s.c_str(), &end, 10, MPFR_RNDN);
  if (s.empty() || end == s.c_str() || end != s.c_str() + s.size() || !r.isFinite()) {
    throw ParseError("malformed decimal literal: '" + std::string(text) + "'");
  }
  return r;
}

BigFloat::BigFloat(const BigFloat& other) {
  mpfr_init2(v_, other.precision());
  mpfr_set(v_, other.v_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& other) noexcept {
  mpfr_init2(v_, MPFR_PREC_MIN);
  mpfr_swap(v_, other.v_);
}

BigFloat& BigFloat::operator=(const BigFloat& other) {
  if (this != &other) {
    mpfr_set_prec(v_, other.precision());
    mpfr_set(v_, other.v_, MPFR_RNDN);
  }
  return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& other) noexcept {
  mpfr_swap(v_, other.v_);
  return *this;
}

BigFloat::~BigFloat() { mpfr_clear(v_); }

BigFloat BigFloat::withPrecision(Precision bits) const {
  BigFloat r(bits);
  mpfr_set(r.v_, v_, MPFR_RNDN);
  return r;
}

std::string BigFloat::toString(int digits) const {
  char* buffer = nullptr;
  mpfr_asprintf(&buffer, "%.*Re", std::max(digits, 1) - 1, v_);
  std::string out(buffer);
  mpfr_free_str(buffer);
  return out;
}

BigFloat BigFloat::operator-() const { return unary(*this, mpfr_neg); }

BigFloat& BigFloat::operator+=(const BigFloat& rhs) { return *this = *this + rhs; }
BigFloat& BigFloat::operator-=(const BigFloat& rhs) { return *this = *this - rhs; }
BigFloat& BigFloat::operator*=(const BigFloat& rhs) { return *this = *this * rhs; }
BigFloat& BigFloat::operator/=(const BigFloat& rhs) { return *this = *this / rhs; }

BigFloat operator+(const BigFloat& a, const BigFloat& b) {
  BigFloat r(lesser(a, b));
  mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

BigFloat operator-(const BigFloat& a, const BigFloat& b) {
  BigFloat r(lesser(a, b));
  mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

BigFloat operator*(const BigFloat& a, const BigFloat& b) {
  BigFloat r(lesser(a, b));
  mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

BigFloat operator/(const BigFloat& a, const BigFloat& b) {
  BigFloat r(lesser(a, b));
  mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

BigFloat operator+(const BigFloat& a, long b) {
  BigFloat r(a.precision());
  mpfr_add_si(r.v_, a.v_, b, MPFR_RNDN);
  return r;
}

BigFloat operator-(const BigFloat& a, long b) {
  BigFloat r(a.precision());
  mpfr_sub_si(r.v_, a.v_, b, MPFR_RNDN);
  return r;
}

BigFloat operator*(const BigFloat& a, long b) {
  BigFloat r(a.precision());
  mpfr_mul_si(r.v_, a.v_, b, MPFR_RNDN);
  return r;
}

BigFloat operator/(const BigFloat& a, long b) {
  BigFloat r(a.precision());
  mpfr_div_si(r.v_, a.v_, b, MPFR_RNDN);
  return r;
}

BigFloat operator-(long a, const BigFloat& b) {
  BigFloat r(b.precision());
  mpfr_si_sub(r.v_, a, b.v_, MPFR_RNDN);
  return r;
}

BigFloat operator/(long a, const BigFloat& b) {
  BigFloat r(b.precision());
  mpfr_si_div(r.v_, a, b.v_, MPFR_RNDN);
  return r;
}

BigFloat operator+(const BigFloat& a, const BigRational& b) {
  BigFloat r(a.precision());
  mpfr_add_q(r.v_, a.v_, b.get(), MPFR_RNDN);
  return r;
}

BigFloat operator-(const BigFloat& a, const BigRational& b) {
  BigFloat r(a.precision());
  mpfr_sub_q(r.v_, a.v_, b.get(), MPFR_RNDN);
  return r;
}

BigFloat operator*(const BigFloat& a, const BigRational& b) {
  BigFloat r(a.precision());
  mpfr_mul_q(r.v_, a.v_, b.get(), MPFR_RNDN);
  return r;
}

BigFloat operator/(const BigFloat& a, const BigRational& b) {
  BigFloat r(a.precision());
  mpfr_div_q(r.v_, a.v_, b.get(), MPFR_RNDN);
  return r;
}

std::partial_ordering operator<=>(const BigFloat& a, const BigFloat& b) {
  if (mpfr_unordered_p(a.v_, b.v_)) return std::partial_ordering::unordered;
  return fromCmp(mpfr_cmp(a.v_, b.v_));
}

std::partial_ordering operator<=>(const BigFloat& a, double b) {
  if (mpfr_nan_p(a.v_) || b != b) return std::partial_ordering::unordered;
  return fromCmp(mpfr_cmp_d(a.v_, b));
}

std::ostream& operator<<(std::ostream& os, const BigFloat& x) {
  return os << x.toString(static_cast<int>(x.precision() * 0.30103) + 1);
}

BigFloat abs(const BigFloat& x) { return unary(x, mpfr_abs); }
BigFloat sqrt(const BigFloat& x) { return unary(x, mpfr_sqrt); }
BigFloat cbrt(const BigFloat& x) { return unary(x, mpfr_cbrt); }
BigFloat exp(const BigFloat& x) { return unary(x, mpfr_exp); }
BigFloat log(const BigFloat& x) { return unary(x, mpfr_log); }
BigFloat log2(const BigFloat& x) { return unary(x, mpfr_log2); }
BigFloat sin(const BigFloat& x) { return unary(x, mpfr_sin); }
BigFloat cos(const BigFloat& x) { return unary(x, mpfr_cos); }
BigFloat asin(const BigFloat& x) { return unary(x, mpfr_asin); }

std::pair<BigFloat, BigFloat> sinCos(const BigFloat& x) {
  BigFloat s(x.precision());
  BigFloat c(x.precision());
  mpfr_sin_cos(s.get(), c.get(), x.get(), MPFR_RNDN);
  return {std::move(s), std::move(c)};
}

BigFloat atan2(const BigFloat& y, const BigFloat& x) {
  BigFloat r(lesser(y, x));
  mpfr_atan2(r.get(), y.get(), x.get(), MPFR_RNDN);
  return r;
}

BigFloat hypot(const BigFloat& x, const BigFloat& y) {
  BigFloat r(lesser(x, y));
  mpfr_hypot(r.get(), x.get(), y.get(), MPFR_RNDN);
  return r;
}

BigFloat pow(const BigFloat& base, const BigFloat& exponent) {
  BigFloat r(lesser(base, exponent));
  mpfr_pow(r.get(), base.get(), exponent.get(), MPFR_RNDN);
  return r;
}

BigFloat pow(const BigFloat& base, long exponent) {
  BigFloat r(base.precision());
  mpfr_pow_si(r.get(), base.get(), exponent, MPFR_RNDN);
  return r;
}

BigFloat min(const BigFloat& a, const BigFloat& b) {
  return (b < a ? b : a).withPrecision(lesser(a, b));
}

BigFloat max(const BigFloat& a, const BigFloat& b) {
  return (a < b ? b : a).withPrecision(lesser(a, b));
}

BigFloat ldexp(const BigFloat& x, long k) {
  BigFloat r(x.precision());
  mpfr_mul_2si(r.get(), x.get(), k, MPFR_RNDN);
  return r;
}

BigFloat pi(Precision bits) {
  static ConstantCache cache;
  return cache.get(bits, [](Precision p) {
    BigFloat r(p);
    mpfr_const_pi(r.get(), MPFR_RNDN);
    return r;
  });
}

BigFloat sqrtPi(Precision bits) {
  static ConstantCache cache;
  return cache.get(bits, [](Precision p) { return sqrt(pi(p + 16)).withPrecision(p); });
}

BigFloat pow2(long k, Precision bits) { return ldexp(BigFloat(1L, bits), k); }

// ---------------------------------------------------------------------------

BigComplex::BigComplex(BigFloat re, BigFloat im) : re_(std::move(re)), im_(std::move(im)) {
  if (re_.precision() != im_.precision()) {
    const Precision p = lesser(re_, im_);
    re_ = re_.withPrecision(p);
    im_ = im_.withPrecision(p);
  }
}

BigComplex::BigComplex(BigFloat re) : re_(std::move(re)), im_(re_.precision()) {}

BigComplex BigComplex::parse(std::string_view text, Precision bits) {
  const std::string s = stripSpaces(text);
  const auto fail = [&] {
    return ParseError("malformed complex literal: '" + std::string(text) + "'");
  };
  if (s.empty()) throw fail();
  try {
    if (s.front() == '(') {
      if (s.back() != ')') throw fail();
      const std::string_view inner(s.data() + 1, s.size() - 2);
      const auto comma = inner.find(',');
      if (comma == std::string_view::npos) throw fail();
      return {BigFloat::parse(inner.substr(0, comma), bits),
              BigFloat::parse(inner.substr(comma + 1), bits)};
    }
    if (s.back() != 'i') return BigComplex(BigFloat::parse(s, bits));
    const std::string_view body(s.data(), s.size() - 1);
    // Split at the last sign that is not part of an exponent.
    std::size_t split = std::string_view::npos;
    for (std::size_t k = body.size(); k-- > 1;) {
      if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
        split = k;
        break;
      }
    }
    const std::string_view rePart = split == std::string_view::npos ? "0" : body.substr(0, split);
    std::string_view imPart = split == std::string_view::npos ? body : body.substr(split);
    if (!imPart.empty() && imPart.front() == '+') imPart.remove_prefix(1);
    BigFloat im(bits);
    if (imPart.empty()) {
      im = BigFloat(1L, bits);
    } else if (imPart == "-") {
      im = BigFloat(-1L, bits);
    } else {
      im = BigFloat::parse(imPart, bits);
    }
    return {BigFloat::parse(rePart, bits), im};
  } catch (const ParseError&) {
    throw fail();
  }
}

BigComplex& BigComplex::operator+=(const BigComplex& rhs) { return *this = *this + rhs; }
BigComplex& BigComplex::operator-=(const BigComplex& rhs) { return *this = *this - rhs; }
BigComplex& BigComplex::operator*=(const BigComplex& rhs) { return *this = *this * rhs; }
BigComplex& BigComplex::operator/=(const BigComplex& rhs) { return *this = *this / rhs; }

BigComplex operator+(const BigComplex& a, const BigComplex& b) { return {a.re_ + b.re_, a.im_ + b.im_}; }
BigComplex operator-(const BigComplex& a, const BigComplex& b) { return {a.re_ - b.re_, a.im_ - b.im_}; }

BigComplex operator*(const BigComplex& a, const BigComplex& b) {
  const Precision p = std::min(a.precision(), b.precision());
  BigFloat re(p);
  BigFloat im(p);
  // fmms/fmma round once: re = ac - bd, im = ad + bc.
  mpfr_fmms(re.get(), a.re_.get(), b.re_.get(), a.im_.get(), b.im_.get(), MPFR_RNDN);
  mpfr_fmma(im.get(), a.re_.get(), b.im_.get(), a.im_.get(), b.re_.get(), MPFR_RNDN);
  return {std::move(re), std::move(im)};
}

BigComplex operator/(const BigComplex& a, const BigComplex& b) {
  const Precision p = std::min(a.precision(), b.precision());
  const Precision w = p + 16;
  const BigComplex aw = a.withPrecision(std::max(a.precision(), w));
  const BigComplex bw = b.withPrecision(std::max(b.precision(), w));
  BigFloat den(w);
  mpfr_fmma(den.get(), bw.re_.get(), bw.re_.get(), bw.im_.get(), bw.im_.get(), MPFR_RNDN);
  const BigComplex num = aw * bw.conj();
  return BigComplex{num.re_ / den, num.im_ / den}.withPrecision(p);
}

BigComplex operator+(const BigComplex& a, const BigFloat& b) {
  const Precision p = std::min(a.precision(), b.precision());
  return {a.re_ + b, a.im_.withPrecision(p)};
}

BigComplex operator/(long a, const BigComplex& b) { return BigComplex(a, 0, b.precision()) / b; }

std::string BigComplex::toString(int digits) const {
  return re_.toString(digits) + " " + im_.toString(digits);
}

std::ostream& operator<<(std::ostream& os, const BigComplex& z) {
  return os << "(" << z.re() << ", " << z.im() << ")";
}

BigFloat abs(const BigComplex& z) { return hypot(z.re(), z.im()); }

BigFloat arg(const BigComplex& z) { return atan2(z.im(), z.re()); }

BigComplex exp(const BigComplex& z) {
  const BigFloat modulus = exp(z.re());
  auto [s, c] = sinCos(z.im());
  return {modulus * c, modulus * s};
}

BigComplex log(const BigComplex& z) { return {log(abs(z)), arg(z)}; }

BigComplex sqrt(const BigComplex& z) {
  const Precision p = z.precision();
  if (z.isZero()) return BigComplex(p);
  const BigFloat r = abs(z);
  if (z.re().sign() >= 0) {
    const BigFloat t = sqrt((r + z.re()) / 2);
    return {t, z.im() / (t * 2)};
  }
  const BigFloat t = sqrt((r - z.re()) / 2);
  BigFloat re = abs(z.im()) / (t * 2);
  return {std::move(re), z.im().sign() < 0 ? -t : t};
}

BigComplex pow(const BigComplex& base, long exponent) {
  if (exponent < 0) return 1L / pow(base, -exponent);
  BigComplex result(1, 0, base.precision());
  BigComplex square = base;
  for (unsigned long e = static_cast<unsigned long>(exponent); e != 0; e >>= 1) {
    if (e & 1UL) result *= square;
    if (e > 1) square *= square;
  }
  return result;
}

BigComplex pow(const BigComplex& base, const BigFloat& exponent) {
  if (base.isZero()) return BigComplex(std::min(base.precision(), exponent.precision()));
  return exp(log(base) * exponent);
}

}  // namespace hypasym
