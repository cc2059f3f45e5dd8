#include <doctest.h>

#include <random>

#include "hypasym/errors.hpp"
#include "hypasym/special.hpp"
#include "test_support.hpp"

using namespace hypasym;
using hypasym::testing::closeAbs;
using hypasym::testing::randomRational;

TEST_CASE("BigRational stays in lowest terms") {
  const BigRational r(6, -4);
  CHECK(r.numerator() == -3);
  CHECK(r.denominator() == 2);
  CHECK(BigRational::parse("10/4") == BigRational(5, 2));
  CHECK(BigRational::parse("-7") == BigRational(-7));
  CHECK(BigRational::parse("0/9").isZero());
}

TEST_CASE("rational literal errors") {
  CHECK_THROWS_AS(BigRational::parse(""), ParseError);
  CHECK_THROWS_AS(BigRational::parse("1/0"), ParseError);
  CHECK_THROWS_AS(BigRational::parse("1/-2"), ParseError);
  CHECK_THROWS_AS(BigRational::parse("1.5"), ParseError);
  CHECK_THROWS_AS(BigRational::parse("--1"), ParseError);
  CHECK_THROWS_AS(BigRational::parse("abc"), ParseError);
}

TEST_CASE("Gaussian rational literals") {
  CHECK(GaussianRational::parse("1/2+3/4i") == GaussianRational(BigRational(1, 2), BigRational(3, 4)));
  CHECK(GaussianRational::parse("0+1/2i") == GaussianRational(BigRational(0), BigRational(1, 2)));
  CHECK(GaussianRational::parse("-1/2-i") == GaussianRational(BigRational(-1, 2), BigRational(-1)));
  CHECK(GaussianRational::parse("i") == GaussianRational::i());
  CHECK(GaussianRational::parse("-3i") == GaussianRational(BigRational(0), BigRational(-3)));
  CHECK(GaussianRational::parse("3/4") == GaussianRational(BigRational(3, 4)));
  CHECK(GaussianRational::parse("(1/3, -2/5)") == GaussianRational(BigRational(1, 3), BigRational(-2, 5)));
  CHECK_THROWS_AS(GaussianRational::parse("1/2+"), ParseError);
  CHECK_THROWS_AS(GaussianRational::parse("(1/2)"), ParseError);
  CHECK_THROWS_AS(GaussianRational::parse("1/2+3/4j"), ParseError);
  CHECK_THROWS_AS(GaussianRational::parse("0.5i"), ParseError);

  CHECK(GaussianRational(BigRational(1), BigRational(-1, 2)).toString() == "1-1/2i");
  CHECK(GaussianRational(BigRational(0), BigRational(-1)).toString() == "-i");
  CHECK(GaussianRational(BigRational(3, 4)).toString() == "3/4");
}

TEST_CASE("exact field operations round-trip") {
  std::mt19937_64 rng(20261018);
  for (int trial = 0; trial < 200; ++trial) {
    const BigRational a = randomRational(rng);
    BigRational b = randomRational(rng);
    if (b.isZero()) b = 1;
    CHECK((a + b) - b == a);
    CHECK((a * b) / b == a);

    const GaussianRational z(randomRational(rng), randomRational(rng));
    GaussianRational w(randomRational(rng), randomRational(rng));
    if (w.isZero()) w = 1;
    CHECK((z * w) / w == z);
    CHECK(z.conj().conj() == z);
  }
}

TEST_CASE("pochhammer") {
  CHECK(pochhammer(BigRational(7, 3), 0) == 1);
  CHECK(pochhammer(BigRational(1, 2), 2) == BigRational(3, 4));
  CHECK(pochhammer(BigRational(-3), 5) == 0);

  std::mt19937_64 rng(7);
  std::uniform_int_distribution<unsigned long> small(0, 50);
  for (int trial = 0; trial < 40; ++trial) {
    const BigRational a = randomRational(rng, 100);
    const unsigned long j = small(rng);
    const unsigned long k = small(rng);
    CHECK(pochhammer(a, j + k) == pochhammer(a, j) * pochhammer(a + BigRational(long(j)), k));
  }
  for (long n = 0; n <= 30; ++n) {
    for (unsigned long k = static_cast<unsigned long>(n) + 1; k <= static_cast<unsigned long>(n) + 5; ++k) {
      CHECK(pochhammer(BigRational(-n), k) == 0);
    }
  }
}

TEST_CASE("generalized binomial") {
  CHECK(genBinomial(BigRational(11, 7), 0) == 1);
  CHECK(genBinomial(BigRational(1, 2), 1) == BigRational(1, 2));
  CHECK(genBinomial(BigRational(5), 2) == 10);
  CHECK(genBinomial(BigRational(5), 6) == 0);
  CHECK(genBinomial(BigRational(-1), 3) == -1);  // (-1)^k
}

TEST_CASE("gamma at positive integers and half-integers") {
  CHECK(gammaPosInt(1) == 1);
  CHECK(gammaPosInt(2) == 1);
  CHECK(gammaPosInt(5) == 24);
  CHECK_THROWS(gammaPosInt(0));

  const Precision p = 200;
  CHECK(closeAbs(gammaHalfShift(1, p), sqrtPi(p) / 2, 195));
  CHECK(closeAbs(gammaHalfShift(2, p), sqrtPi(p) * 3 / 4, 195));
  CHECK(closeAbs(gammaHalfShift(3, p), sqrtPi(p) * 15 / 8, 194));
}

TEST_CASE("Gamma(1/3) against MPFR's gamma") {
  for (Precision p : {64, 128, 256, 512}) {
    BigFloat reference(2 * p);
    mpfr_gamma(reference.get(), BigFloat(BigRational(1, 3), 2 * p).get(), MPFR_RNDN);
    CHECK(closeAbs(gammaOneThird(p), reference, p - 3));
  }
  CHECK(gammaOneThird(64).toString(17) == "2.6789385347077476e+00");
}

TEST_CASE("Gamma reflection at 1/3") {
  for (Precision p : {64, 160, 300}) {
    const BigFloat product = gammaOneThird(p) * gammaRational(BigRational(2, 3), p);
    const BigFloat expected = pi(p) * 2 / sqrt(BigFloat(3L, p));
    CHECK(closeAbs(product, expected, p - 4));
  }
}

TEST_CASE("Gamma(1/3) refines monotonically") {
  CHECK(gammaOneThird(128).withPrecision(64) == gammaOneThird(64));
}

TEST_CASE("gammaRational reduces arguments above one") {
  const Precision p = 128;
  CHECK(closeAbs(gammaRational(BigRational(4), p), BigFloat(6L, p), p - 4));
  CHECK(closeAbs(gammaRational(BigRational(5, 2), p), sqrtPi(p) * BigRational(3, 4), p - 4));
  CHECK(closeAbs(gammaRational(BigRational(1, 2), p), sqrtPi(p), p - 2));
}

TEST_CASE("unit exponential") {
  const Precision p = 160;
  const BigComplex one(1, 0, p);
  CHECK(expUnit(BigFloat(0L, p), p) == one);
  CHECK(closeAbs(expUnit(pi(p), p), BigComplex(-1, 0, p), p - 2));
  CHECK(closeAbs(expUnit(pi(p) / 2, p), BigComplex(0, 1, p), p - 2));

  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 50; ++trial) {
    const BigFloat theta(randomRational(rng, 10000), p);
    const BigComplex product = expUnit(theta, p) * expUnit(-theta, p);
    CHECK(closeAbs(product, one, p - 4));
    CHECK(abs(abs(expUnit(theta, p)) - 1) <= pow2(1 - p, p));
  }
}

TEST_CASE("precision follows the smaller operand") {
  const BigFloat a(1L, 100);
  const BigFloat b(3L, 300);
  CHECK((a + b).precision() == 100);
  CHECK((b / a).precision() == 100);
  CHECK((b * 7).precision() == 300);
  CHECK((b * BigRational(1, 3)).precision() == 300);
  const BigComplex z(a, b);
  CHECK(z.precision() == 100);
  CHECK((BigComplex(1, 1, 64) * BigComplex(2, 0, 256)).precision() == 64);
}

TEST_CASE("rational to float conversion is correctly rounded") {
  const BigRational third(1, 3);
  BigFloat viaMpfr(64);
  mpfr_set_q(viaMpfr.get(), third.get(), MPFR_RNDN);
  CHECK(BigFloat(third, 64) == viaMpfr);
  BigFloat down(64);
  mpfr_set_q(down.get(), third.get(), MPFR_RNDZ);
  BigFloat up(64);
  mpfr_set_q(up.get(), third.get(), MPFR_RNDA);
  const BigFloat exact(third, 1024);
  const BigFloat nearer = abs(exact - down.withPrecision(1024)) <= abs(exact - up.withPrecision(1024)) ? down : up;
  CHECK(BigFloat(third, 64) == nearer);
}

TEST_CASE("decimal literals") {
  CHECK(BigFloat::parse("2.5", 64) == BigFloat(2.5, 64));
  CHECK(BigFloat::parse("1e-500", 64).sign() > 0);
  CHECK_THROWS_AS(BigFloat::parse("2.5x", 64), ParseError);
  CHECK_THROWS_AS(BigFloat::parse("nan", 64), ParseError);
  const BigComplex z = BigComplex::parse("1.5-2e-3i", 64);
  CHECK(z.re() == BigFloat(1.5, 64));
  CHECK(z.im() == BigFloat::parse("-2e-3", 64));
  CHECK(BigComplex::parse("-i", 64) == BigComplex(0, -1, 64));
  CHECK_THROWS_AS(BigComplex::parse("1+2", 64), ParseError);
}

TEST_CASE("complex square root is principal") {
  const Precision p = 128;
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    const BigComplex z(hypasym::testing::randomGaussian(rng), p);
    const BigComplex s = sqrt(z);
    CHECK(s.re().sign() >= 0);
    CHECK(closeAbs(s * s, z, p - 16));
  }
  const BigComplex minusFour(-4, 0, p);
  CHECK(sqrt(minusFour) == BigComplex(0, 2, p));
}
