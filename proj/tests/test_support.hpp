#pragma once

#include <random>

#include "hypasym/bigfloat.hpp"
#include "hypasym/rational.hpp"

namespace hypasym::testing {

inline BigRational randomRational(std::mt19937_64& rng, long range = 1000000) {
  std::uniform_int_distribution<long> num(-range, range);
  std::uniform_int_distribution<long> den(1, range);
  return {num(rng), den(rng)};
}

inline GaussianRational randomGaussian(std::mt19937_64& rng, long range = 1000) {
  return {randomRational(rng, range), randomRational(rng, range)};
}

/// |a - b| <= 2^-k, evaluated at the wider of the two precisions.
inline bool closeAbs(const BigFloat& a, const BigFloat& b, long k) {
  const Precision p = std::max(a.precision(), b.precision());
  return abs(a.withPrecision(p) - b.withPrecision(p)) <= pow2(-k, p);
}

inline bool closeAbs(const BigComplex& a, const BigComplex& b, long k) {
  const Precision p = std::max(a.precision(), b.precision());
  return abs(a.withPrecision(p) - b.withPrecision(p)) <= pow2(-k, p);
}

}  // namespace hypasym::testing
