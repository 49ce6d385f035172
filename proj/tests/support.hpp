#pragma once

#include <cstdint>
#include <random>

#include "hyperorder/quadext.hpp"

namespace testsupport {

using hyperorder::BigInt;
using hyperorder::Discriminant;
using hyperorder::QuadExt;
using hyperorder::Rational;

inline Rational q(long num, long den = 1) { return Rational(BigInt(num), BigInt(den)); }

/// Fixed seeds keep every randomized suite reproducible.
inline std::mt19937_64 rng(std::uint64_t salt) { return std::mt19937_64(0x5eed0000ULL + salt); }

inline Rational random_rational(std::mt19937_64& gen, long span = 20, long max_den = 9) {
  std::uniform_int_distribution<long> num(-span, span);
  std::uniform_int_distribution<long> den(1, max_den);
  return q(num(gen), den(gen));
}

/// p/den with den ∤ p, so never an integer.
inline Rational random_fraction(std::mt19937_64& gen, long den, long span = 40) {
  std::uniform_int_distribution<long> num(-span, span);
  long p = num(gen);
  while (p % den == 0) p = num(gen);
  return q(p, den);
}

/// A non-square radicand from a small pool, negative ones included.
inline Discriminant random_disc(std::mt19937_64& gen) {
  static const long pool[] = {-71, -47, -23, -7, -3, 2, 3, 5, 6, 7, 13, 17};
  std::uniform_int_distribution<std::size_t> pick(0, std::size(pool) - 1);
  return Discriminant(Rational(pool[pick(gen)]));
}

inline QuadExt random_quad(std::mt19937_64& gen, const Discriminant& d) {
  return QuadExt(random_rational(gen), random_rational(gen), d);
}

}  // namespace testsupport
