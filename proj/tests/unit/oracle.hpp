#pragma once

// Naive reference computations, independent of the library's series code.

#include <cstdint>
#include <random>
#include <vector>

#include "twistden/numeric.hpp"

namespace oracle {

using twistden::BigInt;
using Poly = std::vector<BigInt>;

inline Poly one(std::size_t count) {
  Poly p(count, 0);
  if (count) p[0] = 1;
  return p;
}

// p *= (1 + sign x^k), by direct convolution.
inline void mul_binomial(Poly& p, std::size_t k, int sign) {
  for (std::size_t i = p.size(); i-- > k;) p[i] += sign * p[i - k];
}

// p /= (1 + sign x^k), by long division.
inline void div_binomial(Poly& p, std::size_t k, int sign) {
  for (std::size_t i = k; i < p.size(); ++i) p[i] -= sign * p[i - k];
}

// prod_{n>=1} (1 + sign x^{scale n})^exponent, truncated to count terms.
inline void mul_product(Poly& p, std::size_t scale, int sign, int exponent) {
  for (std::size_t k = scale; k < p.size(); k += scale)
    for (int e = 0; e < (exponent < 0 ? -exponent : exponent); ++e) {
      if (exponent > 0)
        mul_binomial(p, k, sign);
      else
        div_binomial(p, k, sign);
    }
}

inline Poly fake_c(std::size_t count) {
  Poly p = one(count);
  mul_product(p, 1, +1, 8);
  mul_product(p, 1, -1, -8);
  for (auto& x : p) x *= 8;
  return p;
}

inline Poly c3(std::size_t count) {
  Poly p = one(count);
  mul_product(p, 3, +1, 2);
  mul_product(p, 1, +1, 2);
  mul_product(p, 3, -1, -2);
  mul_product(p, 1, -1, -2);
  for (auto& x : p) x *= 2;
  return p;
}

inline Poly c7(std::size_t count) {
  Poly p = one(count);
  mul_product(p, 7, +1, 1);
  mul_product(p, 1, +1, 1);
  mul_product(p, 7, -1, -1);
  mul_product(p, 1, -1, -1);
  return p;
}

inline Poly a3(std::size_t count) {
  Poly p = one(count);
  mul_product(p, 3, -1, 2);
  mul_product(p, 1, -1, 2);
  mul_product(p, 3, +1, -2);
  mul_product(p, 1, +1, -2);
  return p;
}

inline Poly a7(std::size_t count) {
  Poly p = one(count);
  mul_product(p, 7, -1, 1);
  mul_product(p, 1, -1, 1);
  mul_product(p, 7, +1, -1);
  mul_product(p, 1, +1, -1);
  return p;
}

inline Poly euler(std::size_t count) {
  Poly p = one(count);
  mul_product(p, 1, -1, 1);
  return p;
}

inline std::mt19937_64& rng() {
  static std::mt19937_64 g(20240601);
  return g;
}

inline std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng());
}

}  // namespace oracle
