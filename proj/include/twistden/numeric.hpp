#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace twistden {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Builds a canonical rational num/den. Throws Error on den == 0.
Rational make_rational(const BigInt& num, const BigInt& den = 1);
Rational make_rational(long num, long den);

/// "7", "-3/2".
std::string to_string(const Rational& x);
std::string to_string(const BigInt& x);

/// Parses "a" or "a/b" (optionally signed). Throws Error on malformed input.
Rational parse_rational(std::string_view text);

BigInt floor_of(const Rational& x);
BigInt ceil_of(const Rational& x);
bool is_integer(const Rational& x);

/// Throws Error when x does not fit.
std::int64_t to_int64(const BigInt& x);
std::int64_t to_int64(const Rational& x);

BigInt gcd(const BigInt& a, const BigInt& b);
BigInt lcm(const BigInt& a, const BigInt& b);
std::int64_t gcd64(std::int64_t a, std::int64_t b);
std::int64_t lcm64(std::int64_t a, std::int64_t b);

/// Least common multiple of the denominators of xs (1 for an empty list).
BigInt common_denominator(const std::vector<Rational>& xs);

/// Reduces x into [0, m) for m > 0.
Rational mod_positive(const Rational& x, const Rational& m);

/// Moebius function; throws Error for n < 1.
int mobius(std::int64_t n);
/// Positive divisors of n >= 1 in increasing order.
std::vector<std::int64_t> divisors(std::int64_t n);

}  // namespace twistden
