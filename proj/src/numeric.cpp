#include "twistden/numeric.hpp"

#include <cctype>
#include <limits>

namespace twistden {

Rational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw Error("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational make_rational(long num, long den) { return make_rational(BigInt(num), BigInt(den)); }

std::string to_string(const Rational& x) {
  if (x.get_den() == 1) return x.get_num().get_str();
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

std::string to_string(const BigInt& x) { return x.get_str(); }

namespace {

BigInt parse_integer(std::string_view text) {
  if (text.empty()) throw Error("empty integer literal");
  std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  if (start == text.size()) throw Error("malformed integer literal '" + std::string(text) + "'");
  for (std::size_t i = start; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i])))
      throw Error("malformed integer literal '" + std::string(text) + "'");
  }
  std::string digits(text[0] == '+' ? text.substr(1) : text);
  return BigInt(digits, 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  return make_rational(parse_integer(text.substr(0, slash)), parse_integer(text.substr(slash + 1)));
}

BigInt floor_of(const Rational& x) {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return q;
}

BigInt ceil_of(const Rational& x) {
  BigInt q;
  mpz_cdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return q;
}

bool is_integer(const Rational& x) { return x.get_den() == 1; }

std::int64_t to_int64(const BigInt& x) {
  if (!x.fits_slong_p()) throw Error("integer " + x.get_str() + " exceeds 64 bits");
  return x.get_si();
}

std::int64_t to_int64(const Rational& x) {
  if (!is_integer(x)) throw Error("expected an integer, got " + to_string(x));
  return to_int64(x.get_num());
}

BigInt gcd(const BigInt& a, const BigInt& b) {
  BigInt g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

BigInt lcm(const BigInt& a, const BigInt& b) {
  BigInt l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

std::int64_t gcd64(std::int64_t a, std::int64_t b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    std::int64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::int64_t lcm64(std::int64_t a, std::int64_t b) {
  if (a == 0 || b == 0) return 0;
  return to_int64(lcm(BigInt(static_cast<long>(a)), BigInt(static_cast<long>(b))));
}

BigInt common_denominator(const std::vector<Rational>& xs) {
  BigInt d = 1;
  for (const auto& x : xs) d = lcm(d, x.get_den());
  return d;
}

Rational mod_positive(const Rational& x, const Rational& m) {
  if (m <= 0) throw Error("modulus must be positive");
  Rational q = x / m;
  Rational r = x - Rational(floor_of(q)) * m;
  return r;
}

int mobius(std::int64_t n) {
  if (n < 1) throw Error("mobius: argument must be positive");
  int mu = 1;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    n /= p;
    if (n % p == 0) return 0;
    mu = -mu;
  }
  if (n > 1) mu = -mu;
  return mu;
}

std::vector<std::int64_t> divisors(std::int64_t n) {
  if (n < 1) throw Error("divisors: argument must be positive");
  std::vector<std::int64_t> lo, hi;
  for (std::int64_t d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    lo.push_back(d);
    if (d != n / d) hi.push_back(n / d);
  }
  lo.insert(lo.end(), hi.rbegin(), hi.rend());
  return lo;
}

}  // namespace twistden
