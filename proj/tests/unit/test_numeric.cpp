#include <doctest.h>

#include "oracle.hpp"
#include "twistden/matrix.hpp"
#include "twistden/numeric.hpp"

using namespace twistden;

TEST_CASE("rational parsing and printing") {
  CHECK(to_string(parse_rational("3/6")) == "1/2");
  CHECK(to_string(parse_rational("-4")) == "-4");
  CHECK(to_string(parse_rational("7/1")) == "7");
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
  CHECK_THROWS_AS(parse_rational("abc"), Error);
}

TEST_CASE("floor, ceil, mod") {
  CHECK(floor_of(make_rational(-1, 2)) == -1);
  CHECK(ceil_of(make_rational(-1, 2)) == 0);
  CHECK(floor_of(make_rational(7, 3)) == 2);
  CHECK(mod_positive(make_rational(-1, 3), 2) == make_rational(5, 3));
  CHECK(mod_positive(make_rational(10, 7), 2) == make_rational(10, 7));
}

TEST_CASE("mobius and divisors against sieve") {
  for (std::int64_t n = 1; n <= 200; ++n) {
    std::int64_t sum = 0;
    for (auto d : divisors(n)) sum += mobius(d);
    CHECK(sum == (n == 1 ? 1 : 0));
    std::vector<std::int64_t> naive;
    for (std::int64_t d = 1; d <= n; ++d)
      if (n % d == 0) naive.push_back(d);
    CHECK(divisors(n) == naive);
  }
  CHECK(mobius(30) == -1);
  CHECK(mobius(12) == 0);
  CHECK(mobius(7) == -1);
}

TEST_CASE("determinant and inverse on random integer matrices") {
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = static_cast<std::size_t>(oracle::uniform(1, 5));
    RationalMatrix a(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) a(i, j) = Rational(oracle::uniform(-5, 5));
    const Rational d = determinant(a);
    CHECK(determinant(a.transpose()) == d);
    if (d == 0) {
      CHECK_THROWS_AS(inverse(a), SingularMatrix);
      continue;
    }
    CHECK(a * inverse(a) == RationalMatrix::identity(n));
    CHECK(determinant(inverse(a)) == 1 / d);
  }
}

TEST_CASE("characteristic polynomial of a permutation") {
  RationalMatrix p(3, 3);
  p(1, 0) = 1;
  p(2, 1) = 1;
  p(0, 2) = 1;
  const auto c = characteristic_polynomial(p);
  REQUIRE(c.size() == 4);
  CHECK(c[0] == -1);
  CHECK(c[1] == 0);
  CHECK(c[2] == 0);
  CHECK(c[3] == 1);
}

TEST_CASE("Hermite form and integer kernel") {
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t r = static_cast<std::size_t>(oracle::uniform(1, 4));
    const std::size_t c = static_cast<std::size_t>(oracle::uniform(1, 5));
    IntegerMatrix a(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) a(i, j) = oracle::uniform(-6, 6);
    const HermiteForm hf = hermite_form(a);
    CHECK(hf.transform * a == hf.form);
    CHECK(abs(determinant(to_rational(hf.transform))) == 1);
    const IntegerMatrix k = integer_kernel(a);
    CHECK(k.rows() == c - rank(to_rational(a)));
    const IntegerMatrix z = a * k.transpose();
    for (std::size_t i = 0; i < z.rows(); ++i)
      for (std::size_t j = 0; j < z.cols(); ++j) CHECK(z(i, j) == 0);
  }
}

TEST_CASE("Smith invariants") {
  IntegerMatrix a(2, 2);
  a(0, 0) = 2;
  a(0, 1) = 1;
  a(1, 0) = 1;
  a(1, 1) = 4;
  CHECK(smith_invariants(a) == std::vector<BigInt>{1, 7});
  IntegerMatrix b(2, 2);
  b(0, 0) = 6;
  b(1, 1) = 4;
  CHECK(smith_invariants(b) == std::vector<BigInt>{2, 12});
}
