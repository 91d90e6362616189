#include <doctest.h>

#include "oracle.hpp"
#include "twistden/qseries.hpp"

using namespace twistden;

namespace {

QSeries random_series(std::int64_t denom, std::int64_t terms, const Rational& trunc) {
  QSeries::Terms t;
  for (std::int64_t i = 0; i < terms; ++i) {
    const std::int64_t e = oracle::uniform(0, 6 * denom);
    t[e] += make_rational(oracle::uniform(-9, 9), oracle::uniform(1, 4));
  }
  t[0] = 1;
  return QSeries(denom, std::move(t), trunc);
}

}  // namespace

TEST_CASE("basic arithmetic") {
  const QSeries one_minus_q = QSeries::constant(1) - QSeries::monomial(1, 1);
  const QSeries inv = inverse(one_minus_q.truncated(10));
  for (int n = 0; n < 10; ++n) CHECK(inv.coefficient(n) == 1);
  CHECK(inv.trunc() == Rational(10));
  CHECK_THROWS_AS(inv.coefficient(10), BeyondTruncation);
  CHECK(shift(QSeries::monomial(3, make_rational(1, 2)), make_rational(1, 3)).coefficient(make_rational(5, 6)) == 3);
}

TEST_CASE("inverse edge cases") {
  CHECK_THROWS_AS(inverse(QSeries::zero(Rational(5))), ZeroLeadingTerm);
  CHECK_THROWS_AS(inverse(QSeries(1, {{0, 1}, {1, 1}}, std::nullopt)), Error);
  const QSeries s = inverse(QSeries::monomial(1, 1, Rational(5)) + QSeries::monomial(1, 2, Rational(5)));
  CHECK(s.coefficient(-1) == 1);
  CHECK(s.coefficient(0) == -1);
  CHECK(agree(inverse(QSeries::monomial(2, 3)), QSeries::monomial(make_rational(1, 2), -3)));
}

TEST_CASE("ring axioms on random truncated series") {
  for (int trial = 0; trial < 25; ++trial) {
    const std::int64_t d = oracle::uniform(1, 3);
    const QSeries a = random_series(d, 6, Rational(5));
    const QSeries b = random_series(oracle::uniform(1, 2), 6, Rational(4));
    const QSeries c = random_series(1, 4, Rational(6));
    CHECK(agree(a * b, b * a));
    CHECK(agree((a * b) * c, a * (b * c)));
    CHECK(agree(a * (b + c), a * b + a * c));
    CHECK(agree(a * inverse(a), QSeries::constant(1)));
    CHECK((a * b).trunc() == Rational(4));
    CHECK(agree(power(a, 3), a * a * a));
  }
}

TEST_CASE("multisection splits a series") {
  const QSeries a = random_series(1, 12, Rational(20));
  QSeries sum = QSeries::zero(Rational(20));
  for (int r = 0; r < 3; ++r) sum = sum + multisection(a, 3, r);
  CHECK(agree(sum, a));
  const QSeries m = multisection(a, 3, 1);
  for (const auto& [e, c] : m.items()) CHECK(mod_positive(e, 3) == 1);
}

TEST_CASE("first difference") {
  const QSeries a = QSeries::from_integer_coefficients({1, 2, 3, 4});
  const QSeries b = QSeries::from_integer_coefficients({1, 2, 5, 4});
  CHECK(first_difference(a, b) == Rational(2));
  CHECK(!first_difference(a, a).has_value());
  CHECK_THROWS_AS(first_difference(a.truncated(0), b), EmptyComparisonRange);
}

TEST_CASE("substitute_power") {
  const QSeries a = QSeries::from_integer_coefficients({1, 1, 1});
  const QSeries b = substitute_power(a, make_rational(1, 3));
  CHECK(b.coefficient(make_rational(1, 3)) == 1);
  CHECK(b.coefficient(make_rational(2, 3)) == 1);
  CHECK(b.trunc() == Rational(1));
}
