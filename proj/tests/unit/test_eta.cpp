#include <doctest.h>

#include "oracle.hpp"
#include "twistden/eta.hpp"

using namespace twistden;

namespace {

void check_against(const QSeries& s, const oracle::Poly& expected) {
  for (std::size_t n = 0; n < expected.size(); ++n) {
    INFO("n = " << n);
    CHECK(s.coefficient(Rational(static_cast<long>(n))) == Rational(expected[n]));
  }
}

}  // namespace

TEST_CASE("pentagonal expansion of the Euler product") {
  const auto e = euler_product(400);
  CHECK(e == oracle::euler(400));
  CHECK(std::vector<BigInt>(e.begin(), e.begin() + 8) == std::vector<BigInt>{1, -1, -1, 0, 0, 1, 0, 1});
}

TEST_CASE("eta quotient leading exponent") {
  const EtaQuotient q({{2, 8}, {1, -16}});
  CHECK(q.leading_exponent() == 0);
  const EtaQuotient single({{1, 1}});
  CHECK(single.leading_exponent() == make_rational(1, 24));
  const QSeries s = eta_expand(single, 3);
  CHECK(s.coefficient(make_rational(1, 24)) == 1);
  CHECK(s.coefficient(make_rational(25, 24)) == -1);
}

TEST_CASE("named series match the known coefficients") {
  check_against(named_series(NamedSeries::fake_c, 5), {8, 128, 1152, 7680, 42112});
  check_against(named_series(NamedSeries::c3, 8), {2, 8, 24, 72, 184, 432, 984, 2112});
  check_against(named_series(NamedSeries::c7, 8), {1, 2, 4, 8, 14, 24, 40, 66});
  check_against(named_series(NamedSeries::a3, 7), {1, -4, 4, -4, 20, -24, 4});
  check_against(named_series(NamedSeries::a7, 12), {1, -2, 0, 0, 2, 0, 0, -2, 4, -2, 0, -4});
}

TEST_CASE("named series match naive products further out") {
  check_against(named_series(NamedSeries::fake_c, 120), oracle::fake_c(120));
  check_against(named_series(NamedSeries::c3, 120), oracle::c3(120));
  check_against(named_series(NamedSeries::c7, 120), oracle::c7(120));
  check_against(named_series(NamedSeries::a3, 120), oracle::a3(120));
  check_against(named_series(NamedSeries::a7, 120), oracle::a7(120));
}

TEST_CASE("series names round trip") {
  for (auto s : all_named_series()) CHECK(parse_series_name(series_name(s)) == s);
  CHECK(!parse_series_name("c5").has_value());
}

TEST_CASE("cycle shapes") {
  const CycleShape s = CycleShape::parse("1^2 3^2");
  CHECK(s.degree() == 8);
  CHECK(s.trace() == 2);
  CHECK(s.divisor_sum(3) == 4);
  CHECK(s.divisor_sum(2) == 2);
  CHECK(s.to_string() == "1^2 3^2");
  CHECK(CycleShape::parse("1^1 7^1").trace() == 1);
  CHECK(CycleShape::parse("1^8").trace() == 8);
}

TEST_CASE("twisted Jacobi identities") {
  for (int order : {1, 3, 7})
    for (const auto& c : verify_susy_identity(order, 200)) {
      INFO(c.name);
      CHECK(c.pass);
    }
}

TEST_CASE("a wrong trace breaks the identity") {
  bool any_fail = false;
  for (const auto& c : verify_susy_identity(CycleShape::parse("1^2 3^2"), 3, 20)) any_fail = any_fail || !c.pass;
  CHECK(any_fail);
}

TEST_CASE("trace generating functions agree with the closed c series") {
  const Rational h = make_rational(1, 2);
  CHECK(agree(trace_gf_even(CycleShape::parse("1^8"), 30), shift(named_series(NamedSeries::fake_c, 30 - h), h)));
  CHECK(agree(trace_gf_even(CycleShape::parse("1^2 3^2"), 30), shift(named_series(NamedSeries::c3, 30 - h), h)));
  CHECK(agree(trace_gf_odd(CycleShape::parse("1^1 7^1"), 1, 30), shift(named_series(NamedSeries::c7, 30 - h), h)));
}

TEST_CASE("theta coset formulas") {
  const QSeries t0 = theta_coset_formula(ThetaCase::A2A2, 0, 4);
  CHECK(t0.coefficient(0) == 1);
  CHECK(t0.coefficient(1) == 12);
  CHECK(t0.coefficient(2) == 36);
  CHECK(t0.coefficient(3) == 12);
  const QSeries t1 = theta_coset_formula(ThetaCase::A2A2, make_rational(2, 3), 3);
  CHECK(t1.coefficient(make_rational(1, 3)) == 3);
  const QSeries s0 = theta_coset_formula(ThetaCase::A6, 0, 3);
  CHECK(s0.coefficient(1) == 42);
  CHECK_THROWS_AS(theta_coset_formula(ThetaCase::A6, make_rational(1, 7), 3), InvalidClass);
  CHECK(theta_norm_classes(ThetaCase::A2A2).size() == 3);
  CHECK(theta_norm_classes(ThetaCase::A6).size() == 4);
}
