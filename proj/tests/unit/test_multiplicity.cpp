#include <doctest.h>

#include "twistden/multiplicity.hpp"

using namespace twistden;

TEST_CASE("depth for height") {
  CHECK(depth_for_height(1) == 0);
  CHECK(depth_for_height(6) == 9);
  CHECK(depth_for_height(7) == 12);
  CHECK(depth_for_height(14) == 49);
}

TEST_CASE("twist classes") {
  const TwistClass t3 = TwistClass::build(3, 4);
  CHECK(t3.shape_V().to_string() == "1^2 3^2");
  CHECK(t3.trace_L() == 2);
  CHECK(t3.fixed().rank() == 4);
  CHECK(t3.cosets().size() == 9);
  const TwistClass t7 = TwistClass::build(7, 4);
  CHECK(t7.shape_L().to_string() == "1^1 7^1");
  CHECK(t7.cosets().size() == 7);
  const TwistClass t1 = TwistClass::build(1, 2);
  CHECK(t1.fixed().rank() == 8);
  CHECK(t1.cosets().size() == 1);
}

TEST_CASE("simple root multiplicities") {
  const TwistClass t3 = TwistClass::build(3, 0);
  const std::vector<std::pair<int, int>> expected3{{1, 2}, {2, 2}, {3, 4}, {4, 2}, {5, 2}, {6, 4}};
  for (const auto& [k, m] : expected3) CHECK(simple_root_mult(t3, k) == MultPair{m, m});
  const TwistClass t7 = TwistClass::build(7, 0);
  CHECK(simple_root_mult(t7, 1) == MultPair{1, 1});
  CHECK(simple_root_mult(t7, 7) == MultPair{2, 2});
  const TwistClass t1 = TwistClass::build(1, 0);
  CHECK(simple_root_mult(t1, 1) == MultPair{8, 8});
  CHECK(simple_root_mult(t1, 5) == MultPair{8, 8});
}

TEST_CASE("trace formula agrees with the closed forms") {
  for (int order : {3, 7}) {
    const TwistClass tc = TwistClass::build(order, depth_for_height(6));
    for (const auto& c : verify_multiplicities(tc, 6)) {
      INFO(c.name);
      CHECK(c.pass);
    }
  }
}

TEST_CASE("untwisted multiplicities are c(-alpha^2/2)") {
  const TwistClass tc = TwistClass::build(1, depth_for_height(3));
  const LorentzianPoint p{std::vector<std::int64_t>(8, 0), 1, 1};
  CHECK(mult_theorem1(tc, p, Parity::even) == 128);
  CHECK(mult_theorem1(tc, p, Parity::odd) == 128);
  CHECK(mult_closed(tc, p) == MultPair{128, 128});
  const LorentzianPoint q{std::vector<std::int64_t>(8, 0), 1, 2};
  CHECK(mult_theorem1(tc, q, Parity::even) == 1152);
}

TEST_CASE("order 7 multiplicities on 7L*") {
  const TwistClass tc = TwistClass::build(7, 21);
  const auto pts = positive_cone_enum(tc.lorentzian(), 14);
  const auto c = named_series(NamedSeries::c7, 22);
  std::size_t seen = 0;
  for (const auto& p : pts) {
    if (!tc.lorentzian().in_scaled_dual(p, 7) || tc.lorentzian().norm(p) != -42) continue;
    ++seen;
    const BigInt expected = Rational(c.coefficient(21) + c.coefficient(3)).get_num();
    CHECK(expected == 12256);
    CHECK(mult_theorem1(tc, p, Parity::even) == expected);
    CHECK(mult_closed(tc, p) == MultPair{expected, expected});
  }
  CHECK(seen > 0);
  for (const auto& p : pts)
    if (tc.lorentzian().in_scaled_dual(p, 7)) CHECK(tc.lorentzian().norm(p) != -14);
}

TEST_CASE("no multiplicity off L") {
  const TwistClass tc = TwistClass::build(3, depth_for_height(4));
  for (const auto& p : positive_cone_enum(tc.lorentzian(), 4))
    if (!tc.lorentzian().in_lattice(p)) CHECK(mult_closed(tc, p) == MultPair{0, 0});
}

TEST_CASE("table rows and exports") {
  const TwistClass tc = TwistClass::build(7, depth_for_height(4));
  const auto rows = build_mult_table(tc, 4);
  REQUIRE(rows.size() % 2 == 0);
  for (std::size_t i = 0; i < rows.size(); i += 2) {
    CHECK(rows[i].source == "theorem1");
    CHECK(rows[i + 1].source == "closed");
    CHECK(rows[i].mult_even == rows[i + 1].mult_even);
  }
  const std::string csv = mult_table_csv(rows);
  CHECK(csv.rfind("r_star,coset,m,n,norm,pairing,mult_even,mult_odd,source\n", 0) == 0);
  const auto empty = build_mult_table(tc, 4, Rational(-1));
  CHECK(empty.empty());
  CHECK(mult_table_csv(empty) == "r_star,coset,m,n,norm,pairing,mult_even,mult_odd,source\n");
}
