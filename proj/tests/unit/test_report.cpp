#include <doctest.h>

#include "twistden/report.hpp"
#include "twistden/verify.hpp"

using namespace twistden;

TEST_CASE("report JSON round trip") {
  Report r;
  r.command = "verify theta";
  r.params = {{"order", "3"}, {"prec", "20"}};
  r.add(Check{"a", "below q^20", true, std::nullopt});
  r.add(Check{"b", "below q^20", false, Discrepancy{"q^1/3", "3", "4"}});
  r.summary = {{"points", "12"}};
  r.wall_ms = 17;
  const std::string j = to_json(r);
  CHECK(j.find("\"status\": \"fail\"") != std::string::npos);
  CHECK(j.find("\"first_discrepancy\": null") != std::string::npos);
  CHECK(j.find("\"wall_ms\": \"17\"") != std::string::npos);
  CHECK(to_json(report_from_json(j)) == j);
  CHECK(!r.pass());
  CHECK_THROWS_AS(report_from_json("{"), Error);
}

TEST_CASE("text reports") {
  Report r;
  r.command = "verify spin";
  r.add(Check{"x", "exact", true, std::nullopt});
  CHECK(to_text(r).find("PASS  x") != std::string::npos);
  CHECK(r.pass());
}

TEST_CASE("verification targets") {
  VerifyOptions o;
  o.order = 3;
  o.prec = 20;
  for (const char* t : {"susy", "theta", "spin", "lattice"}) {
    const Report r = verify_target(t, o);
    INFO(t);
    CHECK(r.pass());
    CHECK(!r.checks.empty());
  }
  o.perturb = true;
  for (const char* t : {"susy", "theta", "spin", "lattice"}) CHECK(!verify_target(t, o).pass());
  CHECK_THROWS_AS(verify_target("nonsense", VerifyOptions{}), UsageError);
  VerifyOptions bad;
  bad.order = 5;
  CHECK_THROWS_AS(verify_target("denominator", bad), UsageError);
  CHECK(default_height(1) == 4);
  CHECK(default_height(7) == 6);
}
