// Acceptance criteria 1-9. Prints one line per criterion; exit status 1 if any fails.
// With an argument N only criterion N runs.

#include <chrono>
#include <functional>
#include <iostream>
#include <regex>
#include <string>

#include "twistden/eta.hpp"
#include "twistden/multiplicity.hpp"
#include "twistden/verify.hpp"

using namespace twistden;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

Outcome from_report(const Report& r) {
  for (const auto& c : r.checks)
    if (!c.pass) {
      Outcome o{false, c.name};
      if (c.first_discrepancy)
        o.detail += " at " + c.first_discrepancy->location + ": expected " + c.first_discrepancy->expected +
                    ", got " + c.first_discrepancy->got;
      return o;
    }
  return {};
}

Outcome merge(Outcome a, const Outcome& b) { return a.pass ? b : a; }

Report run(const std::string& target, std::optional<int> order, std::int64_t height, Rational prec, int jobs = 1) {
  VerifyOptions o;
  o.order = order;
  o.height = height;
  o.prec = prec;
  o.jobs = jobs;
  return verify_target(target, o);
}

Outcome series_ground_truth() {
  const std::vector<std::pair<NamedSeries, std::vector<long>>> cases{
      {NamedSeries::fake_c, {8, 128, 1152, 7680, 42112}},
      {NamedSeries::c3, {2, 8, 24, 72, 184, 432, 984, 2112}},
      {NamedSeries::c7, {1, 2, 4, 8, 14, 24, 40, 66}},
      {NamedSeries::a3, {1, -4, 4, -4, 20, -24, 4}},
      {NamedSeries::a7, {1, -2, 0, 0, 2, 0, 0, -2, 4, -2, 0, -4}}};
  for (const auto& [which, expected] : cases) {
    const QSeries s = named_series(which, Rational(static_cast<long>(expected.size())));
    for (std::size_t n = 0; n < expected.size(); ++n)
      if (s.coefficient(Rational(static_cast<long>(n))) != expected[n])
        return {false, std::string(series_name(which)) + " at q^" + std::to_string(n) + ": expected " +
                           std::to_string(expected[n]) + ", got " + to_string(s.coefficient(Rational(static_cast<long>(n))))};
  }
  return {};
}

Outcome jacobi() {
  return merge(from_report(run("susy", 3, 0, 200)), from_report(run("susy", 7, 0, 200)));
}

Outcome spin() {
  return merge(from_report(run("spin", 3, 0, 50)), from_report(run("spin", 7, 0, 50)));
}

Outcome lattice() { return from_report(run("lattice", std::nullopt, 0, 10)); }

Outcome theta() { return from_report(run("theta", std::nullopt, 0, 20)); }

Outcome multiplicities() {
  Outcome o = merge(from_report(run("mult", 3, 6, 50)), from_report(run("mult", 7, 6, 50)));
  for (int order : {3, 7}) {
    const TwistClass tc = TwistClass::build(order, depth_for_height(6));
    try {
      build_mult_table(tc, 6);
    } catch (const Error& e) {
      o = merge(o, Outcome{false, e.what()});
    }
  }
  return o;
}

Outcome twisted_denominators() {
  return merge(from_report(run("denominator", 3, 6, 50)), from_report(run("denominator", 7, 8, 50)));
}

Outcome untwisted_denominator() {
  Outcome o = from_report(run("denominator", 1, 4, 50));
  const TwistClass tc = TwistClass::build(1, 0);
  for (std::int64_t k = 1; k <= 4; ++k)
    if (simple_root_mult(tc, k) != MultPair{8, 8}) o = merge(o, Outcome{false, "simple root multiple " + std::to_string(k)});
  return o;
}

std::string strip_wall(const std::string& json) {
  return std::regex_replace(json, std::regex("\"wall_ms\": \"[0-9]+\""), "\"wall_ms\": \"\"");
}

Outcome determinism() {
  struct Run {
    std::string target;
    int order;
    std::int64_t height;
  };
  const std::vector<Run> runs{{"mult", 3, 6}, {"mult", 7, 6}, {"denominator", 3, 6}, {"denominator", 7, 8},
                              {"denominator", 1, 4}};
  for (const auto& r : runs) {
    const std::string base = strip_wall(to_json(run(r.target, r.order, r.height, 50, 1)));
    for (int jobs : {2, 8})
      if (strip_wall(to_json(run(r.target, r.order, r.height, 50, jobs))) != base)
        return {false, r.target + " order " + std::to_string(r.order) + " differs with " + std::to_string(jobs) +
                           " jobs"};
  }
  return {};
}

struct Criterion {
  int id;
  const char* title;
  long long limit_ms;
  std::function<Outcome()> body;
};

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> criteria{
      {1, "series ground truth", 1000, series_ground_truth},
      {2, "twisted Jacobi identities to q^200", 5000, jacobi},
      {3, "spin construction", 1000, spin},
      {4, "lattice facts", 5000, lattice},
      {5, "theta-coset formulas to q^20", 10000, theta},
      {6, "multiplicity cross-check, height <= 6", 60000, multiplicities},
      {7, "twisted denominator identities", 600000, twisted_denominators},
      {8, "untwisted denominator identity, height 4", 900000, untwisted_denominator},
      {9, "determinism over jobs 1, 2, 8", 3600000, determinism},
  };
  const int only = argc > 1 ? std::stoi(argv[1]) : 0;
  bool all = true;
  for (const auto& c : criteria) {
    if (only && c.id != only) continue;
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.body();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const long long ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
    if (o.pass && ms > c.limit_ms) o = {false, "over the time limit of " + std::to_string(c.limit_ms) + " ms"};
    all = all && o.pass;
    std::cout << "criterion " << c.id << ": " << (o.pass ? "PASS" : "FAIL") << "  " << c.title << "  (" << ms
              << " ms)";
    if (!o.pass) std::cout << "  " << o.detail;
    std::cout << std::endl;
  }
  return all ? 0 : 1;
}
