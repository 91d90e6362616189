#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "twistden/eta.hpp"
#include "twistden/multiplicity.hpp"
#include "twistden/verify.hpp"

using namespace twistden;

namespace {

constexpr int kOk = 0;
constexpr int kDiscrepancy = 1;
constexpr int kUsage = 2;

struct Config {
  std::optional<int> order;
  std::int64_t height = 0;
  std::string prec = "50";
  std::optional<std::string> max_norm;
  std::string format = "text";
  int jobs = 1;
  std::string out;
  bool perturb = false;
};

void emit(const Config& cfg, const std::string& text) {
  if (cfg.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(cfg.out, std::ios::binary);
  if (!f) throw UsageError("cannot open output file '" + cfg.out + "'");
  f << text;
  if (!f) throw UsageError("failed writing '" + cfg.out + "'");
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string r = "\"";
  for (char c : s) r += c == '"' ? std::string("\"\"") : std::string(1, c);
  return r + "\"";
}

std::string report_csv(const Report& r) {
  std::string s = "name,range,pass,location,expected,got\n";
  for (const auto& c : r.checks) {
    s += csv_escape(c.name) + "," + csv_escape(c.range) + "," + (c.pass ? "true" : "false");
    if (c.first_discrepancy)
      s += "," + csv_escape(c.first_discrepancy->location) + "," + csv_escape(c.first_discrepancy->expected) + "," +
           csv_escape(c.first_discrepancy->got);
    else
      s += ",,,";
    s += "\n";
  }
  return s;
}

Rational positive_rational(const std::string& text, const char* what) {
  Rational x;
  try {
    x = parse_rational(text);
  } catch (const Error&) {
    throw UsageError(std::string(what) + " must be a rational number, got '" + text + "'");
  }
  if (x <= 0) throw UsageError(std::string(what) + " must be positive");
  return x;
}

VerifyOptions options_from(const Config& cfg) {
  VerifyOptions o;
  o.order = cfg.order;
  o.height = cfg.height;
  o.prec = positive_rational(cfg.prec, "--prec");
  if (cfg.max_norm) o.max_norm = parse_rational(*cfg.max_norm);
  o.jobs = cfg.jobs;
  o.perturb = cfg.perturb;
  if (o.jobs < 1) throw UsageError("--jobs must be at least 1");
  if (o.height < 0) throw UsageError("--height must be positive");
  if (o.order && *o.order != 1 && *o.order != 3 && *o.order != 7)
    throw UsageError("unsupported twist order " + std::to_string(*o.order) + " (choose 1, 3 or 7)");
  return o;
}

void warn_untwisted(const VerifyOptions& o) {
  if ((!o.order || *o.order == 1) && o.height > 4)
    std::cerr << "warning: the untwisted check above height 4 needs a lot of time and memory\n";
}

std::vector<std::pair<std::string, std::string>> params_of(const VerifyOptions& o, bool with_height,
                                                           bool with_prec) {
  std::vector<std::pair<std::string, std::string>> p;
  p.emplace_back("order", o.order ? std::to_string(*o.order) : "all");
  if (with_height) p.emplace_back("height", o.height > 0 ? std::to_string(o.height) : "default");
  if (with_prec) p.emplace_back("prec", to_string(o.prec));
  if (o.max_norm) p.emplace_back("max_norm", to_string(*o.max_norm));
  if (o.perturb) p.emplace_back("perturb", "true");
  return p;
}

int cmd_verify(const std::string& target, const Config& cfg) {
  const VerifyOptions o = options_from(cfg);
  warn_untwisted(o);
  Report r = verify_target(target, o);
  const bool heights = target == "mult" || target == "denominator";
  const bool precs = target == "susy" || target == "theta";
  r.params = params_of(o, heights, precs);
  if (cfg.format == "json")
    emit(cfg, to_json(r));
  else if (cfg.format == "csv")
    emit(cfg, report_csv(r));
  else
    emit(cfg, to_text(r));
  return r.pass() ? kOk : kDiscrepancy;
}

int cmd_table(const std::string& kind, const Config& cfg) {
  const VerifyOptions o = options_from(cfg);
  if (!o.order) throw UsageError("table needs --order");
  const int order = *o.order;
  const std::int64_t h = o.height > 0 ? o.height : default_height(order);
  warn_untwisted(VerifyOptions{order, h});
  if (kind == "simple_roots") {
    const TwistClass tc = TwistClass::build(order, 0);
    std::ostringstream s;
    if (cfg.format == "json") {
      s << "{\n  \"order\": \"" << order << "\",\n  \"rows\": [";
      for (std::int64_t k = 1; k <= h; ++k) {
        const MultPair m = simple_root_mult(tc, k);
        s << (k == 1 ? "\n" : ",\n") << "    {\"k\": \"" << k << "\", \"mult_even\": \"" << to_string(m.even)
          << "\", \"mult_odd\": \"" << to_string(m.odd) << "\"}";
      }
      s << (h >= 1 ? "\n  ]\n}\n" : "]\n}\n");
    } else {
      s << "k,mult_even,mult_odd\n";
      for (std::int64_t k = 1; k <= h; ++k) {
        const MultPair m = simple_root_mult(tc, k);
        s << k << "," << to_string(m.even) << "," << to_string(m.odd) << "\n";
      }
    }
    emit(cfg, s.str());
    return kOk;
  }
  Rational depth = depth_for_height(h);
  if (o.max_norm && *o.max_norm / 2 < depth) depth = *o.max_norm / 2;
  if (depth < 0) depth = 0;
  const TwistClass tc = TwistClass::build(order, depth);
  std::vector<MultRow> rows;
  try {
    rows = build_mult_table(tc, h, o.max_norm);
  } catch (const TheoremClosedFormMismatch& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kDiscrepancy;
  } catch (const NonIntegralMultiplicity& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kDiscrepancy;
  }
  emit(cfg, cfg.format == "json" ? mult_table_json(rows) : mult_table_csv(rows));
  return kOk;
}

int cmd_dump(const std::string& name, const Config& cfg) {
  const auto which = parse_series_name(name);
  if (!which) throw UsageError("unknown series '" + name + "' (choose fake_c, c3, c7, a3, a7)");
  const Rational prec = positive_rational(cfg.prec, "--prec");
  const QSeries s = named_series(*which, prec);
  const std::int64_t count = to_int64(ceil_of(prec));
  std::ostringstream out;
  if (cfg.format == "json") {
    out << "{\n  \"series\": \"" << name << "\",\n  \"prec\": \"" << to_string(prec) << "\",\n  \"coefficients\": [";
    for (std::int64_t n = 0; n < count; ++n)
      out << (n ? ", " : "") << "\"" << to_string(s.coefficient(Rational(n))) << "\"";
    out << "]\n}\n";
  } else if (cfg.format == "csv") {
    out << "n,coefficient\n";
    for (std::int64_t n = 0; n < count; ++n) out << n << "," << to_string(s.coefficient(Rational(n))) << "\n";
  } else {
    for (std::int64_t n = 0; n < count; ++n) out << (n ? ", " : "") << to_string(s.coefficient(Rational(n)));
    out << "\n";
  }
  emit(cfg, out.str());
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact checks of twisted denominator identities for the fake monster superalgebra"};
  app.require_subcommand(1);
  app.set_config("--config", "", "INI file of key=value defaults; command-line flags win");
  Config cfg;
  app.add_option("--order", cfg.order, "Twist order: 1 (untwisted), 3 or 7");
  app.add_option("--height", cfg.height, "Height bound H for mult and denominator");
  app.add_option("--prec", cfg.prec, "Series precision P (exponents below P)");
  app.add_option("--max-norm", cfg.max_norm, "Only roots with -alpha^2 <= max-norm");
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--jobs", cfg.jobs, "Worker threads for the product expansion");
  app.add_option("--out", cfg.out, "Write output here instead of stdout");
  app.add_flag("--perturb", cfg.perturb, "Inject a fault to exercise failure reporting")->group("");

  std::string target, kind, series;
  auto* verify = app.add_subcommand("verify", "Run a verification and write a report");
  verify->fallthrough();
  verify->add_option("target", target,
                     "susy: twisted Jacobi identities\n"
                     "theta: theta-coset formulas against enumeration\n"
                     "spin: octonionic twist elements and triality\n"
                     "lattice: fixed sublattices and complements\n"
                     "mult: trace formula against the closed multiplicities\n"
                     "denominator: product side against sum side")
      ->required()
      ->check(CLI::IsMember({"susy", "theta", "spin", "lattice", "mult", "denominator"}));
  auto* table = app.add_subcommand("table", "Write a multiplicity table");
  table->fallthrough();
  table->add_option("kind", kind, "mult or simple_roots")->required()->check(CLI::IsMember({"mult", "simple_roots"}));
  auto* dump = app.add_subcommand("dump", "Write the coefficients of a named series");
  dump->fallthrough();
  dump->add_option("series", series, "fake_c, c3, c7, a3 or a7")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*verify) return cmd_verify(target, cfg);
    if (*table) return cmd_table(kind, cfg);
    return cmd_dump(series, cfg);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
}
