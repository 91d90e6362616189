#include "twistden/multiplicity.hpp"

#include <numeric>
#include <sstream>

#include "json.hpp"

namespace twistden {

namespace {

Rational half_shift(const Rational& norm) { return (1 - norm) / 2; }

std::string range_label(std::int64_t max_height, const std::optional<Rational>& max_norm) {
  std::string r = "height <= " + std::to_string(max_height);
  if (max_norm) r += ", -alpha^2 <= " + to_string(*max_norm);
  return r;
}

std::vector<LorentzianPoint> table_points(const TwistClass& tc, std::int64_t max_height,
                                          const std::optional<Rational>& max_norm) {
  std::vector<LorentzianPoint> out;
  for (auto& p : positive_cone_enum(tc.lorentzian(), max_height))
    if (!max_norm || -tc.lorentzian().norm(p) <= *max_norm) out.push_back(std::move(p));
  return out;
}

}  // namespace

Rational depth_for_height(std::int64_t max_height) {
  return Rational(static_cast<long>((max_height / 2) * ((max_height + 1) / 2)));
}

TwistClass TwistClass::build(int order, const Rational& max_depth) {
  return from_element(build_twist_element(order), max_depth);
}

TwistClass TwistClass::from_element(const SpinElement& u, const Rational& max_depth) {
  TwistClass tc;
  const RationalMatrix v = rho_V(u), l = rho_L(u), r = rho_R(u);
  tc.order_ = matrix_order(v);
  if (tc.order_ % 2 == 0)
    throw Error("twist of even order " + std::to_string(tc.order_) + " is not supported (the convolution formula needs odd order)");
  tc.shape_V_ = cycle_shape(v);
  tc.shape_L_ = cycle_shape(l);
  tc.shape_R_ = cycle_shape(r);
  Rational tl = 0, tr = 0;
  for (std::size_t i = 0; i < 8; ++i) {
    tl += l(i, i);
    tr += r(i, i);
  }
  if (tl != tr)
    throw Error("tr rho_L(u) = " + to_string(tl) + " differs from tr rho_R(u) = " + to_string(tr));
  tc.trace_L_ = static_cast<int>(to_int64(tl));
  tc.max_depth_ = max_depth;

  tc.e8_ = e8_lattice();
  tc.fixed_ = fixed_sublattice(v, tc.e8_);
  tc.complement_ = orthogonal_complement(tc.fixed_, tc.e8_);
  tc.lorentz_ = LorentzianLattice(tc.fixed_);

  const Rational prec = max_depth + 1;
  tc.trace_even_ = trace_gf_even(tc.shape_V_, prec);
  tc.trace_odd_ = trace_gf_odd(tc.shape_V_, tc.trace_L_, prec);
  if (tc.shape_V_ == CycleShape(std::map<int, int>{{1, 8}}))
    tc.c_series_ = named_series(NamedSeries::fake_c, prec);
  else if (tc.shape_V_ == CycleShape(std::map<int, int>{{1, 2}, {3, 2}}))
    tc.c_series_ = named_series(NamedSeries::c3, prec);
  else if (tc.shape_V_ == CycleShape(std::map<int, int>{{1, 1}, {7, 1}}))
    tc.c_series_ = named_series(NamedSeries::c7, prec);

  const Rational dim_prec = max_depth / Rational(tc.order_ * tc.order_) + 1;
  for (const auto& cls : tc.lorentz_.discriminant().classes) {
    CosetData cd;
    cd.cls = cls;
    cd.complement_shift = coset_complement_shift(tc.e8_, tc.fixed_, tc.fixed_.ambient(cls.coords));
    cd.theta = theta_coset(tc.complement_, cd.complement_shift, dim_prec);
    cd.dim = dim_gf(cd.theta, dim_prec);
    tc.cosets_.push_back(std::move(cd));
  }
  return tc;
}

QSeries TwistClass::tail_series(const Rational& prec) const {
  if (shape_V_ == CycleShape(std::map<int, int>{{1, 8}})) return untwisted_tail_series(prec);
  if (shape_V_ == CycleShape(std::map<int, int>{{1, 2}, {3, 2}})) return named_series(NamedSeries::a3, prec);
  if (shape_V_ == CycleShape(std::map<int, int>{{1, 1}, {7, 1}})) return named_series(NamedSeries::a7, prec);
  throw Error("no tail series for cycle shape " + shape_V_.to_string());
}

Rational trace_term(const TwistClass& tc, std::int64_t d, const LorentzianPoint& beta, Parity parity) {
  const auto& lz = tc.lorentzian();
  const Rational x = half_shift(lz.norm(beta));
  const std::int64_t n = tc.order();
  if (d % n == 0) return tc.cosets()[lz.coset_index(beta)].dim.coefficient(x);
  if (std::gcd(d, n) == 1) {
    if (!lz.in_lattice(beta)) return 0;
    return (parity == Parity::even ? tc.trace_even() : tc.trace_odd()).coefficient(x);
  }
  throw ExtensionBoundary("trace of g^" + std::to_string(d) + " for order " + std::to_string(n) +
                          " needs the fixed lattice of a proper power");
}

BigInt mult_theorem1(const TwistClass& tc, const LorentzianPoint& alpha, Parity parity) {
  const std::int64_t g = std::gcd(pairing_divisor(alpha), static_cast<std::int64_t>(tc.order()));
  Rational sum = 0;
  for (std::int64_t d : divisors(g)) {
    for (std::int64_t s : divisors(g / d)) {
      const int mu = mobius(s);
      if (mu == 0) continue;
      sum += Rational(mu) / Rational(static_cast<long>(d * s)) * trace_term(tc, d, divide(alpha, d * s), parity);
    }
  }
  if (!is_integer(sum))
    throw NonIntegralMultiplicity("multiplicity " + to_string(sum) + " at " + alpha.to_string() + " is not an integer");
  return sum.get_num();
}

MultPair mult_closed(const TwistClass& tc, const LorentzianPoint& alpha) {
  if (!tc.c_series()) throw Error("no closed form for cycle shape " + tc.shape_V().to_string());
  const auto& lz = tc.lorentzian();
  if (!lz.in_lattice(alpha)) return {0, 0};
  const auto& c = *tc.c_series();
  const Rational depth = -lz.norm(alpha) / 2;
  Rational v = c.coefficient(depth);
  const std::int64_t n = tc.order();
  if (n > 1 && lz.in_scaled_dual(alpha, n)) v += c.coefficient(depth / Rational(static_cast<long>(n)));
  return {v.get_num(), v.get_num()};
}

MultPair simple_root_mult(const TwistClass& tc, std::int64_t k) {
  if (k < 1) throw Error("simple root multiple must be positive");
  return {tc.shape_V().divisor_sum(static_cast<int>(k)), tc.shape_L().divisor_sum(static_cast<int>(k))};
}

std::vector<MultRow> build_mult_table(const TwistClass& tc, std::int64_t max_height,
                                      const std::optional<Rational>& max_norm) {
  std::vector<MultRow> rows;
  const auto& lz = tc.lorentzian();
  for (const auto& p : table_points(tc, max_height, max_norm)) {
    MultRow base{p, lz.coset_label(p), lz.norm(p), pairing_divisor(p), 0, 0, ""};
    MultRow t = base, c = base;
    t.mult_even = mult_theorem1(tc, p, Parity::even);
    t.mult_odd = mult_theorem1(tc, p, Parity::odd);
    t.source = "theorem1";
    const MultPair cl = mult_closed(tc, p);
    c.mult_even = cl.even;
    c.mult_odd = cl.odd;
    c.source = "closed";
    if (t.mult_even != c.mult_even || t.mult_odd != c.mult_odd)
      throw TheoremClosedFormMismatch("at " + p.to_string() + ": trace formula gives (" + to_string(t.mult_even) + ", " +
                                      to_string(t.mult_odd) + "), closed form gives (" + to_string(c.mult_even) + ", " +
                                      to_string(c.mult_odd) + ")");
    rows.push_back(std::move(t));
    rows.push_back(std::move(c));
  }
  return rows;
}

std::vector<Check> verify_multiplicities(const TwistClass& tc, std::int64_t max_height,
                                         const std::optional<Rational>& max_norm) {
  const std::string range = range_label(max_height, max_norm);
  const std::string tag = " [order " + std::to_string(tc.order()) + "]";
  Check agree{"trace formula == closed form" + tag, range, true, std::nullopt};
  Check integral{"multiplicities are nonnegative integers" + tag, range, true, std::nullopt};
  Check susy{"mult_even == mult_odd" + tag, range, true, std::nullopt};
  Check support{"zero multiplicity off L" + tag, range, true, std::nullopt};
  Check simple{"isotropic roots carry the simple-root multiplicities" + tag, range, true, std::nullopt};
  auto fail = [](Check& c, const LorentzianPoint& p, std::string expected, std::string got) {
    if (!c.pass) return;
    c.pass = false;
    c.first_discrepancy = Discrepancy{p.to_string(), std::move(expected), std::move(got)};
  };
  const auto& lz = tc.lorentzian();
  for (const auto& p : table_points(tc, max_height, max_norm)) {
    BigInt te, to;
    try {
      te = mult_theorem1(tc, p, Parity::even);
      to = mult_theorem1(tc, p, Parity::odd);
    } catch (const NonIntegralMultiplicity& e) {
      fail(integral, p, "integer", e.what());
      continue;
    }
    if (te < 0 || to < 0) fail(integral, p, ">= 0", to_string(te < 0 ? te : to));
    if (te != to) fail(susy, p, to_string(te), to_string(to));
    const MultPair cl = mult_closed(tc, p);
    if (cl.even != te) fail(agree, p, to_string(cl.even), to_string(te));
    else if (cl.odd != to) fail(agree, p, to_string(cl.odd), to_string(to));
    if (!lz.in_lattice(p) && (te != 0 || to != 0)) fail(support, p, "0", to_string(te != 0 ? te : to));
    if (lz.norm(p) == 0 && lz.in_lattice(p)) {
      BigInt k = gcd(BigInt(static_cast<long>(p.m)), BigInt(static_cast<long>(p.n)));
      for (const auto& x : lz.lattice_coordinates(p)) k = gcd(k, x.get_num());
      const MultPair sr = simple_root_mult(tc, to_int64(k));
      if (sr.even != te) fail(simple, p, to_string(sr.even), to_string(te));
      else if (sr.odd != to) fail(simple, p, to_string(sr.odd), to_string(to));
    }
  }
  return {agree, integral, susy, support, simple};
}

std::string mult_table_csv(const std::vector<MultRow>& rows) {
  std::ostringstream out;
  out << "r_star,coset,m,n,norm,pairing,mult_even,mult_odd,source\n";
  for (const auto& r : rows) {
    out << "\"";
    for (std::size_t i = 0; i < r.alpha.r.size(); ++i) out << (i ? " " : "") << r.alpha.r[i];
    out << "\",\"" << r.coset << "\"," << r.alpha.m << "," << r.alpha.n << "," << to_string(r.norm) << ","
        << r.pairing << "," << to_string(r.mult_even) << "," << to_string(r.mult_odd) << "," << r.source << "\n";
  }
  return out.str();
}

std::string mult_table_json(const std::vector<MultRow>& rows) {
  nlohmann::ordered_json a = nlohmann::ordered_json::array();
  for (const auto& r : rows) {
    nlohmann::ordered_json j;
    nlohmann::ordered_json rs = nlohmann::ordered_json::array();
    for (auto x : r.alpha.r) rs.push_back(std::to_string(x));
    j["r_star"] = rs;
    j["coset"] = r.coset;
    j["m"] = std::to_string(r.alpha.m);
    j["n"] = std::to_string(r.alpha.n);
    j["norm"] = to_string(r.norm);
    j["pairing"] = std::to_string(r.pairing);
    j["mult_even"] = to_string(r.mult_even);
    j["mult_odd"] = to_string(r.mult_odd);
    j["source"] = r.source;
    a.push_back(std::move(j));
  }
  return a.dump(2) + "\n";
}

}  // namespace twistden
