#include "twistden/eta.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace twistden {

namespace {

using Dense = std::vector<BigInt>;

std::int64_t grid_count(const Rational& prec, std::int64_t denom) {
  if (prec <= 0) return 0;
  return to_int64(ceil_of(prec * Rational(static_cast<long>(denom))));
}

Dense multiply_truncated(const Dense& a, const Dense& b, std::size_t count) {
  Dense out(count);
  for (std::size_t i = 0; i < a.size() && i < count; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size() && i + j < count; ++j) {
      if (b[j] == 0) continue;
      mpz_addmul(out[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
    }
  }
  return out;
}

// f^e for a unit series f (f[0] == 1) from n g_n = sum_k (e k - (n - k)) f_k g_{n-k}.
Dense unit_power(const Dense& f, long e, std::size_t count) {
  Dense g(count);
  if (count == 0) return g;
  g[0] = 1;
  std::vector<std::size_t> support;
  for (std::size_t k = 1; k < f.size() && k < count; ++k)
    if (f[k] != 0) support.push_back(k);
  BigInt acc, w;
  for (std::size_t n = 1; n < count; ++n) {
    acc = 0;
    for (std::size_t k : support) {
      if (k > n) break;
      w = e * static_cast<long>(k) - static_cast<long>(n - k);
      w *= f[k];
      mpz_addmul(acc.get_mpz_t(), w.get_mpz_t(), g[n - k].get_mpz_t());
    }
    mpz_divexact_ui(g[n].get_mpz_t(), acc.get_mpz_t(), static_cast<unsigned long>(n));
  }
  return g;
}

QSeries dense_to_series(const Dense& d, std::int64_t denom, const Rational& trunc, const Rational& scale = 1) {
  QSeries::Terms t;
  for (std::size_t i = 0; i < d.size(); ++i)
    if (d[i] != 0) t.emplace(static_cast<std::int64_t>(i), Rational(d[i]) * scale);
  return QSeries(denom, std::move(t), trunc);
}

// prod_n prod_a (1 - (-sign x)^a)^{power * b_a} with x = q^{n - shift}, on the grid (1/2)Z.
Dense cycle_dense(const CycleShape& shape, ProductSign sign, ExponentShift shift, int power, std::size_t count) {
  Dense p(count);
  if (count == 0) return p;
  p[0] = 1;
  const int s = sign == ProductSign::plus ? 1 : -1;
  for (const auto& [a, b] : shape.cycles()) {
    // (1 - (-s)^a x^a) = 1 + c x^a
    const int neg_s_pow = (a % 2 == 0) ? 1 : -s;
    const long c = -neg_s_pow;
    for (std::int64_t n = 1;; ++n) {
      const std::int64_t e2 = shift == ExponentShift::integral ? 2 * a * n : a * (2 * n - 1);
      if (e2 >= static_cast<std::int64_t>(count)) break;
      const auto e = static_cast<std::size_t>(e2);
      for (int rep = 0; rep < b; ++rep) {
        if (power > 0) {
          for (std::size_t i = count - 1; i >= e; --i) {
            if (c == 1)
              p[i] += p[i - e];
            else
              p[i] -= p[i - e];
            if (i == e) break;
          }
        } else {
          for (std::size_t i = e; i < count; ++i) {
            if (c == 1)
              p[i] -= p[i - e];
            else
              p[i] += p[i - e];
          }
        }
      }
    }
  }
  return p;
}

EtaQuotient quotient(std::initializer_list<EtaQuotient::Factor> fs) { return EtaQuotient(std::vector(fs)); }

std::string exponent_label(const Rational& e) { return "q^" + to_string(e); }

}  // namespace

EtaQuotient::EtaQuotient(std::vector<Factor> factors) : factors_(std::move(factors)) {
  std::set<int> scales;
  for (const auto& f : factors_) {
    if (f.scale <= 0) throw Error("eta quotient scales must be positive");
    if (!scales.insert(f.scale).second) throw Error("eta quotient scales must be distinct");
  }
}

Rational EtaQuotient::leading_exponent() const {
  Rational v = 0;
  for (const auto& f : factors_) v += make_rational(static_cast<long>(f.scale) * f.exponent, 24);
  return v;
}

std::vector<BigInt> euler_product(std::size_t count) {
  std::vector<BigInt> p(count);
  for (std::size_t k = 0;; ++k) {
    const std::size_t lo = k * (3 * k - 1) / 2, hi = k * (3 * k + 1) / 2;
    if (k > 0 && lo >= count) break;
    const int sign = k % 2 == 0 ? 1 : -1;
    if (k == 0) {
      if (count > 0) p[0] = 1;
      continue;
    }
    p[lo] = sign;
    if (hi < count) p[hi] = sign;
  }
  return p;
}

QSeries eta_expand(const EtaQuotient& spec, const Rational& prec) {
  const Rational lead = spec.leading_exponent();
  if (prec <= lead)
    throw Error("eta quotient precision q^" + to_string(prec) + " does not exceed leading exponent " +
                to_string(lead));
  const Rational rel = prec - lead;
  const auto count = static_cast<std::size_t>(grid_count(rel, 1));
  Dense product(count);
  product[0] = 1;
  for (const auto& f : spec.factors()) {
    const std::size_t m = (count + static_cast<std::size_t>(f.scale) - 1) / static_cast<std::size_t>(f.scale);
    const Dense unit = unit_power(euler_product(m), f.exponent, m);
    Dense spread(count);
    for (std::size_t i = 0; i < m; ++i) spread[i * static_cast<std::size_t>(f.scale)] = unit[i];
    product = multiply_truncated(product, spread, count);
  }
  return shift(dense_to_series(product, 1, rel), lead);
}

std::string_view series_name(NamedSeries s) {
  switch (s) {
    case NamedSeries::fake_c: return "fake_c";
    case NamedSeries::c3: return "c3";
    case NamedSeries::c7: return "c7";
    case NamedSeries::a3: return "a3";
    case NamedSeries::a7: return "a7";
  }
  return "";
}

std::optional<NamedSeries> parse_series_name(std::string_view name) {
  for (auto s : all_named_series())
    if (series_name(s) == name) return s;
  return std::nullopt;
}

std::vector<NamedSeries> all_named_series() {
  return {NamedSeries::fake_c, NamedSeries::c3, NamedSeries::c7, NamedSeries::a3, NamedSeries::a7};
}

QSeries named_series(NamedSeries s, const Rational& prec) {
  switch (s) {
    case NamedSeries::fake_c:
      return Rational(8) * eta_expand(quotient({{2, 8}, {1, -16}}), prec);
    case NamedSeries::c3:
      return Rational(2) * eta_expand(quotient({{6, 2}, {2, 2}, {3, -4}, {1, -4}}), prec);
    case NamedSeries::c7:
      return eta_expand(quotient({{14, 1}, {2, 1}, {7, -2}, {1, -2}}), prec);
    case NamedSeries::a3:
      // prod (1-q^{3n})^2 (1-q^n)^2 / (1+q^{3n})^2 (1+q^n)^2 with 1+q^n = (1-q^{2n})/(1-q^n)
      return eta_expand(quotient({{3, 4}, {1, 4}, {6, -2}, {2, -2}}), prec);
    case NamedSeries::a7:
      return eta_expand(quotient({{7, 2}, {1, 2}, {14, -1}, {2, -1}}), prec);
  }
  throw Error("unknown named series");
}

QSeries untwisted_tail_series(const Rational& prec) { return eta_expand(quotient({{1, 16}, {2, -8}}), prec); }

CycleShape::CycleShape(std::map<int, int> cycles) {
  for (const auto& [a, b] : cycles) {
    if (a <= 0 || b < 0) throw Error("cycle lengths must be positive and multiplicities nonnegative");
    if (b > 0) cycles_.emplace(a, b);
  }
}

CycleShape CycleShape::parse(std::string_view text) {
  std::map<int, int> cycles;
  std::string s(text);
  for (char& ch : s)
    if (ch == '.' || ch == ',') ch = ' ';
  std::istringstream in(s);
  std::string tok;
  while (in >> tok) {
    auto caret = tok.find('^');
    try {
      int a = std::stoi(tok.substr(0, caret));
      int b = caret == std::string::npos ? 1 : std::stoi(tok.substr(caret + 1));
      cycles[a] += b;
    } catch (const std::exception&) {
      throw Error("malformed cycle shape '" + std::string(text) + "'");
    }
  }
  return CycleShape(cycles);
}

int CycleShape::degree() const {
  int d = 0;
  for (const auto& [a, b] : cycles_) d += a * b;
  return d;
}

int CycleShape::trace() const {
  auto it = cycles_.find(1);
  return it == cycles_.end() ? 0 : it->second;
}

int CycleShape::divisor_sum(int k) const {
  int s = 0;
  for (const auto& [a, b] : cycles_)
    if (k % a == 0) s += b;
  return s;
}

std::vector<BigInt> CycleShape::characteristic_polynomial() const {
  std::vector<BigInt> poly{1};
  for (const auto& [a, b] : cycles_) {
    for (int rep = 0; rep < b; ++rep) {
      std::vector<BigInt> next(poly.size() + static_cast<std::size_t>(a));
      for (std::size_t i = 0; i < poly.size(); ++i) {
        next[i] -= poly[i];
        next[i + static_cast<std::size_t>(a)] += poly[i];
      }
      poly = std::move(next);
    }
  }
  return poly;
}

std::string CycleShape::to_string() const {
  std::string out;
  for (const auto& [a, b] : cycles_) {
    if (!out.empty()) out += " ";
    out += std::to_string(a) + "^" + std::to_string(b);
  }
  return out;
}

QSeries cycle_product(const CycleShape& shape, ProductSign sign, ExponentShift shift, const Rational& prec) {
  const auto count = static_cast<std::size_t>(grid_count(prec, 2));
  return dense_to_series(cycle_dense(shape, sign, shift, +1, count), 2, prec);
}

QSeries trace_gf_even(const CycleShape& shape, const Rational& prec) {
  const auto count = static_cast<std::size_t>(grid_count(prec, 2));
  Dense plus = cycle_dense(shape, ProductSign::plus, ExponentShift::half, +1, count);
  const Dense minus = cycle_dense(shape, ProductSign::minus, ExponentShift::half, +1, count);
  for (std::size_t i = 0; i < count; ++i) plus[i] -= minus[i];
  const Dense denom_inv = cycle_dense(shape, ProductSign::minus, ExponentShift::integral, -1, count);
  return dense_to_series(multiply_truncated(plus, denom_inv, count), 2, prec, make_rational(1, 2));
}

QSeries trace_gf_odd(const CycleShape& shape, int trace_L, const Rational& prec) {
  if (trace_L == 0) return QSeries::zero(prec);
  const Rational unit_prec = prec - make_rational(1, 2);
  const auto count = static_cast<std::size_t>(grid_count(unit_prec, 2));
  const Dense num = cycle_dense(shape, ProductSign::plus, ExponentShift::integral, +1, count);
  const Dense den = cycle_dense(shape, ProductSign::minus, ExponentShift::integral, -1, count);
  QSeries unit = dense_to_series(multiply_truncated(num, den, count), 2, unit_prec, Rational(trace_L));
  return shift(unit, make_rational(1, 2));
}

Check compare_series(std::string name, const QSeries& expected, const QSeries& got) {
  Check c;
  c.name = std::move(name);
  const auto t = min_trunc(expected.trunc(), got.trunc());
  c.range = t ? "below " + exponent_label(*t) : "exact";
  if (auto e = first_difference(expected, got)) {
    c.pass = false;
    c.first_discrepancy =
        Discrepancy{exponent_label(*e), to_string(expected.coefficient(*e)), to_string(got.coefficient(*e))};
  }
  return c;
}

std::vector<Check> verify_susy_identity(const CycleShape& shape, int trace_L, const Rational& prec) {
  std::vector<Check> out;
  const std::string tag = "[" + shape.to_string() + "]";
  out.push_back(compare_series("trace generating functions even == odd " + tag, trace_gf_even(shape, prec),
                               trace_gf_odd(shape, trace_L, prec)));

  const Rational wide = prec + make_rational(1, 2);
  QSeries diff = cycle_product(shape, ProductSign::plus, ExponentShift::half, wide) -
                 cycle_product(shape, ProductSign::minus, ExponentShift::half, wide);
  QSeries lhs = shift(make_rational(1, 2) * diff, make_rational(-1, 2));
  QSeries rhs = Rational(trace_L) * cycle_product(shape, ProductSign::plus, ExponentShift::integral, prec);
  out.push_back(compare_series("product identity " + tag, rhs, lhs));
  return out;
}

std::vector<Check> verify_susy_identity(int order, const Rational& prec) {
  switch (order) {
    case 1: return verify_susy_identity(CycleShape(std::map<int, int>{{1, 8}}), 8, prec);
    case 3: return verify_susy_identity(CycleShape(std::map<int, int>{{1, 2}, {3, 2}}), 2, prec);
    case 7: return verify_susy_identity(CycleShape(std::map<int, int>{{1, 1}, {7, 1}}), 1, prec);
    default: throw Error("no shipped twist of order " + std::to_string(order));
  }
}

QSeries dim_gf(const QSeries& coset_theta, const Rational& prec) {
  const Rational half = make_rational(1, 2);
  QSeries c = named_series(NamedSeries::fake_c, prec - half);
  return shift(c * coset_theta, half).truncated(prec);
}

std::vector<Rational> theta_norm_classes(ThetaCase which) {
  if (which == ThetaCase::A2A2) return {0, make_rational(2, 3), make_rational(4, 3)};
  return {0, make_rational(6, 7), make_rational(10, 7), make_rational(12, 7)};
}

QSeries theta_coset_formula(ThetaCase which, const Rational& norm_class, const Rational& prec) {
  const Rational cls = mod_positive(norm_class, 2);
  const auto valid = theta_norm_classes(which);
  if (std::find(valid.begin(), valid.end(), cls) == valid.end())
    throw InvalidClass("norm class " + to_string(cls) + " mod 2 is not realized by a coset");

  const bool a2a2 = which == ThetaCase::A2A2;
  const std::int64_t m = a2a2 ? 3 : 7;
  const Rational pre_scale = a2a2 ? make_rational(1, 4) : make_rational(1, 8);
  const EtaQuotient prefactor = a2a2 ? quotient({{1, 12}, {2, -6}}) : quotient({{1, 14}, {2, -7}});
  const EtaQuotient delta_term = a2a2 ? quotient({{6, 2}, {3, -4}}) : quotient({{14, 1}, {7, -2}});
  // eta(x^2)^2/eta(x)^4 for A2+A2; the weight-matching eta(x^2)/eta(x)^2 for A6.
  const EtaQuotient sectioned = a2a2 ? quotient({{2, 2}, {1, -4}}) : quotient({{2, 1}, {1, -2}});

  // sum_j eps^{-m j r^2/2} f(eps^j x) = m * (terms of f with exponent = m r^2/2 mod m)
  const std::int64_t residue = to_int64(Rational(m) * cls / 2);
  QSeries section = multisection(eta_expand(sectioned, Rational(m) * prec), m, residue);
  QSeries bracket = Rational(m) * substitute_power(section, make_rational(1, m));
  if (cls == 0) bracket = bracket + eta_expand(delta_term, prec);
  return (pre_scale * (eta_expand(prefactor, prec) * bracket)).truncated(prec);
}

}  // namespace twistden
