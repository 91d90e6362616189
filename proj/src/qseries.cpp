#include "twistden/qseries.hpp"

#include <algorithm>
#include <utility>

namespace twistden {

namespace {

Rational exponent_of(std::int64_t k, std::int64_t denom) { return make_rational(k, denom); }

// Smallest integer k with k/denom >= t, i.e. the first grid numerator that is not known.
std::int64_t grid_limit(const Rational& t, std::int64_t denom) {
  return to_int64(ceil_of(t * Rational(static_cast<long>(denom))));
}

std::optional<Rational> add_opt(const std::optional<Rational>& a, const std::optional<Rational>& b) {
  if (!a || !b) return std::nullopt;
  return *a + *b;
}

// Lower bound on the true valuation: the first stored exponent, else the truncation point.
std::optional<Rational> valuation_bound(const QSeries& a) {
  if (auto v = a.valuation()) return v;
  return a.trunc();
}

bool all_integral(const QSeries::Terms& terms) {
  return std::all_of(terms.begin(), terms.end(), [](const auto& kv) { return is_integer(kv.second); });
}

QSeries::Terms rescale(const QSeries::Terms& terms, std::int64_t factor) {
  if (factor == 1) return terms;
  QSeries::Terms out;
  for (const auto& [k, c] : terms) out.emplace(k * factor, c);
  return out;
}

}  // namespace

std::optional<Rational> min_trunc(const std::optional<Rational>& a, const std::optional<Rational>& b) {
  if (!a) return b;
  if (!b) return a;
  return std::min(*a, *b);
}

QSeries::QSeries(std::int64_t expdenom, Terms terms, std::optional<Rational> trunc)
    : denom_(expdenom), terms_(std::move(terms)), trunc_(std::move(trunc)) {
  if (denom_ <= 0) throw Error("exponent denominator must be positive");
  normalize();
}

void QSeries::normalize() {
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (it->second == 0 || (trunc_ && exponent_of(it->first, denom_) >= *trunc_))
      it = terms_.erase(it);
    else
      ++it;
  }
  std::int64_t g = denom_;
  for (const auto& kv : terms_) g = gcd64(g, kv.first);
  if (g > 1) {
    Terms reduced;
    for (auto& [k, c] : terms_) reduced.emplace(k / g, std::move(c));
    terms_ = std::move(reduced);
    denom_ /= g;
  }
  if (terms_.empty()) denom_ = 1;
}

QSeries QSeries::zero(std::optional<Rational> trunc) { return QSeries(1, {}, std::move(trunc)); }

QSeries QSeries::constant(const Rational& c, std::optional<Rational> trunc) {
  return monomial(c, 0, std::move(trunc));
}

QSeries QSeries::monomial(const Rational& coeff, const Rational& exponent, std::optional<Rational> trunc) {
  const auto den = to_int64(exponent.get_den());
  Terms t;
  t.emplace(to_int64(exponent.get_num()), coeff);
  return QSeries(den, std::move(t), std::move(trunc));
}

QSeries QSeries::from_integer_coefficients(const std::vector<BigInt>& coeffs, std::optional<Rational> trunc) {
  Terms t;
  for (std::size_t k = 0; k < coeffs.size(); ++k)
    if (coeffs[k] != 0) t.emplace(static_cast<std::int64_t>(k), Rational(coeffs[k]));
  if (!trunc) trunc = Rational(static_cast<long>(coeffs.size()));
  return QSeries(1, std::move(t), std::move(trunc));
}

std::optional<Rational> QSeries::valuation() const {
  if (terms_.empty()) return std::nullopt;
  return exponent_of(terms_.begin()->first, denom_);
}

Rational QSeries::coefficient(const Rational& exponent) const {
  if (trunc_ && exponent >= *trunc_)
    throw BeyondTruncation("coefficient of q^" + to_string(exponent) + " requested, series known below q^" +
                           to_string(*trunc_));
  Rational scaled = exponent * Rational(static_cast<long>(denom_));
  if (!is_integer(scaled)) return 0;
  auto it = terms_.find(to_int64(scaled));
  return it == terms_.end() ? Rational(0) : it->second;
}

std::vector<std::pair<Rational, Rational>> QSeries::items() const {
  std::vector<std::pair<Rational, Rational>> out;
  out.reserve(terms_.size());
  for (const auto& [k, c] : terms_) out.emplace_back(exponent_of(k, denom_), c);
  return out;
}

std::vector<Rational> QSeries::integer_coefficients(std::size_t count) const {
  std::vector<Rational> out;
  out.reserve(count);
  for (std::size_t k = 0; k < count; ++k) out.push_back(coefficient(Rational(static_cast<long>(k))));
  return out;
}

QSeries QSeries::truncated(const Rational& t) const {
  return QSeries(denom_, terms_, min_trunc(trunc_, t));
}

QSeries operator+(const QSeries& a, const QSeries& b) {
  const std::int64_t d = lcm64(a.expdenom(), b.expdenom());
  QSeries::Terms t = rescale(a.terms(), d / a.expdenom());
  for (const auto& [k, c] : b.terms()) t[k * (d / b.expdenom())] += c;
  return QSeries(d, std::move(t), min_trunc(a.trunc(), b.trunc()));
}

QSeries operator-(const QSeries& a) {
  QSeries::Terms t;
  for (const auto& [k, c] : a.terms()) t.emplace(k, -c);
  return QSeries(a.expdenom(), std::move(t), a.trunc());
}

QSeries operator-(const QSeries& a, const QSeries& b) { return a + (-b); }

QSeries operator*(const Rational& c, const QSeries& a) {
  if (c == 0) return QSeries::zero(a.trunc());
  QSeries::Terms t;
  for (const auto& [k, x] : a.terms()) t.emplace(k, c * x);
  return QSeries(a.expdenom(), std::move(t), a.trunc());
}

QSeries operator*(const QSeries& a, const QSeries& b) {
  const auto va = valuation_bound(a);
  const auto vb = valuation_bound(b);
  // Exact zero times anything is exact zero.
  if (a.is_exact() && a.is_zero()) return QSeries();
  if (b.is_exact() && b.is_zero()) return QSeries();
  const auto trunc = min_trunc(add_opt(a.trunc(), vb), add_opt(b.trunc(), va));
  if (a.is_zero() || b.is_zero()) return QSeries::zero(trunc);

  const std::int64_t d = lcm64(a.expdenom(), b.expdenom());
  const std::int64_t fa = d / a.expdenom();
  const std::int64_t fb = d / b.expdenom();
  const std::int64_t amin = a.terms().begin()->first * fa;
  const std::int64_t bmin = b.terms().begin()->first * fb;
  const std::int64_t amax = a.terms().rbegin()->first * fa;
  const std::int64_t bmax = b.terms().rbegin()->first * fb;
  std::int64_t limit = amax + bmax + 1;  // exclusive bound on result numerators
  if (trunc) limit = std::min(limit, grid_limit(*trunc, d));
  if (limit <= amin + bmin) return QSeries::zero(trunc);
  const std::size_t len = static_cast<std::size_t>(limit - amin - bmin);

  QSeries::Terms out;
  if (all_integral(a.terms()) && all_integral(b.terms())) {
    std::vector<BigInt> acc(len);
    for (const auto& [ka, ca] : a.terms()) {
      const std::int64_t ia = ka * fa - amin;
      const BigInt& na = ca.get_num();
      for (const auto& [kb, cb] : b.terms()) {
        const std::int64_t idx = ia + kb * fb - bmin;
        if (idx >= static_cast<std::int64_t>(len)) break;
        mpz_addmul(acc[static_cast<std::size_t>(idx)].get_mpz_t(), na.get_mpz_t(), cb.get_num_mpz_t());
      }
    }
    for (std::size_t i = 0; i < len; ++i)
      if (acc[i] != 0) out.emplace(static_cast<std::int64_t>(i) + amin + bmin, Rational(acc[i]));
  } else {
    std::vector<Rational> acc(len);
    for (const auto& [ka, ca] : a.terms()) {
      const std::int64_t ia = ka * fa - amin;
      for (const auto& [kb, cb] : b.terms()) {
        const std::int64_t idx = ia + kb * fb - bmin;
        if (idx >= static_cast<std::int64_t>(len)) break;
        acc[static_cast<std::size_t>(idx)] += ca * cb;
      }
    }
    for (std::size_t i = 0; i < len; ++i)
      if (acc[i] != 0) out.emplace(static_cast<std::int64_t>(i) + amin + bmin, std::move(acc[i]));
  }
  return QSeries(d, std::move(out), trunc);
}

QSeries shift(const QSeries& a, const Rational& exponent) {
  const std::int64_t d = lcm64(a.expdenom(), to_int64(exponent.get_den()));
  const std::int64_t off = to_int64(exponent * Rational(static_cast<long>(d)));
  QSeries::Terms t;
  for (const auto& [k, c] : a.terms()) t.emplace(k * (d / a.expdenom()) + off, c);
  std::optional<Rational> trunc;
  if (a.trunc()) trunc = *a.trunc() + exponent;
  return QSeries(d, std::move(t), trunc);
}

QSeries inverse(const QSeries& a) {
  if (a.is_zero()) throw ZeroLeadingTerm("series has no known nonzero term to invert");
  const auto& [kv, lead] = *a.terms().begin();
  const Rational v = make_rational(kv, a.expdenom());
  if (a.is_exact()) {
    if (a.terms().size() != 1) throw Error("inverse of an exact non-monomial needs a finite truncation");
    return QSeries::monomial(1 / lead, -v);
  }
  const std::int64_t d = a.expdenom();
  // Unit part u = a / (lead q^v), known below trunc - v; so is 1/u.
  const std::int64_t count = grid_limit(*a.trunc() - v, d);
  std::vector<Rational> u(static_cast<std::size_t>(count));
  for (const auto& [k, c] : a.terms()) {
    const std::int64_t idx = k - kv;
    if (idx < count) u[static_cast<std::size_t>(idx)] = c / lead;
  }
  std::vector<Rational> w(static_cast<std::size_t>(count));
  if (count > 0) w[0] = 1;
  std::vector<std::size_t> support;
  for (std::size_t k = 1; k < u.size(); ++k)
    if (u[k] != 0) support.push_back(k);
  for (std::size_t n = 1; n < w.size(); ++n) {
    Rational s = 0;
    for (std::size_t k : support) {
      if (k > n) break;
      s += u[k] * w[n - k];
    }
    w[n] = -s;
  }
  QSeries::Terms t;
  const Rational inv_lead = 1 / lead;
  for (std::size_t n = 0; n < w.size(); ++n)
    if (w[n] != 0) t.emplace(static_cast<std::int64_t>(n) - kv, w[n] * inv_lead);
  return QSeries(d, std::move(t), *a.trunc() - 2 * v);
}

QSeries power(const QSeries& a, std::int64_t e) {
  if (e == 0) return QSeries::constant(1);
  if (e < 0) return power(inverse(a), -e);
  QSeries result = QSeries::constant(1);
  QSeries base = a;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

QSeries substitute_power(const QSeries& a, const Rational& k) {
  if (k <= 0) throw Error("substitution exponent must be positive");
  const std::int64_t p = to_int64(k.get_num());
  const std::int64_t s = to_int64(k.get_den());
  QSeries::Terms t;
  for (const auto& [e, c] : a.terms()) t.emplace(e * p, c);
  std::optional<Rational> trunc;
  if (a.trunc()) trunc = *a.trunc() * k;
  return QSeries(a.expdenom() * s, std::move(t), trunc);
}

QSeries multisection(const QSeries& a, std::int64_t m, std::int64_t residue) {
  if (m <= 0) throw Error("multisection modulus must be positive");
  if (a.expdenom() != 1) throw NonIntegerExponents("multisection needs integral exponents");
  const std::int64_t r = ((residue % m) + m) % m;
  QSeries::Terms t;
  for (const auto& [k, c] : a.terms())
    if (((k % m) + m) % m == r) t.emplace(k, c);
  return QSeries(1, std::move(t), a.trunc());
}

std::optional<Rational> first_difference(const QSeries& a, const QSeries& b) {
  const auto tmin = min_trunc(a.trunc(), b.trunc());
  Rational lo = 0;
  if (auto v = a.valuation()) lo = std::min(lo, *v);
  if (auto v = b.valuation()) lo = std::min(lo, *v);
  if (tmin && *tmin <= lo)
    throw EmptyComparisonRange("series comparison range below q^" + to_string(*tmin) + " is empty");
  auto ia = a.items();
  auto ib = b.items();
  std::size_t i = 0, j = 0;
  while (i < ia.size() || j < ib.size()) {
    const bool take_a = j == ib.size() || (i < ia.size() && ia[i].first <= ib[j].first);
    const bool take_b = i == ia.size() || (j < ib.size() && ib[j].first <= ia[i].first);
    const Rational e = take_a ? ia[i].first : ib[j].first;
    if (tmin && e >= *tmin) break;
    const Rational ca = take_a ? ia[i].second : Rational(0);
    const Rational cb = take_b ? ib[j].second : Rational(0);
    if (ca != cb) return e;
    if (take_a) ++i;
    if (take_b) ++j;
  }
  return std::nullopt;
}

bool agree(const QSeries& a, const QSeries& b) { return !first_difference(a, b).has_value(); }

}  // namespace twistden
