#include "twistden/denominator.hpp"

#include <array>
#include <chrono>
#include <thread>

#include "json.hpp"

namespace twistden {

namespace {

constexpr std::size_t kMaxRank = 8;
// r_0 .. r_7, m, n
using Key = std::array<std::int64_t, kMaxRank + 2>;
using Level = std::map<Key, BigInt>;

Key to_key(const LorentzianPoint& p) {
  if (p.r.size() > kMaxRank) throw Error("definite part of rank above 8");
  Key k{};
  for (std::size_t i = 0; i < p.r.size(); ++i) k[i] = p.r[i];
  k[kMaxRank] = p.m;
  k[kMaxRank + 1] = p.n;
  return k;
}

LorentzianPoint from_key(const Key& k, std::size_t rank) {
  LorentzianPoint p;
  p.r.assign(k.begin(), k.begin() + static_cast<std::ptrdiff_t>(rank));
  p.m = k[kMaxRank];
  p.n = k[kMaxRank + 1];
  return p;
}

Key add_multiple(const Key& a, std::int64_t j, const Key& b) {
  Key c;
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a[i] + j * b[i];
  return c;
}


void accumulate(Level& level, const Key& key, const BigInt& delta) {
  auto [it, inserted] = level.try_emplace(key, delta);
  if (inserted) return;
  it->second += delta;
  if (it->second == 0) level.erase(it);
}

// Per-height buckets of a lattice series under construction.
struct Accumulator {
  std::int64_t max_height;
  std::vector<Level> levels;

  explicit Accumulator(std::int64_t h) : max_height(h), levels(static_cast<std::size_t>(h + 1)) {
    levels[0].emplace(Key{}, 1);
  }

  void multiply_factor(const Factor& f) {
    const std::int64_t h = f.alpha.height();
    if (h < 1) throw Error("factor " + f.alpha.to_string() + " has nonpositive height");
    if (h > max_height) return;
    const auto coeffs = expand_factor_coefficients(f.m_even, f.m_odd, max_height / h);
    const Key a = to_key(f.alpha);
    BigInt delta;
    for (std::int64_t src = max_height - h; src >= 0; --src) {
      for (const auto& [key, c] : levels[static_cast<std::size_t>(src)]) {
        for (std::int64_t j = 1; src + j * h <= max_height; ++j) {
          const BigInt& fj = coeffs[static_cast<std::size_t>(j)];
          if (fj == 0) continue;
          delta = fj * c;
          accumulate(levels[static_cast<std::size_t>(src + j * h)], add_multiple(key, j, a), delta);
        }
      }
    }
  }

  LatticeSeries finish(std::size_t rank) const {
    LatticeSeries s;
    s.max_height = max_height;
    for (const auto& level : levels)
      for (const auto& [key, c] : level)
        if (c != 0) s.terms.emplace(from_key(key, rank), c);
    return s;
  }
};

std::string point_string(const LorentzianPoint& p) { return p.to_string(); }

Check compare_lattice_series(std::string name, const LatticeSeries& expected, const LatticeSeries& got) {
  Check c;
  c.name = std::move(name);
  c.range = "height <= " + std::to_string(std::min(expected.max_height, got.max_height));
  auto ie = expected.terms.begin(), ig = got.terms.begin();
  while (ie != expected.terms.end() || ig != got.terms.end()) {
    LorentzianPoint key;
    if (ig == got.terms.end() || (ie != expected.terms.end() && ie->first < ig->first))
      key = ie->first;
    else
      key = ig->first;
    const BigInt e = expected.coefficient(key), g = got.coefficient(key);
    if (e != g) {
      c.pass = false;
      c.first_discrepancy = Discrepancy{point_string(key), to_string(e), to_string(g)};
      return c;
    }
    if (ie != expected.terms.end() && ie->first == key) ++ie;
    if (ig != got.terms.end() && ig->first == key) ++ig;
  }
  return c;
}

}  // namespace

BigInt LatticeSeries::coefficient(const LorentzianPoint& p) const {
  auto it = terms.find(p);
  return it == terms.end() ? BigInt(0) : it->second;
}

std::vector<BigInt> expand_factor_coefficients(const BigInt& m_even, const BigInt& m_odd, std::int64_t order) {
  if (m_even < 0 || m_odd < 0) throw Error("factor multiplicities must be nonnegative");
  const auto len = static_cast<std::size_t>(std::max<std::int64_t>(order, 0) + 1);
  // (1 - x)^a: (-1)^j C(a, j); (1 + x)^{-b}: (-1)^j C(b + j - 1, j)
  std::vector<BigInt> p(len), q(len), out(len);
  BigInt num = 1;
  for (std::size_t j = 0; j < len; ++j) {
    if (j > 0) {
      num *= (m_even - static_cast<long>(j - 1));
      num /= static_cast<long>(j);
    }
    p[j] = (j % 2 == 0) ? num : BigInt(-num);
  }
  num = 1;
  for (std::size_t j = 0; j < len; ++j) {
    if (j > 0) {
      num *= (m_odd + static_cast<long>(j - 1));
      num /= static_cast<long>(j);
    }
    q[j] = (j % 2 == 0) ? num : BigInt(-num);
  }
  for (std::size_t i = 0; i < len; ++i)
    for (std::size_t j = 0; i + j < len; ++j) out[i + j] += p[i] * q[j];
  return out;
}

LatticeSeries expand_factor(const LorentzianPoint& alpha, const BigInt& m_even, const BigInt& m_odd,
                            std::int64_t max_height) {
  LatticeSeries s;
  s.max_height = max_height;
  LorentzianPoint zero{std::vector<std::int64_t>(alpha.r.size(), 0), 0, 0};
  s.terms.emplace(zero, 1);
  const std::int64_t h = alpha.height();
  if (h < 1 || h > max_height) return s;
  const auto coeffs = expand_factor_coefficients(m_even, m_odd, max_height / h);
  for (std::size_t j = 1; j < coeffs.size(); ++j)
    if (coeffs[j] != 0) s.terms.emplace(static_cast<std::int64_t>(j) * alpha, coeffs[j]);
  return s;
}

LatticeSeries multiply(const LatticeSeries& a, const LatticeSeries& b) {
  const std::int64_t h = std::min(a.max_height, b.max_height);
  std::vector<std::vector<std::pair<Key, const BigInt*>>> bl(static_cast<std::size_t>(h + 1));
  std::size_t rank = 0;
  for (const auto& [p, c] : b.terms) {
    rank = p.r.size();
    if (p.height() <= h) bl[static_cast<std::size_t>(p.height())].emplace_back(to_key(p), &c);
  }
  Level out;
  BigInt prod;
  for (const auto& [p, c] : a.terms) {
    rank = p.r.size();
    const std::int64_t ha = p.height();
    if (ha > h) continue;
    const Key ka = to_key(p);
    for (std::int64_t hb = 0; ha + hb <= h; ++hb)
      for (const auto& [kb, cb] : bl[static_cast<std::size_t>(hb)]) {
        prod = c * *cb;
        accumulate(out, add_multiple(ka, 1, kb), prod);
      }
  }
  LatticeSeries s;
  s.max_height = h;
  for (const auto& [k, c] : out) s.terms.emplace(from_key(k, rank), c);
  return s;
}

std::vector<Factor> product_factors(const TwistClass& tc, std::int64_t max_height, ProductForm form) {
  std::vector<Factor> out;
  const auto& lz = tc.lorentzian();
  const std::int64_t n = tc.order();
  for (const auto& p : positive_cone_enum(lz, max_height)) {
    if (form == ProductForm::theorem1) {
      BigInt me = mult_theorem1(tc, p, Parity::even), mo = mult_theorem1(tc, p, Parity::odd);
      if (me != 0 || mo != 0) out.push_back({p, me, mo});
      continue;
    }
    if (!lz.in_lattice(p)) continue;
    if (!tc.c_series()) throw Error("split product needs the closed-form series");
    const auto& c = *tc.c_series();
    const Rational depth = -lz.norm(p) / 2;
    const BigInt c1 = c.coefficient(depth).get_num();
    if (c1 != 0) out.push_back({p, c1, c1});
    if (n > 1 && lz.in_scaled_dual(p, n)) {
      const BigInt c2 = c.coefficient(depth / Rational(static_cast<long>(n))).get_num();
      if (c2 != 0) out.push_back({p, c2, c2});
    }
  }
  return out;
}

LatticeSeries product_from_factors(const std::vector<Factor>& factors, std::size_t rank, std::int64_t max_height,
                                   int jobs) {
  const std::size_t chunks = static_cast<std::size_t>(std::max(jobs, 1));
  std::vector<LatticeSeries> partial(chunks);
  auto work = [&](std::size_t c) {
    const std::size_t lo = factors.size() * c / chunks, hi = factors.size() * (c + 1) / chunks;
    Accumulator acc(max_height);
    for (std::size_t i = lo; i < hi; ++i) acc.multiply_factor(factors[i]);
    partial[c] = acc.finish(rank);
  };
  if (chunks == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t c = 0; c < chunks; ++c) pool.emplace_back(work, c);
    for (auto& t : pool) t.join();
  }
  LatticeSeries result = std::move(partial[0]);
  for (std::size_t c = 1; c < chunks; ++c) result = multiply(result, partial[c]);
  return result;
}

LatticeSeries product_side(const TwistClass& tc, std::int64_t max_height, ProductForm form, int jobs) {
  return product_from_factors(product_factors(tc, max_height, form), tc.lorentzian().rank(), max_height, jobs);
}

LatticeSeries sum_side(const TwistClass& tc, std::int64_t max_height, bool perturb) {
  LatticeSeries s;
  s.max_height = max_height;
  const std::size_t rank = tc.lorentzian().rank();
  s.terms.emplace(LorentzianPoint{std::vector<std::int64_t>(rank, 0), 0, 0}, 1);
  if (max_height < 1) return s;
  const QSeries a = tc.tail_series(Rational(static_cast<long>(max_height + 1)));
  for (const auto& ray : primitive_isotropic_enum(tc.lorentzian(), max_height)) {
    for (std::int64_t k = 1; k <= ray.max_multiple; ++k) {
      Rational ak = a.coefficient(Rational(static_cast<long>(k)));
      if (perturb && k == 1) ak += 1;
      if (ak != 0) s.terms.emplace(k * ray.primitive, ak.get_num());
    }
  }
  return s;
}

bool IdentityReport::pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

IdentityReport verify_identity(int order, std::int64_t max_height, int jobs, bool perturb) {
  const auto t0 = std::chrono::steady_clock::now();
  IdentityReport rep;
  rep.order = order;
  rep.height = max_height;
  const TwistClass tc = TwistClass::build(order, depth_for_height(max_height));
  const auto& lz = tc.lorentzian();
  const std::string range = "height <= " + std::to_string(max_height);
  const std::string tag = " [order " + std::to_string(order) + "]";

  const auto split = product_factors(tc, max_height, ProductForm::split);
  const auto thm = product_factors(tc, max_height, ProductForm::theorem1);
  rep.factor_count = split.size();
  const LatticeSeries prod = product_from_factors(split, lz.rank(), max_height, jobs);
  if (tc.order() > 1) {
    const LatticeSeries prod1 = product_from_factors(thm, lz.rank(), max_height, jobs);
    rep.checks.push_back(compare_lattice_series("split product == trace-formula product" + tag, prod1, prod));
  } else {
    Check c{"split product == trace-formula product" + tag, range, true, std::nullopt};
    const std::size_t n = std::min(split.size(), thm.size());
    for (std::size_t i = 0; i < n && c.pass; ++i)
      if (!(split[i].alpha == thm[i].alpha) || split[i].m_even != thm[i].m_even || split[i].m_odd != thm[i].m_odd) {
        c.pass = false;
        c.first_discrepancy = Discrepancy{thm[i].alpha.to_string(), to_string(thm[i].m_even), to_string(split[i].m_even)};
      }
    if (c.pass && split.size() != thm.size()) {
      c.pass = false;
      c.first_discrepancy = Discrepancy{"factor count", std::to_string(thm.size()), std::to_string(split.size())};
    }
    rep.checks.push_back(c);
  }
  rep.product_terms = prod.terms.size();

  const LatticeSeries sum = sum_side(tc, max_height, perturb);
  rep.sum_terms = sum.terms.size();
  rep.checks.push_back(compare_lattice_series("product side == sum side" + tag, sum, prod));

  Check aniso{"anisotropic cancellation" + tag, range, true, std::nullopt};
  for (const auto& [p, c] : prod.terms)
    if (lz.norm(p) < 0 && c != 0) {
      aniso.pass = false;
      aniso.first_discrepancy = Discrepancy{p.to_string(), "0", to_string(c)};
      break;
    }
  rep.checks.push_back(aniso);

  Check simple{"simple roots carry multiplicity sum_{a|k} b_a" + tag, range, true, std::nullopt};
  for (const auto& ray : primitive_isotropic_enum(lz, max_height)) {
    for (std::int64_t k = 1; k <= ray.max_multiple && simple.pass; ++k) {
      const LorentzianPoint p = k * ray.primitive;
      const MultPair want = simple_root_mult(tc, k);
      const BigInt me = mult_theorem1(tc, p, Parity::even), mo = mult_theorem1(tc, p, Parity::odd);
      if (me != want.even || mo != want.odd) {
        simple.pass = false;
        simple.first_discrepancy = Discrepancy{p.to_string(), "(" + to_string(want.even) + ", " + to_string(want.odd) + ")",
                                               "(" + to_string(me) + ", " + to_string(mo) + ")"};
      }
    }
  }
  rep.checks.push_back(simple);
  rep.wall_ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

std::string lattice_series_json(const LatticeSeries& s) {
  nlohmann::ordered_json j;
  j["max_height"] = std::to_string(s.max_height);
  nlohmann::ordered_json terms = nlohmann::ordered_json::array();
  for (const auto& [p, c] : s.terms) {
    nlohmann::ordered_json a = nlohmann::ordered_json::array();
    for (auto x : p.r) a.push_back(std::to_string(x));
    a.push_back(std::to_string(p.m));
    a.push_back(std::to_string(p.n));
    terms.push_back({{"alpha", a}, {"coefficient", to_string(c)}});
  }
  j["terms"] = terms;
  return j.dump(2) + "\n";
}

}  // namespace twistden
