#include "twistden/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <map>

#include "json.hpp"

namespace twistden {

namespace {

using i128 = __int128;

Rational dot(const Vector& a, const Vector& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Vector row_times(const Vector& v, const RationalMatrix& m) {
  if (v.size() != m.rows()) throw Error("vector/matrix shape mismatch");
  Vector out(m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (v[i] == 0) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) out[j] += v[i] * m(i, j);
  }
  return out;
}

Lattice from_integer_rows(const IntegerMatrix& coords, const Lattice& l) {
  return Lattice(to_rational(coords) * l.basis(), l.form());
}

std::int64_t to_small(const BigInt& x) {
  if (!x.fits_slong_p()) throw Error("enumeration data exceeds 64-bit range");
  return x.get_si();
}

i128 isqrt128(i128 x) {
  if (x <= 0) return 0;
  auto r = static_cast<i128>(std::sqrt(static_cast<long double>(x)));
  while (r * r > x) --r;
  while ((r + 1) * (r + 1) <= x) ++r;
  return r;
}

i128 floor_div(i128 a, i128 b) {
  i128 q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

i128 ceil_div(i128 a, i128 b) { return -floor_div(-a, b); }

// Integer-scaled Fincke-Pohst data for sum_i w_i T_i^2 <= bound, where
// T_i = D_i Y_i + sum_{j>i} P_ij Y_j, Y = ds z + S and the norm is (sum w_i T_i^2) / W.
struct Enumerator {
  std::size_t n = 0;
  std::int64_t ds = 1;
  std::vector<std::int64_t> S, D, w;
  std::vector<std::vector<std::int64_t>> P;
  std::int64_t W = 1;
  IntegerMatrix to_original;  // z_original = z_reduced * to_original

  Enumerator(const Lattice& l, const Vector& shift) {
    n = l.rank();
    // LLL for short enumeration trees; coordinates are mapped back afterwards.
    RationalMatrix g = l.gram();
    IntegerMatrix u = IntegerMatrix::identity(n);
    if (n > 1) {
      Lattice reduced = lll_reduce(l);
      // u B = B_reduced
      RationalMatrix gi = inverse(l.gram());
      RationalMatrix cross = reduced.basis() * l.form() * l.basis().transpose();
      u = to_integer(cross * gi);
      g = reduced.gram();
    }
    to_original = u;
    // shift in reduced coordinates: s_red = s u^{-1}
    Vector s = n > 0 ? row_times(shift, inverse(to_rational(u))) : Vector{};

    // q_ii and mu_ij (j > i) with norm(x) = sum_i q_ii (x_i + sum_{j>i} mu_ij x_j)^2
    RationalMatrix q = g;
    for (std::size_t i = 0; i < n; ++i) {
      if (q(i, i) <= 0) throw Error("enumeration needs a positive definite lattice");
      for (std::size_t j = i + 1; j < n; ++j) {
        q(j, i) = q(i, j);
        q(i, j) = q(i, j) / q(i, i);
      }
      for (std::size_t k = i + 1; k < n; ++k)
        for (std::size_t m = k; m < n; ++m) q(k, m) -= q(k, i) * q(i, m);
    }

    BigInt den = common_denominator(s);
    ds = to_small(den);
    S.resize(n);
    for (std::size_t i = 0; i < n; ++i) S[i] = to_small(Rational(s[i] * Rational(den)).get_num());
    D.resize(n);
    P.assign(n, std::vector<std::int64_t>(n, 0));
    std::vector<Rational> wr(n);
    for (std::size_t i = 0; i < n; ++i) {
      Vector row;
      for (std::size_t j = i + 1; j < n; ++j) row.push_back(q(i, j));
      BigInt di = common_denominator(row);
      D[i] = to_small(di);
      for (std::size_t j = i + 1; j < n; ++j) P[i][j] = to_small(Rational(q(i, j) * Rational(di)).get_num());
      wr[i] = q(i, i) / Rational(di * di * den * den);
    }
    BigInt wd = common_denominator(wr);
    W = to_small(wd);
    w.resize(n);
    for (std::size_t i = 0; i < n; ++i) w[i] = to_small(Rational(wr[i] * Rational(wd)).get_num());
  }

  // visit(z_reduced, scaled_norm) for all z with scaled norm <= bound
  template <typename Visit>
  void run(i128 bound, Visit&& visit) const {
    if (bound < 0) return;
    if (n == 0) {
      std::vector<std::int64_t> none;
      visit(none, i128(0));
      return;
    }
    std::vector<std::int64_t> z(n), Y(n);
    recurse(static_cast<std::ptrdiff_t>(n) - 1, bound, bound, z, Y, visit);
  }

  template <typename Visit>
  void recurse(std::ptrdiff_t i, i128 remaining, i128 bound, std::vector<std::int64_t>& z, std::vector<std::int64_t>& Y,
               Visit& visit) const {
    const auto u = static_cast<std::size_t>(i);
    i128 k = static_cast<i128>(D[u]) * S[u];
    for (std::size_t j = u + 1; j < n; ++j) k += static_cast<i128>(P[u][j]) * Y[j];
    const i128 m = isqrt128(remaining / w[u]);
    const i128 step = static_cast<i128>(D[u]) * ds;
    const i128 lo = ceil_div(-m - k, step), hi = floor_div(m - k, step);
    for (i128 zi = lo; zi <= hi; ++zi) {
      const i128 t = step * zi + k;
      const i128 rest = remaining - static_cast<i128>(w[u]) * t * t;
      if (rest < 0) continue;
      z[u] = static_cast<std::int64_t>(zi);
      Y[u] = static_cast<std::int64_t>(ds * zi + S[u]);
      if (i == 0)
        visit(z, bound - rest);
      else
        recurse(i - 1, rest, bound, z, Y, visit);
    }
  }

  i128 scaled_bound(const Rational& max_norm) const {
    if (max_norm < 0) return -1;
    BigInt b = floor_of(max_norm * Rational(W));
    if (!b.fits_slong_p()) throw Error("enumeration bound exceeds 64-bit range");
    return b.get_si();
  }

  std::vector<std::int64_t> original(const std::vector<std::int64_t>& zr) const {
    std::vector<std::int64_t> out(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      if (zr[i] == 0) continue;
      for (std::size_t j = 0; j < n; ++j) out[j] += zr[i] * to_original(i, j).get_si();
    }
    return out;
  }
};

}  // namespace

Lattice::Lattice(RationalMatrix basis, RationalMatrix form) : basis_(std::move(basis)), form_(std::move(form)) {
  if (!form_.is_square()) throw Error("ambient form must be square");
  if (basis_.rows() > 0 && basis_.cols() != form_.rows()) throw Error("basis vectors do not match the ambient dimension");
  if (basis_.rows() == 0) basis_ = RationalMatrix(0, form_.rows());
  if (!(form_.transpose() == form_)) throw Error("ambient form must be symmetric");
  if (basis_.rows() > 0 && twistden::rank(basis_) != basis_.rows()) throw Error("lattice basis is linearly dependent");
  gram_ = basis_ * form_ * basis_.transpose();
}

Lattice Lattice::from_gram(const RationalMatrix& gram) {
  return Lattice(RationalMatrix::identity(gram.rows()), gram);
}

Rational Lattice::determinant() const { return rank() == 0 ? Rational(1) : twistden::determinant(gram_); }

bool Lattice::is_integral() const { return twistden::is_integral(gram_); }

bool Lattice::is_even() const {
  if (!is_integral()) return false;
  for (std::size_t i = 0; i < rank(); ++i)
    if (gram_(i, i).get_num() % 2 != 0) return false;
  return true;
}

Rational Lattice::inner(const Vector& v, const Vector& w) const { return dot(row_times(v, form_), w); }

Vector Lattice::ambient(const Vector& coords) const {
  if (rank() == 0) return Vector(ambient_dim());
  return row_times(coords, basis_);
}

std::optional<Vector> Lattice::coordinates(const Vector& v) const {
  if (v.size() != ambient_dim()) throw Error("vector has the wrong ambient dimension");
  if (rank() == 0) {
    for (const auto& x : v)
      if (x != 0) return std::nullopt;
    return Vector{};
  }
  // Least squares against the basis rows, then verify.
  RationalMatrix bbt = basis_ * basis_.transpose();
  Vector rhs = basis_ * v;
  Vector c = solve(bbt, rhs);
  if (ambient(c) != v) return std::nullopt;
  return c;
}

bool Lattice::contains(const Vector& v) const {
  auto c = coordinates(v);
  if (!c) return false;
  return std::all_of(c->begin(), c->end(), [](const Rational& x) { return is_integer(x); });
}

Lattice e8_lattice() {
  RationalMatrix b(8, 8);
  b(0, 0) = 2;
  for (std::size_t i = 1; i < 7; ++i) {
    b(i, i - 1) = -1;
    b(i, i) = 1;
  }
  for (std::size_t j = 0; j < 8; ++j) b(7, j) = make_rational(1, 2);
  return Lattice(b, RationalMatrix::identity(8));
}

Lattice root_lattice_A(std::size_t n) {
  RationalMatrix g(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    g(i, i) = 2;
    if (i + 1 < n) g(i, i + 1) = g(i + 1, i) = -1;
  }
  return Lattice::from_gram(g);
}

Lattice direct_sum(const Lattice& a, const Lattice& b) {
  const std::size_t da = a.ambient_dim(), db = b.ambient_dim();
  RationalMatrix form(da + db, da + db), basis(a.rank() + b.rank(), da + db);
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t j = 0; j < da; ++j) form(i, j) = a.form()(i, j);
  for (std::size_t i = 0; i < db; ++i)
    for (std::size_t j = 0; j < db; ++j) form(da + i, da + j) = b.form()(i, j);
  for (std::size_t i = 0; i < a.rank(); ++i)
    for (std::size_t j = 0; j < da; ++j) basis(i, j) = a.basis()(i, j);
  for (std::size_t i = 0; i < b.rank(); ++i)
    for (std::size_t j = 0; j < db; ++j) basis(a.rank() + i, da + j) = b.basis()(i, j);
  return Lattice(basis, form);
}

Lattice dual(const Lattice& l) {
  if (l.rank() == 0) return l;
  RationalMatrix gi;
  try {
    gi = inverse(l.gram());
  } catch (const SingularMatrix&) {
    throw SingularGram("Gram matrix is singular");
  }
  return Lattice(gi * l.basis(), l.form());
}

BigInt DiscriminantGroup::order() const {
  BigInt o = 1;
  for (const auto& d : invariants) o *= d;
  return o;
}

std::size_t DiscriminantGroup::index_of(const Vector& coords) const {
  Vector key(coords.size());
  for (std::size_t i = 0; i < coords.size(); ++i) key[i] = mod_positive(coords[i], 1);
  for (std::size_t i = 0; i < classes.size(); ++i)
    if (classes[i].coords == key) return i;
  throw Error("vector does not lie in the dual lattice");
}

DiscriminantGroup discriminant_group(const Lattice& l) {
  DiscriminantGroup g;
  const std::size_t n = l.rank();
  g.classes.push_back({Vector(n), 0});
  if (n == 0) return g;
  if (l.determinant() == 0) throw SingularGram("Gram matrix is singular");
  if (!l.is_integral()) throw Error("discriminant group needs an integral lattice");
  for (const auto& d : smith_invariants(to_integer(l.gram())))
    if (d != 1) g.invariants.push_back(d);

  const RationalMatrix gi = inverse(l.gram());
  auto reduce = [](Vector v) {
    for (auto& x : v) x = mod_positive(x, 1);
    return v;
  };
  std::map<Vector, std::size_t> seen{{Vector(n), 0}};
  std::deque<Vector> queue{Vector(n)};
  while (!queue.empty()) {
    const Vector cur = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < n; ++i) {
      Vector next(n);
      for (std::size_t j = 0; j < n; ++j) next[j] = cur[j] + gi(i, j);
      next = reduce(next);
      if (seen.count(next)) continue;
      seen.emplace(next, g.classes.size());
      g.classes.push_back({next, mod_positive(dot(row_times(next, l.gram()), next), 2)});
      queue.push_back(next);
    }
  }
  if (BigInt(g.classes.size()) != g.order()) throw Error("discriminant group closure disagrees with Smith invariants");
  return g;
}

BigInt level(const Lattice& l) {
  if (l.rank() == 0) return 1;
  RationalMatrix gi;
  try {
    gi = inverse(l.gram());
  } catch (const SingularMatrix&) {
    throw SingularGram("Gram matrix is singular");
  }
  BigInt n = 1;
  for (std::size_t i = 0; i < l.rank(); ++i)
    for (std::size_t j = 0; j < l.rank(); ++j) {
      const Rational x = i == j ? gi(i, i) / 2 : gi(i, j);
      n = lcm(n, x.get_den());
    }
  return n;
}

bool preserves(const RationalMatrix& m, const Lattice& l) {
  if (l.rank() != l.ambient_dim()) throw Error("preserves: lattice must have full rank");
  const RationalMatrix bt = l.basis().transpose();
  const RationalMatrix k = inverse(bt) * m * bt;
  return is_integral(k) && (determinant(k) == 1 || determinant(k) == -1);
}

Lattice fixed_sublattice(const RationalMatrix& m, const Lattice& l) {
  if (l.rank() != l.ambient_dim()) throw Error("fixed_sublattice: lattice must have full rank");
  const RationalMatrix bt = l.basis().transpose();
  const RationalMatrix k = inverse(bt) * m * bt;
  if (!is_integral(k)) throw Error("fixed_sublattice: map does not preserve the lattice");
  const RationalMatrix diff = k - RationalMatrix::identity(l.rank());
  const IntegerMatrix kernel = integer_kernel(clear_row_denominators(diff));
  Lattice f = from_integer_rows(kernel, l);
  return f.rank() > 0 && f.gram()(0, 0) > 0 ? lll_reduce(f) : f;
}

Lattice orthogonal_complement(const Lattice& s, const Lattice& container) {
  if (s.rank() == 0) return container;
  const RationalMatrix c = s.basis() * container.form() * container.basis().transpose();
  const IntegerMatrix kernel = integer_kernel(clear_row_denominators(c));
  Lattice out = from_integer_rows(kernel, container);
  return out.rank() > 0 && out.gram()(0, 0) > 0 ? lll_reduce(out) : out;
}

Lattice lll_reduce(const Lattice& l) {
  const std::size_t n = l.rank();
  if (n <= 1) return l;
  IntegerMatrix u = IntegerMatrix::identity(n);
  RationalMatrix g = l.gram();
  const Rational delta = make_rational(3, 4);

  auto gso = [&](RationalMatrix& mu, std::vector<Rational>& bn) {
    mu = RationalMatrix(n, n);
    bn.assign(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < i; ++j) {
        Rational x = g(i, j);
        for (std::size_t k = 0; k < j; ++k) x -= mu(j, k) * mu(i, k) * bn[k];
        mu(i, j) = x / bn[j];
      }
      Rational x = g(i, i);
      for (std::size_t k = 0; k < i; ++k) x -= mu(i, k) * mu(i, k) * bn[k];
      if (x <= 0) throw Error("LLL needs a positive definite lattice");
      bn[i] = x;
    }
  };
  auto recompute = [&]() { g = to_rational(u) * l.gram() * to_rational(u).transpose(); };

  RationalMatrix mu;
  std::vector<Rational> bn;
  gso(mu, bn);
  std::size_t k = 1;
  while (k < n) {
    for (std::size_t jj = k; jj-- > 0;) {
      const Rational& m = mu(k, jj);
      BigInt r = floor_of(m + make_rational(1, 2));
      if (r != 0) {
        for (std::size_t c = 0; c < n; ++c) u(k, c) -= r * u(jj, c);
        recompute();
        gso(mu, bn);
      }
    }
    if (bn[k] >= (delta - mu(k, k - 1) * mu(k, k - 1)) * bn[k - 1]) {
      ++k;
    } else {
      u.swap_rows(k, k - 1);
      recompute();
      gso(mu, bn);
      k = std::max<std::size_t>(k - 1, 1);
    }
  }
  return from_integer_rows(u, l);
}

Vector project(const Lattice& s, const Vector& v) {
  if (s.rank() == 0) return Vector(v.size());
  const Vector pairings = s.basis() * row_times(v, s.form());
  return s.ambient(solve(s.gram(), pairings));
}

std::vector<ShortVector> short_vectors(const Lattice& l, const Vector& shift, const Rational& max_norm) {
  const Enumerator e(l, shift);
  std::vector<ShortVector> out;
  e.run(e.scaled_bound(max_norm), [&](const std::vector<std::int64_t>& z, i128 scaled) {
    out.push_back({e.original(z), make_rational(static_cast<long>(scaled), static_cast<long>(e.W))});
  });
  std::sort(out.begin(), out.end(), [](const ShortVector& a, const ShortVector& b) { return a.coords < b.coords; });
  return out;
}

void visit_coset_norms(const Lattice& l, const Vector& shift, const Rational& max_norm,
                       const std::function<void(const Rational&)>& visit) {
  const Enumerator e(l, shift);
  std::map<std::int64_t, std::int64_t> counts;
  e.run(e.scaled_bound(max_norm), [&](const std::vector<std::int64_t>&, i128 scaled) {
    ++counts[static_cast<std::int64_t>(scaled)];
  });
  for (const auto& [num, count] : counts) {
    const Rational norm = make_rational(num, e.W);
    for (std::int64_t i = 0; i < count; ++i) visit(norm);
  }
}

namespace {

Vector coset_coordinates(const Lattice& l, const Vector& shift) {
  auto c = l.coordinates(shift);
  if (!c) throw Error("coset shift is not in the span of the lattice");
  return *c;
}

}  // namespace

std::vector<Vector> enumerate_coset(const Lattice& l, const Vector& shift, const Rational& max_norm) {
  const Vector s = coset_coordinates(l, shift);
  std::vector<Vector> out;
  for (const auto& sv : short_vectors(l, s, max_norm)) {
    Vector c(s.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = s[i] + Rational(static_cast<long>(sv.coords[i]));
    out.push_back(l.ambient(c));
  }
  std::sort(out.begin(), out.end());
  return out;
}

QSeries theta_coset(const Lattice& l, const Vector& shift, const Rational& prec) {
  const Vector s = coset_coordinates(l, shift);
  const Enumerator e(l, s);
  std::map<std::int64_t, std::int64_t> counts;
  e.run(e.scaled_bound(2 * prec), [&](const std::vector<std::int64_t>&, i128 scaled) {
    ++counts[static_cast<std::int64_t>(scaled)];
  });
  // exponent = norm / 2 = scaled / (2 W)
  QSeries::Terms terms;
  for (const auto& [num, count] : counts) terms.emplace(num, Rational(static_cast<long>(count)));
  return QSeries(2 * e.W, std::move(terms), prec);
}

QSeries theta_series(const Lattice& l, const Rational& prec) { return theta_coset(l, Vector(l.ambient_dim()), prec); }

Vector coset_complement_shift(const Lattice& e8, const Lattice& f, const Vector& r_star, const Rational& max_norm) {
  auto in_f = [&](const Vector& v) { return f.contains(v); };
  for (Rational bound = 0; bound <= max_norm; bound += 2) {
    for (const auto& x : enumerate_coset(e8, Vector(e8.ambient_dim()), bound)) {
      const Vector px = project(f, x);
      Vector d(px.size());
      for (std::size_t i = 0; i < d.size(); ++i) d[i] = px[i] - r_star[i];
      if (!in_f(d)) continue;
      Vector out(x.size());
      for (std::size_t i = 0; i < out.size(); ++i) out[i] = x[i] - px[i];
      return out;
    }
  }
  throw SearchExhausted("no E8 vector of norm <= " + to_string(max_norm) + " projects onto the coset of r*");
}

std::string lattice_to_json(const Lattice& l) {
  nlohmann::ordered_json j;
  auto rows = [](const RationalMatrix& m) {
    nlohmann::ordered_json a = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
      nlohmann::ordered_json r = nlohmann::ordered_json::array();
      for (std::size_t k = 0; k < m.cols(); ++k) r.push_back(to_string(m(i, k)));
      a.push_back(r);
    }
    return a;
  };
  j["ambient_dim"] = std::to_string(l.ambient_dim());
  j["basis"] = rows(l.basis());
  j["gram"] = rows(l.gram());
  j["form"] = rows(l.form());
  return j.dump(2) + "\n";
}

}  // namespace twistden
