#include "twistden/octonion.hpp"

#include <sstream>

namespace twistden {

namespace {

struct Product {
  int index;
  int sign;
};

// table[i][j] = e_i e_j for i, j >= 1
std::array<std::array<Product, 8>, 8> build_table() {
  std::array<std::array<Product, 8>, 8> t{};
  const int triples[7][3] = {{1, 2, 3}, {1, 5, 4}, {2, 6, 4}, {3, 7, 4}, {1, 7, 6}, {2, 5, 7}, {3, 6, 5}};
  for (const auto& tr : triples) {
    for (int r = 0; r < 3; ++r) {
      const int i = tr[r], j = tr[(r + 1) % 3], k = tr[(r + 2) % 3];
      t[i][j] = {k, 1};
      t[j][i] = {k, -1};
    }
  }
  for (int i = 1; i < 8; ++i) t[i][i] = {0, -1};
  return t;
}

const std::array<std::array<Product, 8>, 8>& table() {
  static const auto t = build_table();
  return t;
}

RationalMatrix matrix_of(const Octonion& b, bool left) {
  RationalMatrix m(8, 8);
  for (int j = 0; j < 8; ++j) {
    const Octonion img = left ? b * Octonion::basis(j) : Octonion::basis(j) * b;
    for (int i = 0; i < 8; ++i) m(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = img[i];
  }
  return m;
}

std::optional<Rational> rational_sqrt(const Rational& x) {
  if (x < 0) return std::nullopt;
  const BigInt n = x.get_num(), d = x.get_den();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return std::nullopt;
  BigInt rn, rd;
  mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
  return make_rational(rn, rd);
}

template <typename F>
RationalMatrix compose(const SpinElement& u, F factor_matrix) {
  RationalMatrix m = RationalMatrix::identity(8);
  for (const auto& b : u.factors()) m = m * factor_matrix(b);
  return m;
}

}  // namespace

Octonion Octonion::basis(int i) {
  if (i < 0 || i > 7) throw Error("octonion basis index out of range");
  Octonion x;
  x[i] = 1;
  return x;
}

Rational Octonion::norm() const {
  Rational n = 0;
  for (const auto& c : c_) n += c * c;
  return n;
}

Octonion Octonion::conjugate() const {
  Octonion x = *this;
  for (int i = 1; i < 8; ++i) x[i] = -x[i];
  return x;
}

std::string Octonion::to_string() const {
  std::ostringstream out;
  out << "(";
  for (int i = 0; i < 8; ++i) out << (i ? ", " : "") << twistden::to_string(c_[static_cast<std::size_t>(i)]);
  out << ")";
  return out.str();
}

Octonion operator*(const Octonion& a, const Octonion& b) {
  Octonion z;
  const auto& t = table();
  for (int i = 0; i < 8; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < 8; ++j) {
      if (b[j] == 0) continue;
      const Rational c = a[i] * b[j];
      if (i == 0)
        z[j] += c;
      else if (j == 0)
        z[i] += c;
      else if (t[i][j].sign > 0)
        z[t[i][j].index] += c;
      else
        z[t[i][j].index] -= c;
    }
  }
  return z;
}

Octonion operator+(Octonion a, const Octonion& b) {
  for (int i = 0; i < 8; ++i) a[i] += b[i];
  return a;
}

Octonion operator-(Octonion a, const Octonion& b) {
  for (int i = 0; i < 8; ++i) a[i] -= b[i];
  return a;
}

Octonion operator*(const Rational& s, Octonion a) {
  for (int i = 0; i < 8; ++i) a[i] *= s;
  return a;
}

std::vector<Rational> to_vector(const Octonion& x) { return {x.coords().begin(), x.coords().end()}; }

Octonion from_vector(const std::vector<Rational>& v) {
  if (v.size() != 8) throw Error("octonion needs 8 coordinates");
  Octonion x;
  for (int i = 0; i < 8; ++i) x[i] = v[static_cast<std::size_t>(i)];
  return x;
}

RationalMatrix left_matrix(const Octonion& b) { return matrix_of(b, true); }
RationalMatrix right_matrix(const Octonion& b) { return matrix_of(b, false); }

RationalMatrix bi_matrix(const Octonion& b) {
  const RationalMatrix l = left_matrix(b), r = right_matrix(b);
  RationalMatrix lr = l * r;
  if (!(lr == r * l)) throw Error("left and right multiplication by " + b.to_string() + " do not commute");
  return lr;
}

SpinElement::SpinElement(std::vector<Octonion> factors) : factors_(std::move(factors)) {
  if (factors_.size() % 2 != 0) throw Error("spin element needs an even number of factors");
  for (const auto& b : factors_)
    if (b.norm() == 0) throw Error("spin element factor has zero norm");
}

Rational SpinElement::norm_product() const {
  Rational p = 1;
  for (const auto& b : factors_) p *= b.norm();
  return p;
}

Rational SpinElement::spinor_normalizer() const {
  auto root = rational_sqrt(norm_product());
  if (!root) throw IrrationalNormalizer("product of factor norms " + to_string(norm_product()) + " is not a square");
  return 1 / *root;
}

RationalMatrix rho_V(const SpinElement& u) {
  return Rational(1 / u.norm_product()) * compose(u, [](const Octonion& b) { return bi_matrix(b); });
}

RationalMatrix rho_L(const SpinElement& u) {
  return u.spinor_normalizer() * compose(u, [](const Octonion& b) { return left_matrix(b); });
}

RationalMatrix rho_R(const SpinElement& u) {
  return u.spinor_normalizer() * compose(u, [](const Octonion& b) { return right_matrix(b); });
}

SpinElement build_twist_element(int order) {
  auto diff = [](int i, int j) { return Octonion::basis(i) - Octonion::basis(j); };
  switch (order) {
    case 1: return SpinElement();
    case 3: return SpinElement({diff(2, 3), diff(1, 2), diff(6, 7), diff(5, 6)});
    case 7: return SpinElement({diff(6, 7), diff(5, 6), diff(4, 5), diff(3, 4), diff(2, 3), diff(1, 2)});
    default: throw Error("no twist element of order " + std::to_string(order));
  }
}

Rational tabulated_scalar(int order) {
  switch (order) {
    case 1: return 1;
    case 3: return make_rational(1, 4);
    case 7: return make_rational(1, 8);
    default: throw Error("no twist element of order " + std::to_string(order));
  }
}

RationalMatrix tabulated_action(int order) {
  // image[j] = index of rho_V(u) e_j
  std::array<int, 8> image{};
  switch (order) {
    case 1: image = {0, 1, 2, 3, 4, 5, 6, 7}; break;
    case 3: image = {0, 3, 1, 2, 4, 7, 5, 6}; break;
    case 7: image = {0, 7, 1, 2, 3, 4, 5, 6}; break;
    default: throw Error("no twist element of order " + std::to_string(order));
  }
  RationalMatrix m(8, 8);
  for (std::size_t j = 0; j < 8; ++j) m(static_cast<std::size_t>(image[j]), j) = 1;
  return m;
}

bool is_orthogonal(const RationalMatrix& m) {
  return m.is_square() && m.transpose() * m == RationalMatrix::identity(m.rows());
}

int matrix_order(const RationalMatrix& m, int cap) {
  if (!m.is_square()) throw Error("matrix_order needs a square matrix");
  const auto id = RationalMatrix::identity(m.rows());
  RationalMatrix p = m;
  for (int k = 1; k <= cap; ++k) {
    if (p == id) return k;
    p = p * m;
  }
  throw OrderExceedsCap("matrix order exceeds " + std::to_string(cap));
}

CycleShape cycle_shape(const RationalMatrix& m, int cap) {
  const int n = matrix_order(m, cap);
  std::map<std::int64_t, Rational> traces;
  RationalMatrix p = m;
  for (int k = 1; k <= n; ++k) {
    if (n % k == 0) {
      Rational t = 0;
      for (std::size_t i = 0; i < p.rows(); ++i) t += p(i, i);
      traces[k] = t;
    }
    p = p * m;
  }
  std::map<int, int> cycles;
  for (std::int64_t a : divisors(n)) {
    Rational ab = 0;
    for (std::int64_t d : divisors(a)) ab += mobius(a / d) * traces[d];
    const Rational b = ab / Rational(static_cast<long>(a));
    if (!is_integer(b) || b < 0)
      throw NotProductOfCyclotomicBlocks("trace inversion gives multiplicity " + to_string(b) + " for cycle length " +
                                         std::to_string(a));
    if (b > 0) cycles[static_cast<int>(a)] = static_cast<int>(to_int64(b));
  }
  CycleShape shape(cycles);
  const auto expected = shape.characteristic_polynomial();
  const auto got = characteristic_polynomial(m);
  bool same = expected.size() == got.size();
  for (std::size_t i = 0; same && i < got.size(); ++i) same = Rational(expected[i]) == got[i];
  if (!same)
    throw NotProductOfCyclotomicBlocks("characteristic polynomial is not that of cycle shape " + shape.to_string());
  return shape;
}

Check verify_triality(const SpinElement& u, const std::vector<std::pair<Octonion, Octonion>>& sample) {
  const RationalMatrix v = rho_V(u), l = rho_L(u), r = rho_R(u);
  auto apply = [](const RationalMatrix& m, const Octonion& x) { return from_vector(m * to_vector(x)); };
  std::vector<std::pair<Octonion, Octonion>> pairs;
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) pairs.emplace_back(Octonion::basis(i), Octonion::basis(j));
  pairs.insert(pairs.end(), sample.begin(), sample.end());

  Check c;
  c.name = "triality rho_V(ab) == (rho_L a)(rho_R b)";
  c.range = std::to_string(pairs.size()) + " pairs";
  for (const auto& [a, b] : pairs) {
    const Octonion lhs = apply(v, a * b);
    const Octonion rhs = apply(l, a) * apply(r, b);
    if (!(lhs == rhs)) {
      c.pass = false;
      c.first_discrepancy = Discrepancy{"a=" + a.to_string() + " b=" + b.to_string(), lhs.to_string(), rhs.to_string()};
      break;
    }
  }
  return c;
}

}  // namespace twistden
