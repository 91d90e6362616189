#include <doctest.h>

#include <map>

#include "oracle.hpp"
#include "twistden/lattice.hpp"
#include "twistden/octonion.hpp"

using namespace twistden;

namespace {

// Theta coefficients of A_n by brute force in the hyperplane model: x in Z^{n+1}, sum x = 0, norm x.x.
std::map<long, long> naive_theta_A(int n, long max_half_norm) {
  std::map<long, long> counts;
  const long bound = max_half_norm + 1;
  std::vector<long> x(static_cast<std::size_t>(n + 1), -bound);
  while (true) {
    long sum = 0, norm = 0;
    for (long v : x) {
      sum += v;
      norm += v * v;
    }
    if (sum == 0 && norm <= 2 * max_half_norm) counts[norm / 2] += 1;
    std::size_t i = 0;
    while (i < x.size() && x[i] == bound) x[i++] = -bound;
    if (i == x.size()) break;
    ++x[i];
  }
  return counts;
}

Lattice z_lattice(std::size_t n) { return Lattice::from_gram(RationalMatrix::identity(n)); }

}  // namespace

TEST_CASE("E8") {
  const Lattice e8 = e8_lattice();
  CHECK(e8.rank() == 8);
  CHECK(e8.determinant() == 1);
  CHECK(e8.is_even());
  const QSeries t = theta_series(e8, 4);
  CHECK(t.coefficient(0) == 1);
  CHECK(t.coefficient(1) == 240);
  CHECK(t.coefficient(2) == 2160);
  CHECK(t.coefficient(3) == 6720);
}

TEST_CASE("root lattices A_n against the hyperplane model") {
  for (int n : {2, 3}) {
    const Lattice a = root_lattice_A(static_cast<std::size_t>(n));
    CHECK(a.determinant() == n + 1);
    const auto naive = naive_theta_A(n, 3);
    const QSeries t = theta_series(a, 4);
    for (const auto& [k, c] : naive) CHECK(t.coefficient(k) == c);
  }
  CHECK(theta_series(root_lattice_A(6), 2).coefficient(1) == 42);
}

TEST_CASE("Z^n theta is a power of the Jacobi theta") {
  const QSeries t1 = theta_series(z_lattice(1), 10);
  const QSeries t3 = theta_series(z_lattice(3), 10);
  CHECK(agree(t3, t1 * t1 * t1));
  CHECK(t3.coefficient(make_rational(1, 2)) == 6);
}

TEST_CASE("direct sums multiply theta series") {
  const Lattice a2 = root_lattice_A(2);
  CHECK(agree(theta_series(direct_sum(a2, a2), 8), theta_series(a2, 8) * theta_series(a2, 8)));
  CHECK(theta_series(direct_sum(a2, a2), 3).coefficient(2) == 36);
}

TEST_CASE("discriminant groups and levels") {
  const DiscriminantGroup g = discriminant_group(root_lattice_A(2));
  CHECK(g.order() == 3);
  CHECK(g.classes.size() == 3);
  CHECK(g.classes[0].norm_class == 0);
  CHECK(level(root_lattice_A(2)) == 3);
  CHECK(level(root_lattice_A(3)) == 8);
  CHECK(level(e8_lattice()) == 1);
  CHECK(level(z_lattice(1)) == 2);
  const DiscriminantGroup g6 = discriminant_group(root_lattice_A(6));
  CHECK(g6.invariants == std::vector<BigInt>{7});
  for (std::size_t i = 0; i < g6.classes.size(); ++i) CHECK(g6.index_of(g6.classes[i].coords) == i);
}

TEST_CASE("dual lattices") {
  for (const Lattice& l : {root_lattice_A(2), root_lattice_A(5), e8_lattice()}) {
    const Lattice d = dual(l);
    CHECK(d.determinant() * l.determinant() == 1);
    CHECK(dual(d).gram() == l.gram());
  }
  CHECK_THROWS_AS(dual(Lattice::from_gram(RationalMatrix(2, 2))), SingularGram);
}

TEST_CASE("fixed sublattices of the twist elements") {
  const Lattice e8 = e8_lattice();
  for (int order : {3, 7}) {
    const RationalMatrix v = rho_V(build_twist_element(order));
    CHECK(preserves(v, e8));
    const Lattice f = fixed_sublattice(v, e8);
    const Lattice c = orthogonal_complement(f, e8);
    CHECK(f.rank() + c.rank() == 8);
    CHECK(f.determinant() == c.determinant());
    CHECK(discriminant_group(f).order() == f.determinant());
    for (std::size_t i = 0; i < f.rank(); ++i) {
      const Vector x = f.basis().row(i);
      CHECK(v * x == x);
      CHECK(e8.contains(x));
    }
    for (std::size_t i = 0; i < c.rank(); ++i)
      for (std::size_t j = 0; j < f.rank(); ++j) CHECK(e8.inner(c.basis().row(i), f.basis().row(j)) == 0);
  }
}

TEST_CASE("LLL keeps the lattice") {
  const Lattice e8 = e8_lattice();
  const Lattice r = lll_reduce(e8);
  CHECK(r.determinant() == 1);
  for (std::size_t i = 0; i < 8; ++i) CHECK(e8.contains(r.basis().row(i)));
  for (std::size_t i = 0; i < 8; ++i) CHECK(r.gram()(i, i) == 2);
}

TEST_CASE("short vectors are sorted and complete") {
  const Lattice a2 = root_lattice_A(2);
  const auto sv = short_vectors(a2, Vector(2, Rational(0)), 6);
  for (std::size_t i = 1; i < sv.size(); ++i) CHECK(sv[i - 1].coords < sv[i].coords);
  for (const auto& v : sv) CHECK(v.norm == a2.norm(a2.ambient({Rational(v.coords[0]), Rational(v.coords[1])})));
  CHECK(sv.size() == 1 + 6 + 6);
}

TEST_CASE("coset enumeration by brute force") {
  const Lattice a2 = root_lattice_A(2);
  const DiscriminantGroup g = discriminant_group(a2);
  for (const auto& cls : g.classes) {
    const Vector shift = a2.ambient(cls.coords);
    const auto vs = enumerate_coset(a2, shift, 8);
    std::map<Rational, long> got;
    for (const auto& v : vs) got[a2.norm(v)] += 1;
    std::map<Rational, long> naive;
    for (long x = -6; x <= 6; ++x)
      for (long y = -6; y <= 6; ++y) {
        Vector c{cls.coords[0] + x, cls.coords[1] + y};
        const Rational nn = a2.norm(a2.ambient(c));
        if (nn <= 8) naive[nn] += 1;
      }
    CHECK(got == naive);
  }
}

TEST_CASE("lattice JSON uses exact strings") {
  const std::string j = lattice_to_json(root_lattice_A(2));
  CHECK(j.find("\"2\"") != std::string::npos);
  CHECK(j.find("\"-1\"") != std::string::npos);
}
