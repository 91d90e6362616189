#include <doctest.h>

#include <algorithm>
#include <set>

#include "twistden/lorentzian.hpp"

using namespace twistden;

TEST_CASE("norms and cone membership") {
  const LorentzianLattice l(root_lattice_A(2));
  const LorentzianPoint p{{0, 0}, 1, 1};
  CHECK(l.norm(p) == -2);
  CHECK(l.in_positive_cone(p));
  CHECK(!l.in_positive_cone(LorentzianPoint{{0, 0}, 0, 0}));
  CHECK(!l.in_positive_cone(LorentzianPoint{{0, 0}, -1, -1}));
  CHECK(l.norm(LorentzianPoint{{1, 0}, 0, 0}) == make_rational(2, 3));
  CHECK(pairing_divisor(LorentzianPoint{{3, 6}, 9, 0}) == 3);
  CHECK(l.in_scaled_dual(LorentzianPoint{{3, 6}, 9, 0}, 3));
  CHECK(!l.in_scaled_dual(LorentzianPoint{{3, 5}, 9, 0}, 3));
  CHECK(divide(LorentzianPoint{{3, 6}, 9, 0}, 3) == LorentzianPoint{{1, 2}, 3, 0});
  CHECK_THROWS_AS(divide(LorentzianPoint{{3, 5}, 9, 0}, 3), Error);
  CHECK(LorentzianPoint{{1, -2}, 3, 4}.to_string() == "(1,-2;3,4)");
}

TEST_CASE("dual coordinates and lattice membership") {
  const LorentzianLattice l(root_lattice_A(2));
  CHECK(l.in_lattice(LorentzianPoint{{2, -1}, 0, 1}));
  CHECK(!l.in_lattice(LorentzianPoint{{1, 0}, 0, 1}));
  CHECK(l.primitive_in_lattice(LorentzianPoint{{2, -1}, 0, 1}));
  CHECK(!l.primitive_in_lattice(LorentzianPoint{{4, -2}, 0, 2}));
  CHECK(l.coset_index(LorentzianPoint{{2, -1}, 5, 1}) == 0);
  CHECK(l.coset_index(LorentzianPoint{{1, 0}, 0, 0}) != 0);
}

TEST_CASE("positive cone enumeration against brute force") {
  const LorentzianLattice l(root_lattice_A(2));
  for (std::int64_t h = 1; h <= 6; ++h) {
    const auto pts = positive_cone_enum(l, h);
    std::set<LorentzianPoint> naive;
    for (std::int64_t m = 0; m <= h; ++m)
      for (std::int64_t n = 0; m + n <= h; ++n)
        for (std::int64_t a = -12; a <= 12; ++a)
          for (std::int64_t b = -12; b <= 12; ++b) {
            const LorentzianPoint p{{a, b}, m, n};
            if (l.in_positive_cone(p)) naive.insert(p);
          }
    CHECK(pts.size() == naive.size());
    CHECK(std::set<LorentzianPoint>(pts.begin(), pts.end()) == naive);
    for (std::size_t i = 1; i < pts.size(); ++i) {
      const auto& x = pts[i - 1];
      const auto& y = pts[i];
      const bool ordered = x.height() < y.height() || (x.height() == y.height() && (x.m < y.m || (x.m == y.m && x.r < y.r)));
      CHECK(ordered);
    }
  }
}

TEST_CASE("primitive isotropic vectors") {
  const LorentzianLattice l(root_lattice_A(2));
  const auto rays = primitive_isotropic_enum(l, 6);
  for (const auto& ray : rays) {
    CHECK(l.norm(ray.primitive) == 0);
    CHECK(l.primitive_in_lattice(ray.primitive));
    CHECK(ray.max_multiple * ray.primitive.height() <= 6);
    CHECK((ray.max_multiple + 1) * ray.primitive.height() > 6);
  }
  const auto has = [&](const LorentzianPoint& p) {
    return std::any_of(rays.begin(), rays.end(), [&](const IsotropicRay& r) { return r.primitive == p; });
  };
  CHECK(has(LorentzianPoint{{0, 0}, 1, 0}));
  CHECK(has(LorentzianPoint{{0, 0}, 0, 1}));
  CHECK(has(LorentzianPoint{{2, -1}, 1, 1}));
}
