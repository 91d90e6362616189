#include "twistden/lorentzian.hpp"

#include <numeric>

namespace twistden {

bool LorentzianPoint::is_zero() const {
  if (m != 0 || n != 0) return false;
  for (auto x : r)
    if (x != 0) return false;
  return true;
}

std::string LorentzianPoint::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < r.size(); ++i) out += (i ? "," : "") + std::to_string(r[i]);
  out += ";" + std::to_string(m) + "," + std::to_string(n) + ")";
  return out;
}

LorentzianPoint operator+(const LorentzianPoint& a, const LorentzianPoint& b) {
  LorentzianPoint c = a;
  for (std::size_t i = 0; i < c.r.size(); ++i) c.r[i] += b.r[i];
  c.m += b.m;
  c.n += b.n;
  return c;
}

LorentzianPoint operator*(std::int64_t k, const LorentzianPoint& a) {
  LorentzianPoint c = a;
  for (auto& x : c.r) x *= k;
  c.m *= k;
  c.n *= k;
  return c;
}

LorentzianPoint divide(const LorentzianPoint& a, std::int64_t k) {
  if (k == 0 || pairing_divisor(a) % k != 0) throw Error("point " + a.to_string() + " is not divisible by " + std::to_string(k));
  LorentzianPoint c = a;
  for (auto& x : c.r) x /= k;
  c.m /= k;
  c.n /= k;
  return c;
}

LorentzianLattice::LorentzianLattice(Lattice definite)
    : definite_(std::move(definite)), dual_(twistden::dual(definite_)), disc_(discriminant_group(definite_)) {
  if (!definite_.is_even()) throw Error("Lorentzian lattice needs an even definite part");
  dual_gram_ = dual_.gram();
}

Rational LorentzianLattice::definite_norm(const LorentzianPoint& p) const {
  Rational s = 0;
  for (std::size_t i = 0; i < p.r.size(); ++i) {
    if (p.r[i] == 0) continue;
    for (std::size_t j = 0; j < p.r.size(); ++j)
      if (p.r[j] != 0) s += dual_gram_(i, j) * Rational(p.r[i] * p.r[j]);
  }
  return s;
}

Rational LorentzianLattice::norm(const LorentzianPoint& p) const {
  return definite_norm(p) - Rational(2 * p.m * p.n);
}

bool LorentzianLattice::in_positive_cone(const LorentzianPoint& p) const {
  return p.m >= 0 && p.n >= 0 && !p.is_zero() && definite_norm(p) <= Rational(2 * p.m * p.n);
}

Vector LorentzianLattice::lattice_coordinates(const LorentzianPoint& p) const {
  Vector c(p.r.size());
  for (std::size_t j = 0; j < c.size(); ++j)
    for (std::size_t i = 0; i < c.size(); ++i)
      if (p.r[i] != 0) c[j] += Rational(p.r[i]) * dual_gram_(i, j);
  return c;
}

bool LorentzianLattice::in_lattice(const LorentzianPoint& p) const {
  for (const auto& x : lattice_coordinates(p))
    if (!is_integer(x)) return false;
  return true;
}

bool LorentzianLattice::in_scaled_dual(const LorentzianPoint& p, std::int64_t k) const {
  return pairing_divisor(p) % k == 0;
}

bool LorentzianLattice::primitive_in_lattice(const LorentzianPoint& p) const {
  if (!in_lattice(p) || p.is_zero()) return false;
  BigInt g = gcd(BigInt(static_cast<long>(p.m)), BigInt(static_cast<long>(p.n)));
  for (const auto& x : lattice_coordinates(p)) g = gcd(g, x.get_num());
  return g == 1;
}

std::size_t LorentzianLattice::coset_index(const LorentzianPoint& p) const {
  return disc_.index_of(lattice_coordinates(p));
}

std::string LorentzianLattice::coset_label(const LorentzianPoint& p) const {
  const auto& c = disc_.classes[coset_index(p)].coords;
  std::string out = "[";
  for (std::size_t i = 0; i < c.size(); ++i) out += (i ? "," : "") + to_string(c[i]);
  return out + "]";
}

std::int64_t pairing_divisor(const LorentzianPoint& p) {
  std::int64_t g = std::gcd(p.m, p.n);
  for (auto x : p.r) g = std::gcd(g, x);
  return g;
}

std::vector<LorentzianPoint> positive_cone_enum(const LorentzianLattice& l, std::int64_t max_height) {
  std::vector<LorentzianPoint> out;
  if (max_height < 1) return out;
  const std::int64_t top = 2 * (max_height / 2) * ((max_height + 1) / 2);
  const auto shorts = short_vectors(l.definite_dual(), Vector(l.rank()), Rational(static_cast<long>(top)));
  for (std::int64_t h = 1; h <= max_height; ++h) {
    for (std::int64_t m = 0; m <= h; ++m) {
      const std::int64_t n = h - m;
      const Rational bound(static_cast<long>(2 * m * n));
      for (const auto& sv : shorts) {
        if (sv.norm > bound) continue;
        out.push_back({sv.coords, m, n});
      }
    }
  }
  return out;
}

std::vector<IsotropicRay> primitive_isotropic_enum(const LorentzianLattice& l, std::int64_t max_height) {
  std::vector<IsotropicRay> out;
  for (auto& p : positive_cone_enum(l, max_height)) {
    if (l.norm(p) != 0 || !l.primitive_in_lattice(p)) continue;
    const std::int64_t h = p.height();
    out.push_back({std::move(p), max_height / h});
  }
  return out;
}

}  // namespace twistden
