#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "twistden/lattice.hpp"

namespace twistden {

/// (r*; m, n) in F* + II_{1,1}: r* by its coordinates in the dual basis of F, and (m, n) in the
/// hyperbolic plane with Gram [[0, -1], [-1, 0]].
struct LorentzianPoint {
  std::vector<std::int64_t> r;
  std::int64_t m = 0;
  std::int64_t n = 0;

  std::int64_t height() const { return m + n; }
  bool is_zero() const;
  std::string to_string() const;

  friend auto operator<=>(const LorentzianPoint&, const LorentzianPoint&) = default;
  friend bool operator==(const LorentzianPoint&, const LorentzianPoint&) = default;
};

LorentzianPoint operator+(const LorentzianPoint& a, const LorentzianPoint& b);
LorentzianPoint operator*(std::int64_t k, const LorentzianPoint& a);
/// Exact division of every coordinate; throws Error if k does not divide them all.
LorentzianPoint divide(const LorentzianPoint& a, std::int64_t k);

/// L = F + II_{1,1} for a positive definite even lattice F, with L* = F* + II_{1,1}.
class LorentzianLattice {
 public:
  LorentzianLattice() = default;
  explicit LorentzianLattice(Lattice definite);

  const Lattice& definite() const { return definite_; }
  const Lattice& definite_dual() const { return dual_; }
  const DiscriminantGroup& discriminant() const { return disc_; }
  std::size_t rank() const { return definite_.rank(); }

  /// r*^2 - 2mn
  Rational norm(const LorentzianPoint& p) const;
  Rational definite_norm(const LorentzianPoint& p) const;
  /// m, n >= 0, r*^2 <= 2mn, p != 0.
  bool in_positive_cone(const LorentzianPoint& p) const;
  /// Coordinates of r* in the basis of F.
  Vector lattice_coordinates(const LorentzianPoint& p) const;
  bool in_lattice(const LorentzianPoint& p) const;
  /// p in k L*
  bool in_scaled_dual(const LorentzianPoint& p, std::int64_t k) const;
  /// p in L and not a proper multiple of a vector of L.
  bool primitive_in_lattice(const LorentzianPoint& p) const;
  /// Index of the class of r* in F*/F.
  std::size_t coset_index(const LorentzianPoint& p) const;
  std::string coset_label(const LorentzianPoint& p) const;

 private:
  Lattice definite_;
  Lattice dual_;
  RationalMatrix dual_gram_;
  DiscriminantGroup disc_;
};

/// gcd of the pairings of p with a basis of L: gcd(r*, m, n).
std::int64_t pairing_divisor(const LorentzianPoint& p);

/// Nonzero points of the positive cone of L* with height m + n <= max_height, ordered by
/// height, then m, then r* lexicographically.
std::vector<LorentzianPoint> positive_cone_enum(const LorentzianLattice& l, std::int64_t max_height);

struct IsotropicRay {
  LorentzianPoint primitive;
  /// Largest k with k h(primitive) <= max_height.
  std::int64_t max_multiple;
};

/// Primitive norm-zero vectors of L in the positive cone with height <= max_height.
std::vector<IsotropicRay> primitive_isotropic_enum(const LorentzianLattice& l, std::int64_t max_height);

}  // namespace twistden
