#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "twistden/matrix.hpp"
#include "twistden/qseries.hpp"

namespace twistden {

class SingularGram : public Error {
 public:
  using Error::Error;
};
class SearchExhausted : public Error {
 public:
  using Error::Error;
};

using Vector = std::vector<Rational>;

/// Lattice spanned by the rows of basis inside a rational quadratic space (ambient form).
class Lattice {
 public:
  Lattice() = default;
  /// Throws Error if the rows are linearly dependent or the shapes disagree.
  Lattice(RationalMatrix basis, RationalMatrix form);
  /// Z^n with the given Gram matrix as ambient form.
  static Lattice from_gram(const RationalMatrix& gram);

  std::size_t rank() const { return basis_.rows(); }
  std::size_t ambient_dim() const { return form_.rows(); }
  const RationalMatrix& basis() const { return basis_; }
  const RationalMatrix& form() const { return form_; }
  const RationalMatrix& gram() const { return gram_; }

  Rational determinant() const;
  bool is_integral() const;
  bool is_even() const;

  Rational inner(const Vector& v, const Vector& w) const;
  Rational norm(const Vector& v) const { return inner(v, v); }

  /// sum coords_i b_i
  Vector ambient(const Vector& coords) const;
  /// Coordinates of v in the basis; nullopt if v is not in the rational span.
  std::optional<Vector> coordinates(const Vector& v) const;
  bool contains(const Vector& v) const;

 private:
  RationalMatrix basis_;
  RationalMatrix form_;
  RationalMatrix gram_;
};

/// E8 in the octonion coordinates (all m_i integral or all in Z + 1/2, sum even), with
/// basis rows 2e_0, e_1 - e_0, e_2 - e_1, ..., e_6 - e_5, (1/2, ..., 1/2).
Lattice e8_lattice();

/// A_n as the rank-n lattice with Cartan Gram matrix.
Lattice root_lattice_A(std::size_t n);

/// Orthogonal direct sum (block-diagonal ambient forms).
Lattice direct_sum(const Lattice& a, const Lattice& b);

/// Basis G^{-1} B of the dual, same ambient space. Throws SingularGram.
Lattice dual(const Lattice& l);

/// An element of L*/L, as coordinates of a representative in the basis of L reduced into [0, 1).
struct DiscriminantClass {
  Vector coords;
  /// r^2 mod 2 for a representative r.
  Rational norm_class;
};

struct DiscriminantGroup {
  /// Invariant factors d_1 | d_2 | ... with d_i > 1.
  std::vector<BigInt> invariants;
  /// All |L*/L| classes, the zero class first, then in breadth-first order from the dual basis.
  std::vector<DiscriminantClass> classes;

  BigInt order() const;
  /// Index of the class of a dual vector given by its coordinates in the basis of L.
  std::size_t index_of(const Vector& coords) const;
};

/// Throws SingularGram.
DiscriminantGroup discriminant_group(const Lattice& l);

/// Least N with N beta^2 in 2Z for all beta in L*. Throws SingularGram.
BigInt level(const Lattice& l);

/// Vectors of l fixed by m (m acts on the ambient space, columns are images). l must have
/// full rank in its ambient space and be preserved by m.
Lattice fixed_sublattice(const RationalMatrix& m, const Lattice& l);

/// Vectors of container orthogonal to every vector of s.
Lattice orthogonal_complement(const Lattice& s, const Lattice& container);

/// Whether m maps l onto itself.
bool preserves(const RationalMatrix& m, const Lattice& l);

/// LLL-reduced basis (delta = 3/4) of a positive definite lattice.
Lattice lll_reduce(const Lattice& l);

/// Orthogonal projection of the ambient space onto the rational span of s.
Vector project(const Lattice& s, const Vector& v);

/// Short vectors in the coordinates of the basis of l, with their norms.
struct ShortVector {
  std::vector<std::int64_t> coords;
  Rational norm;
};

/// All z in Z^rank with (z + shift)^2 <= max_norm (shift given in basis coordinates),
/// sorted lexicographically by z. l must be positive definite.
std::vector<ShortVector> short_vectors(const Lattice& l, const Vector& shift, const Rational& max_norm);

/// Calls visit(norm) for every vector of shift + l with norm <= max_norm; no ordering.
void visit_coset_norms(const Lattice& l, const Vector& shift, const Rational& max_norm,
                       const std::function<void(const Rational&)>& visit);

/// All v in shift + l (shift an ambient vector in the span of l) with v^2 <= max_norm,
/// sorted lexicographically by their ambient coordinates.
std::vector<Vector> enumerate_coset(const Lattice& l, const Vector& shift, const Rational& max_norm);

/// sum_{v in shift + l} q^{v^2/2}, exact below q^prec.
QSeries theta_coset(const Lattice& l, const Vector& shift, const Rational& prec);
QSeries theta_series(const Lattice& l, const Rational& prec);

/// For r_star in the span of the fixed lattice f inside e8, finds x in e8 with
/// pi(x) - r_star in f by searching e8 vectors of norm <= 2, 4, ..., max_norm and
/// returns x - pi(x), which lies in the dual of the complement. Throws SearchExhausted.
Vector coset_complement_shift(const Lattice& e8, const Lattice& f, const Vector& r_star,
                              const Rational& max_norm = 16);

/// {"ambient_dim", "basis", "gram", "form"} with entries as exact fraction strings.
std::string lattice_to_json(const Lattice& l);

}  // namespace twistden
