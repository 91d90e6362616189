#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "twistden/eta.hpp"
#include "twistden/matrix.hpp"
#include "twistden/report.hpp"

namespace twistden {

/// x_0 e_0 + ... + x_7 e_7 with e_0 = 1 and e_i e_j = a_ijk e_k - delta_ij for i, j >= 1,
/// a_ijk totally antisymmetric with a = 1 on 123, 154, 264, 374, 176, 257, 365.
class Octonion {
 public:
  Octonion() = default;
  explicit Octonion(std::array<Rational, 8> coords) : c_(std::move(coords)) {}

  static Octonion basis(int i);

  const Rational& operator[](int i) const { return c_[static_cast<std::size_t>(i)]; }
  Rational& operator[](int i) { return c_[static_cast<std::size_t>(i)]; }
  const std::array<Rational, 8>& coords() const { return c_; }

  /// Sum of squares of the coordinates.
  Rational norm() const;
  Octonion conjugate() const;
  std::string to_string() const;

  friend Octonion operator*(const Octonion& a, const Octonion& b);
  friend Octonion operator+(Octonion a, const Octonion& b);
  friend Octonion operator-(Octonion a, const Octonion& b);
  friend Octonion operator*(const Rational& s, Octonion a);
  friend bool operator==(const Octonion&, const Octonion&) = default;

 private:
  std::array<Rational, 8> c_{};
};

std::vector<Rational> to_vector(const Octonion& x);
Octonion from_vector(const std::vector<Rational>& v);

/// Matrices (columns = images of e_0..e_7) of x -> bx, x -> xb and x -> b x b.
RationalMatrix left_matrix(const Octonion& b);
RationalMatrix right_matrix(const Octonion& b);
/// L_b R_b; throws Error if L_b R_b != R_b L_b.
RationalMatrix bi_matrix(const Octonion& b);

class IrrationalNormalizer : public Error {
 public:
  using Error::Error;
};
class OrderExceedsCap : public Error {
 public:
  using Error::Error;
};
class NotProductOfCyclotomicBlocks : public Error {
 public:
  using Error::Error;
};

/// 1 b_1 ... 1 b_n in the Clifford algebra, up to the positive scalar that makes its
/// three 8-dimensional images orthogonal.
class SpinElement {
 public:
  SpinElement() = default;
  /// Throws Error on an odd number of factors or a zero factor.
  explicit SpinElement(std::vector<Octonion> factors);

  const std::vector<Octonion>& factors() const { return factors_; }
  /// prod N(b_i)
  Rational norm_product() const;
  /// 1 / prod sqrt N(b_i); throws IrrationalNormalizer if that is irrational.
  Rational spinor_normalizer() const;

 private:
  std::vector<Octonion> factors_;
};

/// U_{b_1} ... U_{b_n} / prod N(b_i)
RationalMatrix rho_V(const SpinElement& u);
/// L_{b_1} ... L_{b_n} / prod sqrt N(b_i)
RationalMatrix rho_L(const SpinElement& u);
/// R_{b_1} ... R_{b_n} / prod sqrt N(b_i)
RationalMatrix rho_R(const SpinElement& u);

/// Order 3: (e2-e3, e1-e2, e6-e7, e5-e6); order 7: (e6-e7, e5-e6, ..., e1-e2);
/// order 1: the empty product. Throws Error for any other order.
SpinElement build_twist_element(int order);

/// The scalar written in front of the element: 1/4, 1/8 (1 for the identity).
Rational tabulated_scalar(int order);

/// Permutation matrix of the tabulated action of rho_V(u) on e_0..e_7.
RationalMatrix tabulated_action(int order);

bool is_orthogonal(const RationalMatrix& m);

/// Least k <= cap with m^k = 1; throws OrderExceedsCap.
int matrix_order(const RationalMatrix& m, int cap = 360);

/// Cycle shape from tr(m^d) = sum_{a | d} a b_a by Moebius inversion, validated against
/// the characteristic polynomial. Throws NotProductOfCyclotomicBlocks.
CycleShape cycle_shape(const RationalMatrix& m, int cap = 360);

/// rho_V(u)(ab) == (rho_L(u) a)(rho_R(u) b) on all basis pairs and the sample.
Check verify_triality(const SpinElement& u, const std::vector<std::pair<Octonion, Octonion>>& sample = {});

}  // namespace twistden
