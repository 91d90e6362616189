#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "twistden/qseries.hpp"
#include "twistden/report.hpp"

namespace twistden {

/// prod_k eta(q^k)^{e_k}; scales are distinct and positive.
class EtaQuotient {
 public:
  struct Factor {
    int scale;
    int exponent;
  };

  EtaQuotient() = default;
  explicit EtaQuotient(std::vector<Factor> factors);

  const std::vector<Factor>& factors() const { return factors_; }
  /// sum_k k e_k / 24
  Rational leading_exponent() const;

 private:
  std::vector<Factor> factors_;
};

/// Expansion of the eta quotient, exact below q^prec. Throws Error if prec does not
/// exceed the leading exponent.
QSeries eta_expand(const EtaQuotient& spec, const Rational& prec);

/// prod_{n>=1} (1 - q^n) up to (excluding) q^count, from the pentagonal number theorem.
std::vector<BigInt> euler_product(std::size_t count);

enum class NamedSeries { fake_c, c3, c7, a3, a7 };

std::string_view series_name(NamedSeries s);
std::optional<NamedSeries> parse_series_name(std::string_view name);
std::vector<NamedSeries> all_named_series();

/// The multiplicity series c(n) (fake_c, c3, c7) and tail series a(n) (a3, a7).
QSeries named_series(NamedSeries s, const Rational& prec);

/// prod (1-q^n)^8 / (1+q^n)^8, the simple-root tail series of the untwisted identity.
QSeries untwisted_tail_series(const Rational& prec);

/// Orthogonal map with characteristic polynomial prod_a (x^a - 1)^{b_a}.
class CycleShape {
 public:
  CycleShape() = default;
  /// cycle length -> multiplicity; zero multiplicities are dropped.
  explicit CycleShape(std::map<int, int> cycles);

  /// Parses "1^2 3^2" or "1^8" (also accepts "1^2.3^2").
  static CycleShape parse(std::string_view text);

  const std::map<int, int>& cycles() const { return cycles_; }
  /// sum a b_a
  int degree() const;
  /// Number of fixed points, b_1.
  int trace() const;
  /// sum of b_a over cycle lengths a dividing k.
  int divisor_sum(int k) const;
  /// Coefficients (constant first) of prod (x^a - 1)^{b_a}.
  std::vector<BigInt> characteristic_polynomial() const;
  std::string to_string() const;

  friend bool operator==(const CycleShape&, const CycleShape&) = default;

 private:
  std::map<int, int> cycles_;
};

enum class ProductSign { plus, minus };
enum class ExponentShift { integral, half };

/// prod_{n>=1} prod_i (1 + sign eps_i q^{n - shift}) for the eigenvalues eps_i of the
/// shape, i.e. prod_n prod_a (1 - (-sign q^{n-shift})^a)^{b_a}; exact below q^prec.
QSeries cycle_product(const CycleShape& shape, ProductSign sign, ExponentShift shift, const Rational& prec);

/// 1/2 (prod (1 + eps q^{n-1/2}) - prod (1 - eps q^{n-1/2})) / prod (1 - eps q^n).
/// Its q^{(1-a^2)/2} coefficient is the trace of g on the even root space at a.
QSeries trace_gf_even(const CycleShape& shape, const Rational& prec);

/// trace_L q^{1/2} prod (1 + eps q^n) / (1 - eps q^n), the odd-space analogue.
QSeries trace_gf_odd(const CycleShape& shape, int trace_L, const Rational& prec);

/// Exact comparison of two series on their common known range.
Check compare_series(std::string name, const QSeries& expected, const QSeries& got);

/// Checks trace_gf_even == trace_gf_odd and the raw product identity
/// 1/(2 q^{1/2}) (P+ - P-) == trace_L prod (1 + eps q^n).
std::vector<Check> verify_susy_identity(const CycleShape& shape, int trace_L, const Rational& prec);

/// The shipped twists: order 3 (1^2 3^2, trace 2), order 7 (1^1 7^1, trace 1) and the
/// untwisted order 1 (1^8, trace 8).
std::vector<Check> verify_susy_identity(int order, const Rational& prec);

/// 8 q^{1/2} eta(q^2)^8 / eta(q)^16 * theta; coefficient at q^{(1-a^2)/2} is the
/// dimension of the root space over a with the given complement coset theta series.
QSeries dim_gf(const QSeries& coset_theta, const Rational& prec);

enum class ThetaCase { A2A2, A6 };

class InvalidClass : public Error {
 public:
  using Error::Error;
};

/// Theta series of a coset r + A2+A2 (resp. r + A6) from its norm class r^2 mod 2,
/// with the root-of-unity sum realized as a rational multisection.
QSeries theta_coset_formula(ThetaCase which, const Rational& norm_class, const Rational& prec);

/// Norm classes r^2 mod 2 realized by cosets of the dual.
std::vector<Rational> theta_norm_classes(ThetaCase which);

}  // namespace twistden
