#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "twistden/numeric.hpp"

namespace twistden {

class ZeroLeadingTerm : public Error {
 public:
  using Error::Error;
};
class NonIntegerExponents : public Error {
 public:
  using Error::Error;
};
class EmptyComparisonRange : public Error {
 public:
  using Error::Error;
};
/// Raised when a coefficient at or beyond the truncation point is requested.
class BeyondTruncation : public Error {
 public:
  using Error::Error;
};

/// Truncated Puiseux series sum_k c_k q^{k/D} with exact rational coefficients.
///
/// Every coefficient with exponent below trunc() is exactly represented; nothing is
/// known at or above it. An empty trunc() means the series is an exact finite sum.
/// The exponent denominator D is kept minimal, so two series with the same values
/// always have identical internal representations.
class QSeries {
 public:
  using Terms = std::map<std::int64_t, Rational>;

  /// The exact zero series.
  QSeries() = default;

  /// Terms keyed by numerator over expdenom; zero coefficients and terms at or above
  /// trunc are dropped.
  QSeries(std::int64_t expdenom, Terms terms, std::optional<Rational> trunc);

  static QSeries zero(std::optional<Rational> trunc = std::nullopt);
  static QSeries constant(const Rational& c, std::optional<Rational> trunc = std::nullopt);
  static QSeries monomial(const Rational& coeff, const Rational& exponent,
                          std::optional<Rational> trunc = std::nullopt);
  /// sum_{k < coeffs.size()} coeffs[k] q^k, known below q^{coeffs.size()} unless given.
  static QSeries from_integer_coefficients(const std::vector<BigInt>& coeffs,
                                           std::optional<Rational> trunc = std::nullopt);

  std::int64_t expdenom() const { return denom_; }
  const Terms& terms() const { return terms_; }
  const std::optional<Rational>& trunc() const { return trunc_; }
  bool is_exact() const { return !trunc_.has_value(); }
  bool is_zero() const { return terms_.empty(); }

  /// Lowest stored exponent, if any term is stored.
  std::optional<Rational> valuation() const;

  /// Coefficient of q^exponent; 0 for exponents off the grid. Throws BeyondTruncation.
  Rational coefficient(const Rational& exponent) const;

  /// (exponent, coefficient) pairs in increasing exponent order.
  std::vector<std::pair<Rational, Rational>> items() const;

  /// Coefficients of q^0 .. q^{count-1}. Throws BeyondTruncation if not all are known.
  std::vector<Rational> integer_coefficients(std::size_t count) const;

  /// Restricts the known range to exponents below t (no-op if already tighter).
  QSeries truncated(const Rational& t) const;

 private:
  void normalize();

  std::int64_t denom_ = 1;
  Terms terms_;
  std::optional<Rational> trunc_;
};

QSeries operator+(const QSeries& a, const QSeries& b);
QSeries operator-(const QSeries& a, const QSeries& b);
QSeries operator-(const QSeries& a);
QSeries operator*(const QSeries& a, const QSeries& b);
QSeries operator*(const Rational& c, const QSeries& a);

/// Multiplies by q^exponent.
QSeries shift(const QSeries& a, const Rational& exponent);

/// 1/a. Throws ZeroLeadingTerm if no term is known, Error if a is an exact
/// non-monomial (its inverse has no finite exact form).
QSeries inverse(const QSeries& a);

/// a^e by repeated squaring; negative e goes through inverse().
QSeries power(const QSeries& a, std::int64_t e);

/// Formal substitution q -> q^k for rational k > 0.
QSeries substitute_power(const QSeries& a, const Rational& k);

/// Terms whose (integral) exponent is congruent to residue mod m.
/// Throws NonIntegerExponents if some exponent is not an integer.
QSeries multisection(const QSeries& a, std::int64_t m, std::int64_t residue);

/// Lowest exponent below both truncations where a and b differ.
/// Throws EmptyComparisonRange when the common known range contains nothing to compare.
std::optional<Rational> first_difference(const QSeries& a, const QSeries& b);

/// True iff a and b agree on the common known range (see first_difference).
bool agree(const QSeries& a, const QSeries& b);

/// Smaller of two truncation points (empty = infinity).
std::optional<Rational> min_trunc(const std::optional<Rational>& a, const std::optional<Rational>& b);

}  // namespace twistden
