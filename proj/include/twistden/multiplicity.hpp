#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "twistden/eta.hpp"
#include "twistden/lattice.hpp"
#include "twistden/lorentzian.hpp"
#include "twistden/octonion.hpp"
#include "twistden/report.hpp"

namespace twistden {

class NonIntegralMultiplicity : public Error {
 public:
  using Error::Error;
};
class TheoremClosedFormMismatch : public Error {
 public:
  using Error::Error;
};
/// A divisor d with 1 < gcd(d, N) < N needs traces of g^d that are not available.
class ExtensionBoundary : public Error {
 public:
  using Error::Error;
};

enum class Parity { even, odd };

/// One class r* + F of F*/F with the complement data of the dimension formula.
struct CosetData {
  DiscriminantClass cls;
  /// r_perp* in the dual of the complement with r* + r_perp* in E8.
  Vector complement_shift;
  /// Theta series of r_perp* + complement.
  QSeries theta;
  /// q^{1/2} fake_c * theta
  QSeries dim;
};

/// Everything about one twisting element needed for its multiplicities and identity.
class TwistClass {
 public:
  /// Shipped elements of order 1, 3, 7. Generating functions are exact far enough for
  /// every root alpha with -alpha^2/2 <= max_depth.
  static TwistClass build(int order, const Rational& max_depth);
  /// Throws Error for even order or when tr rho_L(u) != tr rho_R(u).
  static TwistClass from_element(const SpinElement& u, const Rational& max_depth);

  int order() const { return order_; }
  const CycleShape& shape_V() const { return shape_V_; }
  const CycleShape& shape_L() const { return shape_L_; }
  const CycleShape& shape_R() const { return shape_R_; }
  int trace_L() const { return trace_L_; }
  const Lattice& e8() const { return e8_; }
  const Lattice& fixed() const { return fixed_; }
  const Lattice& complement() const { return complement_; }
  const LorentzianLattice& lorentzian() const { return lorentz_; }
  const std::vector<CosetData>& cosets() const { return cosets_; }
  const QSeries& trace_even() const { return trace_even_; }
  const QSeries& trace_odd() const { return trace_odd_; }
  const Rational& max_depth() const { return max_depth_; }
  /// c(n) of the closed forms (fake_c, c3, c7); empty for other orders.
  const std::optional<QSeries>& c_series() const { return c_series_; }
  /// Tail series a(n) of the sum side.
  QSeries tail_series(const Rational& prec) const;

 private:
  int order_ = 1;
  CycleShape shape_V_, shape_L_, shape_R_;
  int trace_L_ = 0;
  Lattice e8_, fixed_, complement_;
  LorentzianLattice lorentz_;
  std::vector<CosetData> cosets_;
  QSeries trace_even_, trace_odd_;
  std::optional<QSeries> c_series_;
  Rational max_depth_;
};

/// tr(g^d | E_{parity, beta}) from the trace and dimension generating functions.
Rational trace_term(const TwistClass& tc, std::int64_t d, const LorentzianPoint& beta, Parity parity);

/// sum_{ds | ((alpha, L), N)} mu(s)/(ds) tr(g^d | E_{alpha/ds}). Throws NonIntegralMultiplicity.
BigInt mult_theorem1(const TwistClass& tc, const LorentzianPoint& alpha, Parity parity);

struct MultPair {
  BigInt even;
  BigInt odd;
  friend bool operator==(const MultPair&, const MultPair&) = default;
};

/// 0 off L, c(-alpha^2/2) on L \ NL*, plus c(-alpha^2/2N) on NL*; fake_c(-alpha^2/2) for N = 1.
MultPair mult_closed(const TwistClass& tc, const LorentzianPoint& alpha);

/// (sum_{a | k} b_a over the rho_V shape, same over the rho_L shape).
MultPair simple_root_mult(const TwistClass& tc, std::int64_t k);

struct MultRow {
  LorentzianPoint alpha;
  std::string coset;
  Rational norm;
  std::int64_t pairing = 0;
  BigInt mult_even;
  BigInt mult_odd;
  std::string source;
};

/// Two rows per alpha of the positive cone with height <= max_height (and -alpha^2 <= max_norm
/// if given): "theorem1" then "closed". Throws TheoremClosedFormMismatch.
std::vector<MultRow> build_mult_table(const TwistClass& tc, std::int64_t max_height,
                                      const std::optional<Rational>& max_norm = std::nullopt);

/// The consistency checks behind build_mult_table, reported instead of thrown.
std::vector<Check> verify_multiplicities(const TwistClass& tc, std::int64_t max_height,
                                         const std::optional<Rational>& max_norm = std::nullopt);

std::string mult_table_csv(const std::vector<MultRow>& rows);
std::string mult_table_json(const std::vector<MultRow>& rows);

/// Largest -alpha^2/2 over the positive cone of height <= max_height.
Rational depth_for_height(std::int64_t max_height);

}  // namespace twistden
