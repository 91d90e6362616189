#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "twistden/multiplicity.hpp"
#include "twistden/report.hpp"

namespace twistden {

/// sum c_alpha e^alpha over points of L* with 0 <= h(alpha) <= max_height.
struct LatticeSeries {
  std::int64_t max_height = 0;
  std::map<LorentzianPoint, BigInt> terms;

  BigInt coefficient(const LorentzianPoint& p) const;
  friend bool operator==(const LatticeSeries&, const LatticeSeries&) = default;
};

/// Coefficients of (1 - x)^m_even (1 + x)^{-m_odd} up to x^order.
std::vector<BigInt> expand_factor_coefficients(const BigInt& m_even, const BigInt& m_odd, std::int64_t order);

/// (1 - e^alpha)^m_even / (1 + e^alpha)^m_odd truncated at height max_height.
LatticeSeries expand_factor(const LorentzianPoint& alpha, const BigInt& m_even, const BigInt& m_odd,
                            std::int64_t max_height);

/// Product of two series, truncated at the smaller height.
LatticeSeries multiply(const LatticeSeries& a, const LatticeSeries& b);

enum class ProductForm {
  /// One factor per alpha in L*+ with the trace-formula multiplicities.
  theorem1,
  /// prod over L+ with c(-alpha^2/2) times prod over L+ cap NL* with c(-alpha^2/2N).
  split,
};

struct Factor {
  LorentzianPoint alpha;
  BigInt m_even;
  BigInt m_odd;
};

std::vector<Factor> product_factors(const TwistClass& tc, std::int64_t max_height, ProductForm form);

/// Product side; factors are split into `jobs` contiguous chunks multiplied in parallel and
/// merged in chunk order. The result does not depend on jobs.
LatticeSeries product_side(const TwistClass& tc, std::int64_t max_height, ProductForm form = ProductForm::split,
                           int jobs = 1);
LatticeSeries product_from_factors(const std::vector<Factor>& factors, std::size_t rank, std::int64_t max_height,
                                   int jobs = 1);

/// 1 + sum over primitive isotropic lambda in L+ of sum_k a(k) e^{k lambda}.
LatticeSeries sum_side(const TwistClass& tc, std::int64_t max_height, bool perturb = false);

struct IdentityReport {
  int order = 0;
  std::int64_t height = 0;
  std::size_t factor_count = 0;
  std::size_t product_terms = 0;
  std::size_t sum_terms = 0;
  std::vector<Check> checks;
  long long wall_ms = 0;

  bool pass() const;
};

/// Expands both sides of the (twisted) denominator identity up to height max_height and
/// compares them; perturb corrupts a(1) on the sum side.
IdentityReport verify_identity(int order, std::int64_t max_height, int jobs = 1, bool perturb = false);

/// {"max_height", "terms": [{"alpha": [r..., m, n], "coefficient"}]}
std::string lattice_series_json(const LatticeSeries& s);

}  // namespace twistden
