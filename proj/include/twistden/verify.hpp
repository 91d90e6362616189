#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "twistden/report.hpp"
#include "twistden/numeric.hpp"

namespace twistden {

/// Invalid request (unsupported order, bad bound); the CLI maps it to exit code 2.
class UsageError : public Error {
 public:
  using Error::Error;
};

struct VerifyOptions {
  /// Empty: every shipped order.
  std::optional<int> order;
  /// 0: the default for the order (4 for order 1, else 6).
  std::int64_t height = 0;
  Rational prec = 50;
  std::optional<Rational> max_norm;
  int jobs = 1;
  /// Fault injection for exercising the failure path.
  bool perturb = false;
};

const std::vector<int>& shipped_orders();
std::int64_t default_height(int order);

/// target is one of susy, theta, spin, lattice, mult, denominator. The report has command
/// "verify <target>" and no params; callers fill those in.
Report verify_target(std::string_view target, const VerifyOptions& opts);

Report verify_susy(const VerifyOptions& opts);
Report verify_theta(const VerifyOptions& opts);
Report verify_spin(const VerifyOptions& opts);
Report verify_lattice(const VerifyOptions& opts);
Report verify_mult(const VerifyOptions& opts);
Report verify_denominator(const VerifyOptions& opts);

}  // namespace twistden
