#include "twistden/verify.hpp"

#include <chrono>

#include "twistden/denominator.hpp"
#include "twistden/eta.hpp"
#include "twistden/lattice.hpp"
#include "twistden/multiplicity.hpp"
#include "twistden/octonion.hpp"

namespace twistden {

namespace {

std::vector<int> requested_orders(const VerifyOptions& opts, const std::vector<int>& allowed) {
  if (!opts.order) return allowed;
  for (int o : allowed)
    if (o == *opts.order) return {o};
  std::string list;
  for (int o : allowed) list += (list.empty() ? "" : ", ") + std::to_string(o);
  throw UsageError("order " + std::to_string(*opts.order) + " is not supported here (choose from " + list + ")");
}

std::int64_t height_for(const VerifyOptions& opts, int order) {
  const std::int64_t h = opts.height > 0 ? opts.height : default_height(order);
  return h;
}

Check expect(std::string name, std::string range, const std::string& expected, const std::string& got,
             std::string location = "value") {
  Check c{std::move(name), std::move(range), expected == got, std::nullopt};
  if (!c.pass) c.first_discrepancy = Discrepancy{std::move(location), expected, got};
  return c;
}

std::string tag(int order) { return " [order " + std::to_string(order) + "]"; }

std::string join(const std::vector<BigInt>& xs) {
  std::string s;
  for (const auto& x : xs) s += (s.empty() ? "" : " x ") + to_string(x);
  return s.empty() ? "1" : s;
}

Check compare_matrices(std::string name, const RationalMatrix& expected, const RationalMatrix& got) {
  Check c{std::move(name), "8x8", true, std::nullopt};
  for (std::size_t j = 0; j < expected.cols() && c.pass; ++j)
    for (std::size_t i = 0; i < expected.rows(); ++i)
      if (expected(i, j) != got(i, j)) {
        c.pass = false;
        c.first_discrepancy = Discrepancy{"row " + std::to_string(i) + ", column e_" + std::to_string(j),
                                          to_string(expected(i, j)), to_string(got(i, j))};
        break;
      }
  return c;
}

CycleShape expected_shape(int order) {
  switch (order) {
    case 1: return CycleShape::parse("1^8");
    case 3: return CycleShape::parse("1^2 3^2");
    default: return CycleShape::parse("1^1 7^1");
  }
}

struct TwistLattices {
  Lattice e8, fixed, complement;
};

TwistLattices twist_lattices(int order) {
  TwistLattices t;
  t.e8 = e8_lattice();
  t.fixed = fixed_sublattice(rho_V(build_twist_element(order)), t.e8);
  t.complement = orthogonal_complement(t.fixed, t.e8);
  return t;
}

// Theta series of the fixed lattice from its coordinate description: doubled coordinates x = 2m,
// all of one parity, with the parity condition on the sum.
QSeries fixed_point_set_theta(int order, std::int64_t prec) {
  QSeries::Terms terms;
  const auto bound_for = [&](std::int64_t weight) {
    std::int64_t b = 0;
    while (weight * b * b < 8 * prec) ++b;
    return b;
  };
  const std::int64_t b1 = bound_for(1), b3 = bound_for(3), b7 = bound_for(7);
  auto add = [&](std::int64_t quad) {  // quad = 4 m^2, exponent m^2/2 = quad/8
    if (quad < 8 * prec) terms[quad] += 1;
  };
  if (order == 3) {
    for (std::int64_t a = -b1; a <= b1; ++a)
      for (std::int64_t b = -b1; b <= b1; ++b)
        for (std::int64_t c = -b3; c <= b3; ++c)
          for (std::int64_t d = -b3; d <= b3; ++d) {
            const std::int64_t par = a & 1;
            if ((b & 1) != par || (c & 1) != par || (d & 1) != par) continue;
            if (mod_positive(a + b + c + d, 4) != 0) continue;
            add(a * a + b * b + 3 * c * c + 3 * d * d);
          }
  } else {
    for (std::int64_t a = -b1; a <= b1; ++a)
      for (std::int64_t b = -b7; b <= b7; ++b) {
        if ((a & 1) != (b & 1)) continue;
        if (mod_positive(a + b, 4) != ((a & 1) ? 2 : 0)) continue;
        add(a * a + 7 * b * b);
      }
  }
  return QSeries(8, std::move(terms), Rational(prec));
}

}  // namespace

const std::vector<int>& shipped_orders() {
  static const std::vector<int> orders{1, 3, 7};
  return orders;
}

std::int64_t default_height(int order) { return order == 1 ? 4 : 6; }

Report verify_susy(const VerifyOptions& opts) {
  Report r;
  r.command = "verify susy";
  if (opts.prec <= 0) throw UsageError("precision must be positive");
  for (int order : requested_orders(opts, shipped_orders())) {
    const CycleShape shape = expected_shape(order);
    const int trace = shape.trace() + (opts.perturb ? 1 : 0);
    r.append(verify_susy_identity(shape, trace, opts.prec));
    const NamedSeries cs = order == 1 ? NamedSeries::fake_c : order == 3 ? NamedSeries::c3 : NamedSeries::c7;
    const Rational half = make_rational(1, 2);
    r.add(compare_series("trace generating function == q^{1/2} " + std::string(series_name(cs)) + tag(order),
                         shift(named_series(cs, opts.prec - half), half), trace_gf_even(shape, opts.prec)));
  }
  return r;
}

Report verify_theta(const VerifyOptions& opts) {
  Report r;
  r.command = "verify theta";
  if (opts.prec <= 0) throw UsageError("precision must be positive");
  for (int order : requested_orders(opts, {3, 7})) {
    const ThetaCase which = order == 3 ? ThetaCase::A2A2 : ThetaCase::A6;
    const std::string name = order == 3 ? "A2+A2" : "A6";
    const TwistLattices t = twist_lattices(order);
    const DiscriminantGroup dg = discriminant_group(t.complement);
    for (std::size_t i = 0; i < dg.classes.size(); ++i) {
      const auto& cls = dg.classes[i];
      const QSeries enumerated = theta_coset(t.complement, t.complement.ambient(cls.coords), opts.prec);
      QSeries formula = theta_coset_formula(which, cls.norm_class, opts.prec);
      if (opts.perturb) formula = formula + QSeries::monomial(1, 0, opts.prec);
      r.add(compare_series(name + " coset " + std::to_string(i) + " (r^2 = " + to_string(cls.norm_class) +
                               " mod 2): formula == enumeration",
                           enumerated, formula));
    }
  }
  return r;
}

Report verify_spin(const VerifyOptions& opts) {
  Report r;
  r.command = "verify spin";
  const Lattice e8 = e8_lattice();
  for (int order : requested_orders(opts, shipped_orders())) {
    const std::string t = tag(order);
    const SpinElement u = build_twist_element(order);
    const RationalMatrix v = rho_V(u), l = rho_L(u), rr = rho_R(u);
    RationalMatrix tabulated = tabulated_action(order);
    if (opts.perturb) tabulated = tabulated.transpose();
    r.add(compare_matrices("rho_V == tabulated action" + t, tabulated, v));
    r.add(compare_matrices("rho_L == tabulated action" + t, tabulated, l));
    r.add(compare_matrices("rho_R == tabulated action" + t, tabulated, rr));
    const std::string n = std::to_string(order);
    r.add(expect("order of rho_V" + t, "cap 360", n, std::to_string(matrix_order(v))));
    r.add(expect("order of rho_L" + t, "cap 360", n, std::to_string(matrix_order(l))));
    r.add(expect("order of rho_R" + t, "cap 360", n, std::to_string(matrix_order(rr))));
    const std::string shape = expected_shape(order).to_string();
    r.add(expect("cycle shape of rho_V" + t, "all powers", shape, cycle_shape(v).to_string()));
    r.add(expect("cycle shape of rho_L" + t, "all powers", shape, cycle_shape(l).to_string()));
    r.add(expect("cycle shape of rho_R" + t, "all powers", shape, cycle_shape(rr).to_string()));
    r.add(expect("spinor normalizer == tabulated scalar" + t, "exact", to_string(tabulated_scalar(order)),
                 to_string(u.spinor_normalizer())));
    Check tri = verify_triality(u);
    tri.name += t;
    r.add(tri);
    Rational tl = 0, tr = 0;
    for (std::size_t i = 0; i < 8; ++i) {
      tl += l(i, i);
      tr += rr(i, i);
    }
    r.add(expect("tr rho_L == tr rho_R" + t, "exact", to_string(tl), to_string(tr)));
    r.add(expect("rho_V, rho_L, rho_R orthogonal" + t, "exact", "true",
                 is_orthogonal(v) && is_orthogonal(l) && is_orthogonal(rr) ? "true" : "false"));
    r.add(expect("rho_V preserves E8" + t, "basis", "true", preserves(v, e8) ? "true" : "false"));
    r.add(expect("rho_L preserves E8" + t, "basis", "true", preserves(l, e8) ? "true" : "false"));
    r.add(expect("rho_R preserves E8" + t, "basis", "true", preserves(rr, e8) ? "true" : "false"));
  }
  return r;
}

Report verify_lattice(const VerifyOptions& opts) {
  Report r;
  r.command = "verify lattice";
  const Lattice e8 = e8_lattice();
  r.add(expect("E8 determinant", "exact", "1", to_string(e8.determinant())));
  r.add(expect("E8 roots", "norm 2", "240", to_string(theta_series(e8, 2).coefficient(1))));
  for (int order : requested_orders(opts, {3, 7})) {
    const std::string t = tag(order);
    const TwistLattices tl = twist_lattices(order);
    const Lattice& f = tl.fixed;
    const Lattice& c = tl.complement;
    const bool three = order == 3;
    const std::string level_expected = opts.perturb ? std::to_string(order + 1) : std::to_string(order);
    r.add(expect("fixed lattice rank" + t, "exact", three ? "4" : "2", std::to_string(f.rank())));
    r.add(expect("fixed lattice determinant" + t, "exact", three ? "9" : "7", to_string(f.determinant())));
    r.add(expect("fixed lattice level" + t, "exact", level_expected, to_string(level(f))));
    const DiscriminantGroup dg = discriminant_group(f);
    r.add(expect("discriminant group invariants" + t, "Smith form", three ? "3 x 3" : "7", join(dg.invariants)));
    r.add(expect("|discriminant group| == det" + t, "exact", to_string(f.determinant()),
                 std::to_string(dg.classes.size())));
    r.add(compare_series("fixed lattice theta == coordinate description" + t, fixed_point_set_theta(order, 10),
                         theta_series(f, 10)));
    const Lattice dd = dual(dual(f));
    r.add(expect("dual of dual == lattice" + t, "Gram and basis", "true",
                 dd.gram() == f.gram() && dd.basis() == f.basis() ? "true" : "false"));
    bool scaled = true;
    const Lattice fd = dual(f);
    for (std::size_t i = 0; i < fd.rank(); ++i) {
      Vector v = fd.basis().row(i);
      for (auto& x : v) x *= order;
      scaled = scaled && f.contains(v);
    }
    r.add(expect(std::to_string(order) + " times dual lies in the fixed lattice" + t, "dual basis", "true",
                 scaled ? "true" : "false"));
    const RationalMatrix lg = Rational(to_int64(level(f))) * fd.gram();
    r.add(expect("level times dual Gram is even" + t, "exact", "true",
                 Lattice::from_gram(lg).is_even() ? "true" : "false"));
    r.add(expect("complement rank" + t, "exact", three ? "4" : "6", std::to_string(c.rank())));
    r.add(expect("complement determinant" + t, "exact", three ? "9" : "7", to_string(c.determinant())));
    r.add(expect("rank(fixed) + rank(complement) == 8" + t, "exact", "8", std::to_string(f.rank() + c.rank())));
    const QSeries theta = theta_series(c, 10);
    r.add(expect("complement roots" + t, "norm 2", three ? "12" : "42", to_string(theta.coefficient(1))));
    const Lattice root = three ? direct_sum(root_lattice_A(2), root_lattice_A(2)) : root_lattice_A(6);
    r.add(compare_series(std::string("complement theta == theta of ") + (three ? "A2+A2" : "A6") + t,
                         theta_series(root, 10), theta));
  }
  return r;
}

Report verify_mult(const VerifyOptions& opts) {
  Report r;
  r.command = "verify mult";
  for (int order : requested_orders(opts, shipped_orders())) {
    const std::int64_t h = height_for(opts, order);
    if (h < 1) throw UsageError("height must be at least 1");
    Rational depth = depth_for_height(h);
    if (opts.max_norm && *opts.max_norm / 2 < depth) depth = *opts.max_norm / 2;
    if (depth < 0) depth = 0;
    const TwistClass tc = TwistClass::build(order, depth);
    r.append(verify_multiplicities(tc, h, opts.max_norm));
    if (opts.perturb) {
      const LorentzianPoint p{std::vector<std::int64_t>(tc.lorentzian().rank(), 0), 1, 0};
      const BigInt got = mult_theorem1(tc, p, Parity::even);
      r.add(expect("perturbed simple root" + tag(order), "(0;1,0)", to_string(BigInt(got + 1)), to_string(got),
                   p.to_string()));
    }
    r.summary.emplace_back("points [order " + std::to_string(order) + "]",
                           std::to_string(positive_cone_enum(tc.lorentzian(), h).size()));
  }
  return r;
}

Report verify_denominator(const VerifyOptions& opts) {
  Report r;
  r.command = "verify denominator";
  for (int order : requested_orders(opts, shipped_orders())) {
    const std::int64_t h = height_for(opts, order);
    if (h < 1) throw UsageError("height must be at least 1");
    const IdentityReport ir = verify_identity(order, h, opts.jobs, opts.perturb);
    r.append(ir.checks);
    const std::string t = " [order " + std::to_string(order) + "]";
    r.summary.emplace_back("factors" + t, std::to_string(ir.factor_count));
    r.summary.emplace_back("product terms" + t, std::to_string(ir.product_terms));
    r.summary.emplace_back("sum terms" + t, std::to_string(ir.sum_terms));
  }
  return r;
}

Report verify_target(std::string_view target, const VerifyOptions& opts) {
  const auto t0 = std::chrono::steady_clock::now();
  Report r;
  if (target == "susy")
    r = verify_susy(opts);
  else if (target == "theta")
    r = verify_theta(opts);
  else if (target == "spin")
    r = verify_spin(opts);
  else if (target == "lattice")
    r = verify_lattice(opts);
  else if (target == "mult")
    r = verify_mult(opts);
  else if (target == "denominator")
    r = verify_denominator(opts);
  else
    throw UsageError("unknown verification target '" + std::string(target) + "'");
  r.wall_ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

}  // namespace twistden
