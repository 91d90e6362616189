#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "twistden/eta.hpp"
#include "twistden/lattice.hpp"
#include "twistden/multiplicity.hpp"
#include "twistden/octonion.hpp"
#include "twistden/verify.hpp"

namespace py = pybind11;
using namespace twistden;

namespace {

std::vector<std::string> coefficients(const QSeries& s, std::int64_t count) {
  std::vector<std::string> out;
  for (std::int64_t n = 0; n < count; ++n) out.push_back(to_string(s.coefficient(Rational(n))));
  return out;
}

std::vector<std::pair<std::string, std::string>> series_items(const QSeries& s) {
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& [e, c] : s.items()) out.emplace_back(to_string(e), to_string(c));
  return out;
}

std::vector<std::vector<std::string>> matrix_strings(const RationalMatrix& m) {
  std::vector<std::vector<std::string>> out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i].push_back(to_string(m(i, j)));
  return out;
}

Rational rational_arg(const py::object& x) { return parse_rational(py::str(x).cast<std::string>()); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact checks of twisted denominator identities";

  py::register_exception<Error>(m, "TwistdenError");
  py::register_exception<UsageError>(m, "UsageError", m.attr("TwistdenError"));

  m.def(
      "series",
      [](const std::string& name, std::int64_t prec) {
        const auto which = parse_series_name(name);
        if (!which) throw UsageError("unknown series '" + name + "'");
        return coefficients(named_series(*which, Rational(prec)), prec);
      },
      py::arg("name"), py::arg("prec") = 50, "Coefficients of q^0 .. q^(prec-1) as exact strings.");

  m.def(
      "theta_coset_formula",
      [](int order, const py::object& norm_class, const py::object& prec) {
        if (order != 3 && order != 7) throw UsageError("theta formulas exist for orders 3 and 7");
        return series_items(theta_coset_formula(order == 3 ? ThetaCase::A2A2 : ThetaCase::A6,
                                                rational_arg(norm_class), rational_arg(prec)));
      },
      py::arg("order"), py::arg("norm_class"), py::arg("prec") = 10);

  m.def(
      "twist_matrices",
      [](int order) {
        const SpinElement u = build_twist_element(order);
        py::dict d;
        d["V"] = matrix_strings(rho_V(u));
        d["L"] = matrix_strings(rho_L(u));
        d["R"] = matrix_strings(rho_R(u));
        d["tabulated"] = matrix_strings(tabulated_action(order));
        d["normalizer"] = to_string(u.spinor_normalizer());
        d["order"] = matrix_order(rho_V(u));
        d["cycle_shape"] = cycle_shape(rho_V(u)).to_string();
        return d;
      },
      py::arg("order"));

  m.def(
      "fixed_lattice",
      [](int order) {
        const Lattice e8 = e8_lattice();
        const Lattice f = fixed_sublattice(rho_V(build_twist_element(order)), e8);
        const DiscriminantGroup g = discriminant_group(f);
        py::dict d;
        d["rank"] = f.rank();
        d["determinant"] = to_string(f.determinant());
        d["level"] = to_string(level(f));
        std::vector<std::string> inv;
        for (const auto& x : g.invariants) inv.push_back(to_string(x));
        d["invariants"] = inv;
        d["gram"] = matrix_strings(f.gram());
        return d;
      },
      py::arg("order"));

  m.def(
      "simple_root_mult",
      [](int order, std::int64_t k) {
        const MultPair p = simple_root_mult(TwistClass::build(order, 0), k);
        return std::make_pair(to_string(p.even), to_string(p.odd));
      },
      py::arg("order"), py::arg("k"));

  m.def(
      "mult_table_csv",
      [](int order, std::int64_t height, std::optional<std::string> max_norm) {
        std::optional<Rational> mn;
        if (max_norm) mn = parse_rational(*max_norm);
        Rational depth = depth_for_height(height);
        if (mn && *mn / 2 < depth) depth = *mn / 2;
        if (depth < 0) depth = 0;
        return mult_table_csv(build_mult_table(TwistClass::build(order, depth), height, mn));
      },
      py::arg("order"), py::arg("height"), py::arg("max_norm") = py::none());

  m.def(
      "verify",
      [](const std::string& target, std::optional<int> order, std::int64_t height, const py::object& prec, int jobs) {
        VerifyOptions o;
        o.order = order;
        o.height = height;
        o.prec = rational_arg(prec);
        o.jobs = jobs;
        Report r;
        {
          py::gil_scoped_release release;
          r = verify_target(target, o);
        }
        return to_json(r);
      },
      py::arg("target"), py::arg("order") = py::none(), py::arg("height") = 0, py::arg("prec") = 50,
      py::arg("jobs") = 1, "Runs a verification and returns the JSON report.");
}
