#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>
#include <vector>

#include "cnqual/bounds.hpp"
#include "cnqual/csv.hpp"
#include "cnqual/matrix.hpp"
#include "cnqual/oracle.hpp"
#include "cnqual/polynomials.hpp"
#include "cnqual/simulator.hpp"

namespace py = pybind11;
using namespace cnqual;

namespace {

std::vector<std::vector<double>> matrix_rows(const CnMatrix& a) {
  std::vector<std::vector<double>> rows(a.dim(), std::vector<double>(a.dim()));
  for (int i = 0; i < a.dim(); ++i) {
    for (int j = 0; j < a.dim(); ++j) rows[i][j] = a.entry(i, j);
  }
  return rows;
}

SimConfig make_sim_config(int m, double tau, double theta, int steps, double d,
                          std::optional<double> profile,
                          std::optional<std::vector<double>> initial) {
  SimConfig config;
  config.grid.m = m;
  config.grid.d = d;
  config.theta = theta;
  config.tau = tau;
  config.steps = steps;
  if (profile.has_value() == initial.has_value()) {
    throw std::invalid_argument("pass exactly one of profile= and initial=");
  }
  if (profile) {
    config.initial = StepProfile{*profile};
  } else {
    config.initial = *initial;
  }
  return config;
}

}  // namespace

PYBIND11_MODULE(_cnqual, m) {
  m.doc() = "Sharp CFL bounds for positivity and max-norm contractivity of "
            "Crank-Nicolson stepping on the 1-D heat equation";

  py::enum_<PolyKind>(m, "PolyKind")
      .value("U", PolyKind::U)
      .value("P", PolyKind::P)
      .value("C", PolyKind::C);

  py::enum_<Property>(m, "Property")
      .value("positivity", Property::Positivity)
      .value("contractivity", Property::Contractivity);

  m.def("eval_recurrence", &eval_recurrence, py::arg("kind"), py::arg("n"), py::arg("x"));
  m.def("eval_hyperbolic", &eval_hyperbolic, py::arg("kind"), py::arg("n"),
        py::arg("omega"));

  py::class_<IdentityReport>(m, "IdentityReport")
      .def_readonly("p_from_u", &IdentityReport::p_from_u)
      .def_readonly("c_from_sum", &IdentityReport::c_from_sum)
      .def_readonly("c_factored", &IdentityReport::c_factored)
      .def_readonly("scale", &IdentityReport::scale)
      .def("within", &IdentityReport::within, py::arg("rel_tol") = 1e-10);
  m.def("check_identities", &check_identities, py::arg("n"), py::arg("x"));

  py::class_<IsolatedRoot>(m, "IsolatedRoot")
      .def_readonly("omega", &IsolatedRoot::omega)
      .def_readonly("x", &IsolatedRoot::x);
  m.def("isolated_root_p", &isolated_root_p, py::arg("n"));
  m.def("count_interior_roots", &count_interior_roots, py::arg("kind"), py::arg("n"));

  py::class_<TridiagMatrix>(m, "TridiagMatrix")
      .def_readonly("dim", &TridiagMatrix::dim)
      .def_readonly("sub", &TridiagMatrix::sub)
      .def_readonly("diag", &TridiagMatrix::diag)
      .def_readonly("sup", &TridiagMatrix::sup);
  m.def(
      "build_b",
      [](int m_, double d) { return build_B(GridConfig{m_, d}); },
      py::arg("m"), py::arg("d") = 1.0);
  m.def("log_norm_inf", &log_norm_inf, py::arg("tridiag"));

  py::class_<CnMatrix>(m, "CnMatrix")
      .def_property_readonly("dim", &CnMatrix::dim)
      .def_property_readonly("s", [](const CnMatrix& a) { return a.cfl().s; })
      .def("entry", &CnMatrix::entry, py::arg("i"), py::arg("j"))
      .def("rows", &matrix_rows);
  m.def(
      "build_a_numeric",
      [](int m_, double s) { return build_A_numeric(m_, CflPoint::from_s(s)); },
      py::arg("m"), py::arg("s"));
  m.def(
      "build_a_closed",
      [](int m_, double s) { return build_A_closed(m_, CflPoint::from_s(s)); },
      py::arg("m"), py::arg("s"));
  m.def("min_entry", &min_entry, py::arg("a"));
  m.def("inf_norm", &inf_norm, py::arg("a"));
  m.def(
      "inf_norm_closed",
      [](int m_, double s) { return inf_norm_closed(m_, CflPoint::from_s(s)); },
      py::arg("m"), py::arg("s"));

  py::class_<RootPoint>(m, "RootPoint")
      .def_readonly("omega", &RootPoint::omega)
      .def_readonly("x", &RootPoint::x)
      .def_readonly("s", &RootPoint::s);
  py::class_<QualBound>(m, "QualBound")
      .def_readonly("property", &QualBound::property)
      .def_readonly("m", &QualBound::m)
      .def_readonly("value", &QualBound::value)
      .def_readonly("iterations", &QualBound::iterations)
      .def_readonly("residual", &QualBound::residual)
      .def_property_readonly("unbounded", &QualBound::unbounded)
      .def_property_readonly("s", [](const QualBound& b) {
        return b.value ? std::optional<double>(b.value->s) : std::nullopt;
      });
  m.def("positivity_bound", &positivity_bound, py::arg("m"),
        py::arg("tol") = kDefaultBisectTol);
  m.def("contractivity_bound", &contractivity_bound, py::arg("m"),
        py::arg("tol") = kDefaultBisectTol);
  m.def("limit_bounds", [] {
    const LimitBounds l = limit_bounds();
    return py::make_tuple(l.s_pos, l.s_con);
  });
  m.def(
      "theta_literature_bounds",
      [](double theta) {
        const ThetaBounds t = theta_literature_bounds(theta);
        return py::make_tuple(t.positivity, t.contractivity);
      },
      py::arg("theta"));
  m.def("bound_table", &bound_table, py::arg("property"), py::arg("ms"),
        py::arg("include_limit") = true, py::arg("tol") = kDefaultBisectTol);

  m.def("positivity_predicate", &positivity_predicate, py::arg("m"), py::arg("s"));
  m.def("contractivity_predicate", &contractivity_predicate, py::arg("m"), py::arg("s"));

  py::enum_<ThresholdStatus>(m, "ThresholdStatus")
      .value("found", ThresholdStatus::Found)
      .value("unbounded_detected", ThresholdStatus::UnboundedDetected)
      .value("never_holds", ThresholdStatus::NeverHolds);
  py::class_<ThresholdEstimate>(m, "ThresholdEstimate")
      .def_readonly("m", &ThresholdEstimate::m)
      .def_readonly("s_lo", &ThresholdEstimate::s_lo)
      .def_readonly("s_hi", &ThresholdEstimate::s_hi)
      .def_property_readonly("width", &ThresholdEstimate::width)
      .def_property_readonly("midpoint", &ThresholdEstimate::midpoint);
  py::class_<ThresholdResult>(m, "ThresholdResult")
      .def_readonly("status", &ThresholdResult::status)
      .def_readonly("estimate", &ThresholdResult::estimate);
  m.def("empirical_threshold", &empirical_threshold, py::arg("property"), py::arg("m"),
        py::arg("bracket") = std::pair<double, double>{1e-3, 8.0},
        py::arg("tol") = 1e-9);

  py::class_<CrossValidateRow>(m, "CrossValidateRow")
      .def_readonly("m", &CrossValidateRow::m)
      .def_readonly("closed_s", &CrossValidateRow::closed_s)
      .def_readonly("empirical_s", &CrossValidateRow::empirical_s)
      .def_readonly("deviation", &CrossValidateRow::deviation)
      .def_readonly("pass_", &CrossValidateRow::pass);
  py::class_<CrossValidateReport>(m, "CrossValidateReport")
      .def_readonly("property", &CrossValidateReport::property)
      .def_readonly("rows", &CrossValidateReport::rows)
      .def_readonly("max_deviation", &CrossValidateReport::max_deviation)
      .def_readonly("all_pass", &CrossValidateReport::all_pass)
      .def("csv", [](const CrossValidateReport& r) {
        std::ostringstream out;
        write_cross_validate_csv(out, r);
        return out.str();
      });
  m.def("cross_validate", &cross_validate, py::arg("property"), py::arg("m_max"),
        py::arg("tol") = 1e-6);

  m.def(
      "make_step_profile",
      [](int m_, double a, double d) { return make_step_profile(GridConfig{m_, d}, a); },
      py::arg("m"), py::arg("a"), py::arg("d") = 1.0);

  py::class_<SimTrace>(m, "SimTrace")
      .def_readonly("times", &SimTrace::times)
      .def_readonly("states", &SimTrace::states)
      .def_readonly("min_entries", &SimTrace::min_entries)
      .def_readonly("norms", &SimTrace::norms)
      .def_readonly("first_positivity_violation", &SimTrace::first_positivity_violation)
      .def_readonly("first_norm_violation", &SimTrace::first_norm_violation)
      .def("csv", [](const SimTrace& t) {
        std::ostringstream out;
        write_trace_csv(out, t);
        return out.str();
      });
  m.def(
      "step",
      [](int m_, double tau, const std::vector<double>& w, double theta, double d) {
        SimConfig config;
        config.grid.m = m_;
        config.grid.d = d;
        config.theta = theta;
        config.tau = tau;
        return step(config, w);
      },
      py::arg("m"), py::arg("tau"), py::arg("w"), py::arg("theta") = 0.5,
      py::arg("d") = 1.0);
  m.def(
      "simulate",
      [](int m_, double tau, double theta, int steps, double d,
         std::optional<double> profile, std::optional<std::vector<double>> initial) {
        return run(make_sim_config(m_, tau, theta, steps, d, profile, initial));
      },
      py::arg("m"), py::arg("tau"), py::arg("theta") = 0.5, py::arg("steps") = 1,
      py::arg("d") = 1.0, py::arg("profile") = std::nullopt,
      py::arg("initial") = std::nullopt);
}
