#include <pybind11/eigen.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "degenbeam/assembly.hpp"
#include "degenbeam/config.hpp"
#include "degenbeam/errors.hpp"
#include "degenbeam/manufactured.hpp"
#include "degenbeam/norms.hpp"
#include "degenbeam/report.hpp"
#include "degenbeam/registry.hpp"
#include "degenbeam/solver.hpp"
#include "degenbeam/verification.hpp"

namespace py = pybind11;
using namespace degenbeam;

PYBIND11_MODULE(_degenbeam, m) {
    m.doc() = "Degenerate fourth-order beam operators: C1 Galerkin solver and "
              "verification toolkit";

    py::register_exception<Error>(m, "DegenbeamError");

    py::enum_<OperatorForm>(m, "OperatorForm")
        .value("Divergence", OperatorForm::Divergence)
        .value("NonDivergence", OperatorForm::NonDivergence);
    py::enum_<Degeneracy>(m, "Degeneracy")
        .value("Weak", Degeneracy::Weak)
        .value("Strong", Degeneracy::Strong);
    py::enum_<X0Location>(m, "X0Location")
        .value("LeftEnd", X0Location::LeftEnd)
        .value("Interior", X0Location::Interior)
        .value("RightEnd", X0Location::RightEnd);
    py::enum_<WeightKind>(m, "WeightKind")
        .value("Plain", WeightKind::Plain)
        .value("TimesA", WeightKind::TimesA)
        .value("OverA", WeightKind::OverA);
    py::enum_<NormKind>(m, "NormKind")
        .value("L2", NormKind::L2)
        .value("L2OverA", NormKind::L2OverA)
        .value("H2aFull", NormKind::H2aFull)
        .value("TripleBar", NormKind::TripleBar)
        .value("H2OverA", NormKind::H2OverA)
        .value("EquivalentI", NormKind::EquivalentI);

    py::class_<CoefficientFunction>(m, "CoefficientFunction")
        .def_readonly("x0", &CoefficientFunction::x0)
        .def_readonly("degenerate", &CoefficientFunction::degenerate)
        .def_property_readonly("alpha",
                               [](const CoefficientFunction& a) {
                                   return a.alpha ? py::cast(*a.alpha) : py::none();
                               })
        .def("__call__",
             [](const CoefficientFunction& a, double x) { return a.eval(x); })
        .def("deriv", [](const CoefficientFunction& a, double x) { return a.deriv(x); });

    m.def("make_power_coefficient", &make_power_coefficient, py::arg("alpha"),
          py::arg("x0"), "a(x) = |x - x0|^alpha");
    m.def("make_constant_coefficient", &make_constant_coefficient, py::arg("value"),
          py::arg("x0") = 0.5);
    m.def(
        "make_custom_coefficient",
        [](std::function<double(double)> eval, std::function<double(double)> deriv,
           double x0) { return make_custom_coefficient(std::move(eval), std::move(deriv), x0); },
        py::arg("eval"), py::arg("deriv"), py::arg("x0"));

    py::class_<DegeneracyClass>(m, "DegeneracyClass")
        .def_readonly("tag", &DegeneracyClass::tag)
        .def_readonly("integrable_inverse", &DegeneracyClass::integrable_inverse);
    m.def(
        "classify_degeneracy",
        [](const CoefficientFunction& a) { return classify_degeneracy(a); },
        py::arg("a"));

    py::class_<HypothesisReport>(m, "HypothesisReport")
        .def_readonly("form", &HypothesisReport::form)
        .def_readonly("K", &HypothesisReport::K)
        .def_readonly("satisfied", &HypothesisReport::satisfied)
        .def_readonly("witness_constant", &HypothesisReport::witness_constant);
    m.def("check_hypothesis_K", &check_hypothesis_K, py::arg("a"), py::arg("form"),
          py::arg("K"));

    py::class_<Grid>(m, "Grid")
        .def_readonly("nodes", &Grid::nodes)
        .def_readonly("x0", &Grid::x0)
        .def_readonly("x0_node", &Grid::x0_node)
        .def_property_readonly("n_elements", &Grid::n_elements);
    m.def(
        "build_grid",
        [](int n_elements, double x0) { return build_grid(n_elements, x0); },
        py::arg("n_elements"), py::arg("x0"));
    m.def(
        "build_graded_grid",
        [](int n_elements, double x0, double ratio, int layers) {
            return build_grid(n_elements, x0, GridGrading::geometric(ratio, layers));
        },
        py::arg("n_elements"), py::arg("x0"), py::arg("ratio"), py::arg("layers"));

    py::class_<BCSet>(m, "BCSet")
        .def_property_readonly("n_natural",
                               [](const BCSet& bc) { return bc.natural.size(); })
        .def_property_readonly("n_essential",
                               [](const BCSet& bc) { return bc.essential.size(); })
        .def("describe", &BCSet::describe);
    m.def("bc_taxonomy", &bc_taxonomy, py::arg("form"), py::arg("degeneracy"),
          py::arg("location"));

    m.def(
        "integrate",
        [](std::function<double(double)> g, WeightKind kind, const Grid& grid,
           const CoefficientFunction& a, int rule_order) {
            QuadratureSettings qs;
            qs.rule_order = rule_order;
            return integrate(g, kind, grid, a, qs);
        },
        py::arg("g"), py::arg("weight"), py::arg("grid"), py::arg("a"),
        py::arg("rule_order") = 4);

    py::class_<DiscreteSystem>(m, "DiscreteSystem")
        .def_readonly("n_dofs", &DiscreteSystem::n_dofs)
        .def_readonly("constrained_dofs", &DiscreteSystem::constrained_dofs)
        .def_property_readonly("M",
                               [](const DiscreteSystem& s) { return s.M.to_dense(); })
        .def_property_readonly("S",
                               [](const DiscreteSystem& s) { return s.S.to_dense(); });

    py::class_<ProblemSpec>(m, "ProblemSpec")
        .def_readonly("form", &ProblemSpec::form)
        .def_readonly("bc", &ProblemSpec::bc)
        .def_readonly("dt", &ProblemSpec::dt)
        .def_readonly("theta", &ProblemSpec::theta)
        .def_readonly("horizon", &ProblemSpec::horizon);
    m.def(
        "make_problem_spec",
        [](OperatorForm form, const CoefficientFunction& a,
           std::function<double(double, double)> source,
           std::function<double(double)> initial,
           std::function<double(double)> initial_slope, double horizon, double dt,
           double theta) {
            return make_problem_spec(form, a, std::move(source), std::move(initial),
                                     std::move(initial_slope), horizon, dt, theta);
        },
        py::arg("form"), py::arg("a"), py::arg("source"), py::arg("initial"),
        py::arg("initial_slope"), py::arg("horizon") = 0.01, py::arg("dt") = 1e-4,
        py::arg("theta") = 1.0);

    m.def(
        "assemble_system",
        [](const ProblemSpec& spec, const Grid& grid, int rule_order) {
            QuadratureSettings qs;
            qs.rule_order = rule_order;
            return assemble_system(spec, grid, qs);
        },
        py::arg("spec"), py::arg("grid"), py::arg("rule_order") = 4);

    m.def("elliptic_solve", &elliptic_solve, py::arg("system"), py::arg("f"));

    py::class_<Trajectory>(m, "Trajectory")
        .def_readonly("times", &Trajectory::times)
        .def_readonly("pivot_norms", &Trajectory::pivot_norms)
        .def_readonly("energies", &Trajectory::energies)
        .def_property_readonly("final_state",
                               [](const Trajectory& t) { return t.states.back(); });
    m.def("evolve", &evolve, py::arg("spec"), py::arg("system"));

    m.def("dense_spectrum", &dense_spectrum, py::arg("system"), py::arg("k"));

    m.def(
        "norm",
        [](const std::vector<double>& dofs, const Grid& grid, NormKind kind,
           const CoefficientFunction& a) {
            return norm(FeFunction(grid, dofs), kind, a);
        },
        py::arg("dofs"), py::arg("grid"), py::arg("kind"), py::arg("a"));

    py::class_<ManufacturedCase>(m, "ManufacturedCase")
        .def_readonly("name", &ManufacturedCase::name);
    m.def("make_manufactured_case", &make_manufactured_case, py::arg("form"),
          py::arg("a"));
    py::class_<ConvergenceTable>(m, "ConvergenceTable")
        .def_readonly("levels", &ConvergenceTable::levels)
        .def_readonly("errors", &ConvergenceTable::errors)
        .def_readonly("observed_orders", &ConvergenceTable::observed_orders);
    m.def(
        "manufactured_convergence",
        [](const ManufacturedCase& c, int n0, int levels, double horizon, double dt0,
           double theta) {
            return manufactured_convergence(c, n0, levels, horizon, dt0, theta);
        },
        py::arg("case"), py::arg("n0"), py::arg("levels"), py::arg("horizon"),
        py::arg("dt0"), py::arg("theta"));

    m.def("green_identity_battery", &green_identity_battery, py::arg("rule_order") = 6);
    m.def("x0_mass_entry_at_depth", &x0_mass_entry_at_depth, py::arg("a"),
          py::arg("grid"), py::arg("depth"), py::arg("order") = 4);

    py::class_<ScenarioConfig>(m, "ScenarioConfig")
        .def_readonly("x0", &ScenarioConfig::x0)
        .def_readonly("alpha", &ScenarioConfig::alpha)
        .def_readonly("n_elements", &ScenarioConfig::n_elements);
    m.def(
        "parse_config",
        [](const std::string& text) { return parse_config(text); }, py::arg("text"));
    m.def("render_config", &render_config, py::arg("config"));

    py::class_<RunReport>(m, "RunReport")
        .def_readonly("exit_status", &RunReport::exit_status)
        .def_readonly("summary", &RunReport::summary)
        .def_readonly("violations", &RunReport::violations);
    m.def("run_scenario", &run_scenario, py::arg("config"), py::arg("out_dir"));
}
