#include "degenbeam/manufactured.hpp"

#include <cmath>

#include "degenbeam/errors.hpp"
#include "degenbeam/solver.hpp"

namespace degenbeam {

namespace {

Polynomial base_profile() {
    // x^4 (1-x)^4
    return Polynomial({0, 0, 0, 0, 1, -4, 6, -4, 1});
}

Polynomial flattened_profile(double x0) {
    // x^4 (1-x)^4 (x-x0)^4 in powers of s = x - x0:
    // (x0(1-x0) + (1-2x0) s - s^2)^4 * s^4
    const Polynomial q({x0 * (1.0 - x0), 1.0 - 2.0 * x0, -1.0}, x0);
    const Polynomial s4 = Polynomial::monomial(4, x0);
    return q * q * q * q * s4;
}

} // namespace

ManufacturedCase make_manufactured_case(OperatorForm form, CoefficientFunction a) {
    ManufacturedCase c;
    c.form = form;
    c.error_norm = form == OperatorForm::Divergence ? NormKind::L2 : NormKind::L2OverA;
    if (!a.degenerate) {
        c.name = "smooth";
        c.profile = base_profile();
    } else {
        const X0Location loc = classify_location(a.x0);
        const bool interior = loc == X0Location::Interior;
        const Degeneracy deg = classify_degeneracy(a).tag;
        c.name = std::string(deg == Degeneracy::Weak ? "weak" : "strong") +
                 (interior ? "-interior" : "-endpoint");
        // Interior degeneracy needs P'' to vanish at x0 to second order, or
        // the a'' P'' term of the source leaves the pivot space.
        c.profile = interior ? flattened_profile(a.x0) : base_profile();
    }
    c.a = std::move(a);
    return c;
}

namespace {

// Closure with the derivative polynomials precomputed; the source gets
// evaluated at every quadrature point of every time step.
std::function<double(double, double)> make_source(const ManufacturedCase& c) {
    const bool div = c.form == OperatorForm::Divergence;
    const CoefficientFunction a = c.a;
    const double rate = c.decay_rate;
    const Polynomial p0 = c.profile;
    const Polynomial p2 = c.profile.derivative(2);
    const Polynomial p3 = c.profile.derivative(3);
    const Polynomial p4 = c.profile.derivative(4);
    return [=](double t, double x) {
        const double decay = std::exp(-rate * t);
        if (x == a.x0 && a.degenerate) {
            // all coefficient terms vanish in the limit by profile construction
            return decay * -rate * p0.value(x);
        }
        if (div) {
            return decay * (-rate * p0.value(x) + a.second_deriv(x) * p2.value(x) +
                            2.0 * a.deriv(x) * p3.value(x) + a.eval(x) * p4.value(x));
        }
        return decay * (-rate * p0.value(x) + a.eval(x) * p4.value(x));
    };
}

} // namespace

double manufactured_source(const ManufacturedCase& c, double t, double x) {
    return make_source(c)(t, x);
}

double manufactured_bc_residual(const ManufacturedCase& c) {
    const Degeneracy deg =
        c.a.degenerate ? classify_degeneracy(c.a).tag : Degeneracy::Weak;
    const X0Location loc =
        c.a.degenerate ? classify_location(c.a.x0) : X0Location::Interior;
    const BCSet bc = bc_taxonomy(c.form, deg, loc);

    const Polynomial p2 = c.profile.derivative(2);
    const Polynomial p3 = c.profile.derivative(3);

    double residual = 0.0;
    for (const TraceCondition& tc : bc.natural) {
        const double p = tc.position;
        double val = 0.0;
        switch (tc.kind) {
            case TraceKind::SecondDeriv:
                val = p2.value(p);
                break;
            case TraceKind::ThirdDeriv:
                val = p3.value(p);
                break;
            case TraceKind::FluxValue:
                val = c.a.eval(p) * p2.value(p);
                break;
            case TraceKind::FluxDeriv: {
                // one-sided limit at a degenerate endpoint, where a' blows up
                const double x = c.a.degenerate && p == c.a.x0
                                     ? (p == 0.0 ? 1e-7 : 1.0 - 1e-7)
                                     : p;
                val = c.a.deriv(x) * p2.value(x) + c.a.eval(x) * p3.value(x);
                break;
            }
        }
        residual = std::max(residual, std::abs(val));
    }
    if (!bc.essential.empty())
        residual = std::max(residual, std::abs(c.profile.value(c.a.x0)));
    return residual;
}

ConvergenceTable manufactured_convergence(const ManufacturedCase& c, int n0,
                                          int n_levels, double horizon, double dt0,
                                          double theta,
                                          const QuadratureSettings& settings) {
    if (manufactured_bc_residual(c) > 1e-8)
        fail("invalid-manufactured-solution",
             "profile violates the trace conditions of its case");

    const Polynomial p1 = c.profile.derivative();
    const Polynomial p2 = c.profile.derivative(2);
    const auto source = make_source(c);
    ConvergenceTable table;
    for (int level = 0; level < n_levels; ++level) {
        const int n = n0 << level;
        const double dt = dt0 / std::pow(16.0, level);  // dt ~ h^4
        const Grid grid = build_grid(n, c.a.x0);
        ProblemSpec spec = make_problem_spec(
            c.form, c.a, source, [&c](double x) { return c.profile.value(x); },
            [&p1](double x) { return p1.value(x); }, horizon, dt, theta);
        const DiscreteSystem system = assemble_system(spec, grid, settings);
        const Trajectory traj = evolve(spec, system);

        const double t_final = traj.times.back();
        const double decay = std::exp(-c.decay_rate * t_final);
        const FeFunction uh(grid, traj.states.back());
        Field err;
        err.value = [&](double x) { return uh.value(x) - decay * c.profile.value(x); };
        err.d1 = [&](double x) { return uh.d1(x) - decay * p1.value(x); };
        err.d2 = [&](double x) { return uh.d2(x) - decay * p2.value(x); };
        table.levels.push_back(n);
        table.errors.push_back(norm(err, c.error_norm, c.a, grid, settings));
    }
    for (std::size_t i = 0; i + 1 < table.errors.size(); ++i)
        table.observed_orders.push_back(
            std::log2(table.errors[i] / table.errors[i + 1]));
    return table;
}

} // namespace degenbeam
