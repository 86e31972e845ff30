#include "degenbeam/verification.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "degenbeam/errors.hpp"
#include "degenbeam/gauss.hpp"

namespace degenbeam {

namespace {

// Element-wise integral over the grid; weighted pieces touching x0 go through
// the singular ladder.
double integrate_grid(const std::function<double(double)>& f, const Grid& grid,
                      const CoefficientFunction& a, bool singular_near_x0,
                      int order) {
    QuadratureSettings qs;
    qs.rule_order = order;
    double acc = 0.0;
    for (int e = 0; e < grid.n_elements(); ++e) {
        const bool touches = singular_near_x0 && a.degenerate && grid.touches_x0(e);
        acc += integrate_segment(f, grid.nodes[e], grid.nodes[e + 1],
                                 touches ? std::optional<double>(grid.x0) : std::nullopt,
                                 qs);
    }
    return acc;
}

bool strongly_degenerate(const CoefficientFunction& a) {
    if (!a.degenerate) return false;
    return classify_degeneracy(a).tag == Degeneracy::Strong;
}

} // namespace

double gauss_green_residual(const PiecewisePoly& u, const PiecewisePoly& v,
                            GaussGreenVariant variant,
                            const CoefficientFunction& a, const Grid& grid,
                            int rule_order) {
    const PiecewisePoly u2 = u.derivative(2);
    const PiecewisePoly u3 = u.derivative(3);
    const PiecewisePoly u4 = u.derivative(4);
    const PiecewisePoly v1 = v.derivative();
    const PiecewisePoly v2 = v.derivative(2);

    const bool divergence = variant == GaussGreenVariant::DivergenceFull ||
                            variant == GaussGreenVariant::DivergenceReduced;

    auto lhs_integrand = [&](double x) {
        if (divergence) {
            return (a.second_deriv(x) * u2.value(x) + 2.0 * a.deriv(x) * u3.value(x) +
                    a.eval(x) * u4.value(x)) *
                   v.value(x);
        }
        return u4.value(x) * v.value(x);
    };
    auto rhs_integrand = [&](double x) {
        const double w = divergence ? a.eval(x) : 1.0;
        return w * u2.value(x) * v2.value(x);
    };

    const double lhs = integrate_grid(lhs_integrand, grid, a, divergence, rule_order);
    const double i2 = integrate_grid(rhs_integrand, grid, a, divergence, rule_order);

    // one-sided traces: side -1 at x=1, +1 at x=0
    auto flux_deriv = [&](double p, int side) {
        return a.deriv(p) * u2.value(p, side) + a.eval(p) * u3.value(p, side);
    };
    auto flux_value = [&](double p, int side) { return a.eval(p) * u2.value(p, side); };

    double rhs = i2;
    switch (variant) {
        case GaussGreenVariant::DivergenceFull:
            rhs += flux_deriv(1.0, -1) * v.value(1.0, -1) -
                   flux_deriv(0.0, +1) * v.value(0.0, +1);
            rhs -= flux_value(1.0, -1) * v1.value(1.0, -1) -
                   flux_value(0.0, +1) * v1.value(0.0, +1);
            break;
        case GaussGreenVariant::DivergenceReduced:
            break;
        case GaussGreenVariant::NonDivergenceFull:
            rhs += u3.value(1.0, -1) * v.value(1.0, -1) -
                   u3.value(0.0, +1) * v.value(0.0, +1);
            rhs -= u2.value(1.0, -1) * v1.value(1.0, -1) -
                   u2.value(0.0, +1) * v1.value(0.0, +1);
            break;
        case GaussGreenVariant::NonDivergenceReduced:
            break;
        case GaussGreenVariant::StrongInteriorJump: {
            rhs += u3.value(1.0, -1) * v.value(1.0, -1) -
                   u3.value(0.0, +1) * v.value(0.0, +1);
            rhs -= u2.value(1.0, -1) * v1.value(1.0, -1) -
                   u2.value(0.0, +1) * v1.value(0.0, +1);
            const double jump = u2.value(grid.x0, +1) - u2.value(grid.x0, -1);
            rhs += jump * v1.value(grid.x0);
            break;
        }
        case GaussGreenVariant::StrongLeftEnd:
            rhs += u3.value(1.0, -1) * v.value(1.0, -1);
            rhs -= u2.value(1.0, -1) * v1.value(1.0, -1) -
                   u2.value(0.0, +1) * v1.value(0.0, +1);
            break;
        case GaussGreenVariant::StrongRightEnd:
            rhs += -u3.value(0.0, +1) * v.value(0.0, +1);
            rhs -= u2.value(1.0, -1) * v1.value(1.0, -1) -
                   u2.value(0.0, +1) * v1.value(0.0, +1);
            break;
    }
    return std::abs(lhs - rhs);
}

std::vector<std::pair<std::string, double>> green_identity_battery(int rule_order) {
    std::vector<std::pair<std::string, double>> out;

    const Polynomial x4({0, 0, 0, 0, 1});
    const Polynomial x2({0, 0, 1});
    const Polynomial one({1});
    const Polynomial p4({0, 0, 0, 0, 1, -4, 6, -4, 1});  // x^4 (1-x)^4

    // x^4 (1-x)^4 (x-1/2)^4 in powers of s = x - 1/2:
    // ((1/4 - s^2))^4 * s^4, flat to second order at the degeneracy point
    const Polynomial quarter_minus_s2({0.25, 0.0, -1.0}, 0.5);
    const Polynomial s4 = Polynomial::monomial(4, 0.5);
    const Polynomial p12 =
        quarter_minus_s2 * quarter_minus_s2 * quarter_minus_s2 * quarter_minus_s2 * s4;

    const CoefficientFunction a1 = make_constant_coefficient(1.0, 0.5);
    const CoefficientFunction aL1 = make_power_coefficient(1.0, 0.5);
    const CoefficientFunction aL15 = make_power_coefficient(1.5, 0.5);
    const CoefficientFunction aLeft = make_power_coefficient(1.5, 0.0);
    const CoefficientFunction aRight = make_power_coefficient(1.5, 1.0);

    const Grid mid = build_grid(8, 0.5);
    const Grid left = build_grid(8, 0.0);
    const Grid right = build_grid(8, 1.0);

    auto run = [&](const std::string& name, const PiecewisePoly& u,
                   const PiecewisePoly& v, GaussGreenVariant variant,
                   const CoefficientFunction& a, const Grid& grid) {
        out.emplace_back(name, gauss_green_residual(u, v, variant, a, grid, rule_order));
    };

    using PP = PiecewisePoly;
    run("gf0 full a=1 u=x^4 v=x^2", PP::single(x4), PP::single(x2),
        GaussGreenVariant::DivergenceFull, a1, mid);
    run("gf0 reduced a=1 u=x^4(1-x)^4 v=x^3-2x+1", PP::single(p4),
        PP::single(Polynomial({1, -2, 0, 1})), GaussGreenVariant::DivergenceReduced,
        a1, mid);
    run("gf0 trivial u=v=1", PP::single(one), PP::single(one),
        GaussGreenVariant::DivergenceFull, a1, mid);
    run("gf0 strong full a=|x-1/2| u=flat12 v=x^2", PP::single(p12),
        PP::single(Polynomial({0, 0, 1}, 0.5) /* (x-1/2)^2 */),
        GaussGreenVariant::DivergenceFull, aL1, mid);
    run("gf0 strong reduced a=|x-1/2| u=flat12 v=x^2", PP::single(p12),
        PP::single(Polynomial({0, 0, 1}, 0.5)), GaussGreenVariant::DivergenceReduced,
        aL1, mid);
    run("gf0 strong full a=|x-1/2|^1.5 u=flat12 v=x^2", PP::single(p12),
        PP::single(Polynomial({0, 0, 1}, 0.5)), GaussGreenVariant::DivergenceFull,
        aL15, mid);
    run("gf1 full u=x^4 v=x^2", PP::single(x4), PP::single(x2),
        GaussGreenVariant::NonDivergenceFull, a1, mid);
    run("gf1 reduced u=x^4(1-x)^4 v=x^2+x", PP::single(p4),
        PP::single(Polynomial({0, 1, 1})), GaussGreenVariant::NonDivergenceReduced,
        a1, mid);
    run("gf1 trivial u=v=1", PP::single(one), PP::single(one),
        GaussGreenVariant::NonDivergenceFull, a1, mid);
    // interior jump: u'' jumps 0 -> 2 across x0, v(x0) = 0 with v'(x0) = 1
    run("green interior u=(x-1/2)_+^2 v=x-1/2",
        PP::split(0.5, Polynomial({0.0}, 0.5), Polynomial({0, 0, 1}, 0.5)),
        PP::single(Polynomial({0, 1}, 0.5)), GaussGreenVariant::StrongInteriorJump,
        aL15, mid);
    // interior jump: u'' jumps 2 -> 4
    run("green interior u''jump 2->4 v=s+s^2",
        PP::split(0.5, Polynomial({0, 0, 1}, 0.5), Polynomial({0, 0, 2}, 0.5)),
        PP::single(Polynomial({0, 1, 1}, 0.5)), GaussGreenVariant::StrongInteriorJump,
        aL15, mid);
    run("green left-end u=x^3 v=x^2(1-x)", PP::single(Polynomial({0, 0, 0, 1})),
        PP::single(Polynomial({0, 0, 1, -1})), GaussGreenVariant::StrongLeftEnd,
        aLeft, left);
    run("green right-end u=(1-x)^3 v=(1-x)^2",
        PP::single(Polynomial({0, 0, 0, -1}, 1.0)),
        PP::single(Polynomial({0, 0, 1}, 1.0)), GaussGreenVariant::StrongRightEnd,
        aRight, right);
    return out;
}

double trace_recovery(const PiecewisePoly& y, const CoefficientFunction& a,
                      X0Location side, int rule_order) {
    if (side == X0Location::Interior)
        fail("invalid-point", "trace recovery applies to endpoint degeneracy only");
    const double x0 = side == X0Location::LeftEnd ? 0.0 : 1.0;
    if (a.x0 != x0) fail("invalid-point", "coefficient x0 does not match the side");
    if (!strongly_degenerate(a))
        fail("hypothesis-not-applicable", "trace recovery needs strong degeneracy");
    bool hyp_ok = false;
    if (a.family == CoefficientFamily::PowerLaw) {
        hyp_ok = *a.alpha >= 1.0 && *a.alpha < 2.0;
    } else {
        hyp_ok = sweep_hypothesis_K(a, OperatorForm::NonDivergence).has_value();
    }
    if (!hyp_ok) fail("hypothesis-not-applicable", "1/a bound hypothesis not satisfied");

    const PiecewisePoly y2 = y.derivative(2);
    const PiecewisePoly y3 = y.derivative(3);
    const PiecewisePoly y4 = y.derivative(4);
    const Grid grid = build_grid(8, x0);

    auto kernel = [&](double s) {
        const double w = side == X0Location::LeftEnd ? s : (1.0 - s);
        return w * y4.value(s);
    };
    // The moment kernel carries no 1/a factor and vanishes linearly at x0;
    // plain Gauss is exact on polynomial input, which the 1e-12 contract needs.
    double integral = 0.0;
    try {
        integral = integrate_grid(kernel, grid, a, false, rule_order);
    } catch (const Error& err) {
        if (err.code() == "divergent-integral")
            fail("not-in-W", "fourth-derivative moment integral diverged");
        throw;
    }
    if (side == X0Location::LeftEnd)
        return y2.value(1.0, -1) - y3.value(1.0, -1) + integral;
    return y2.value(0.0, +1) + y3.value(0.0, +1) + integral;
}

double pointwise_bound_check(const FeFunction& u, const CoefficientFunction& a,
                             const QuadratureSettings& settings) {
    if (!strongly_degenerate(a))
        fail("hypothesis-not-applicable", "the bound concerns the strong divergence case");
    const Grid& grid = u.grid();

    auto flux_deriv_sq = [&](double x) {
        const double g = a.deriv(x) * u.d2(x) + a.eval(x) * u.d3(x);
        return g * g;
    };
    const double flux_deriv_l2 =
        std::sqrt(integrate_grid(flux_deriv_sq, grid, a, true, settings.rule_order));

    // probe grids: geometric toward x0 per side plus a uniform sweep, the
    // 1e-6 window around x0 excluded
    double violation = -std::numeric_limits<double>::infinity();
    auto probe = [&](double x) {
        const double d = std::abs(x - a.x0);
        if (d < 1e-6) return;
        const double lhs = std::abs(a.eval(x) * u.d2(x, x < a.x0 ? -1 : +1));
        violation = std::max(violation, lhs - flux_deriv_l2 * std::sqrt(d));
    };
    for (int side = 0; side < 2; ++side) {
        const double span = side == 0 ? a.x0 : 1.0 - a.x0;
        if (span <= 1e-6) continue;
        const double q = std::pow(1e-6 / span, 1.0 / 511.0);
        double d = span;
        for (int i = 0; i < 512; ++i, d *= q)
            probe(side == 0 ? a.x0 - d : a.x0 + d);
    }
    for (int i = 0; i <= 512; ++i) probe(i / 512.0);
    return violation;
}

std::array<double, 3> strong_trace_conditions(const FeFunction& u,
                                              const CoefficientFunction& a) {
    const Grid& grid = u.grid();
    const double x0 = a.x0;
    const double a0 = a.eval(x0);
    const double t1 = std::abs(a0 * u.value(x0));
    const double t2 = std::abs(a0 * 0.5 * (u.d1(x0) + u.d1(x0)));

    // near-x0 supremum of |a u''| over the adjacent elements, one-sided
    double t3 = 0.0;
    const GaussRule& rule = gauss_rule(8);
    for (int e : {grid.x0_node - 1, grid.x0_node}) {
        if (e < 0 || e >= grid.n_elements()) continue;
        const double lo = grid.nodes[e];
        const double len = grid.element_length(e);
        for (double p : rule.points) {
            const double x = lo + len * p;
            t3 = std::max(t3, std::abs(a.eval(x) * u.d2(x)));
        }
    }
    return {t1, t2, t3};
}

std::pair<double, double> norm_equivalence_probe(
    const std::vector<std::vector<double>>& samples, const CoefficientFunction& a,
    const Grid& grid, const QuadratureSettings& settings) {
    double lo = std::numeric_limits<double>::infinity();
    double hi = 0.0;
    for (const auto& dofs : samples) {
        const FeFunction u(grid, dofs);
        const double full = norm(u, NormKind::H2aFull, a, settings);
        if (full == 0.0) continue;
        const double bar = norm(u, NormKind::TripleBar, a, settings);
        const double ratio = bar / full;
        lo = std::min(lo, ratio);
        hi = std::max(hi, ratio);
    }
    return {lo, hi};
}

double x0_mass_entry_at_depth(const CoefficientFunction& a, const Grid& grid,
                              int depth, int order) {
    auto shape = [&](double x) {
        const int e = grid.element_of(x);
        if (!grid.touches_x0(e)) return 0.0;
        const double xi = (x - grid.nodes[e]) / grid.element_length(e);
        const int local = e == grid.x0_node ? 0 : 2;
        const double s = eval_basis(grid, e, xi)[local].value;
        return s * s;
    };
    return integrate_over_a_at_depth(shape, grid, a, depth, order);
}

} // namespace degenbeam
