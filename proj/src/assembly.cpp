#include "degenbeam/assembly.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <thread>

#include "degenbeam/errors.hpp"
#include "degenbeam/gauss.hpp"
#include "degenbeam/hermite.hpp"

namespace degenbeam {

ProblemSpec make_problem_spec(OperatorForm form, CoefficientFunction a,
                              std::function<double(double, double)> source,
                              std::function<double(double)> initial,
                              std::function<double(double)> initial_slope,
                              double horizon, double dt, double theta) {
    ProblemSpec spec;
    spec.form = form;
    spec.a = std::move(a);
    spec.source = std::move(source);
    spec.initial = std::move(initial);
    spec.initial_slope = std::move(initial_slope);
    spec.horizon = horizon;
    spec.dt = dt;
    spec.theta = theta;

    if (spec.a.degenerate) {
        spec.degeneracy = classify_degeneracy(spec.a);
    } else {
        // constant-type smoke coefficient: 1/a trivially integrable
        spec.degeneracy = {Degeneracy::Weak, true};
    }
    const X0Location loc =
        spec.a.degenerate ? classify_location(spec.a.x0) : X0Location::Interior;
    spec.bc = bc_taxonomy(form, spec.degeneracy.tag, loc);

    if (spec.degeneracy.tag == Degeneracy::Strong) {
        if (spec.a.family == CoefficientFamily::PowerLaw && *spec.a.alpha < 2.0) {
            spec.hypothesis =
                check_hypothesis_K(spec.a, form, std::clamp(*spec.a.alpha, 1.0, 1.99));
        } else {
            spec.hypothesis = sweep_hypothesis_K(spec.a, form);
        }
    }
    return spec;
}

namespace {

struct LocalMatrices {
    double mass[4][4] = {};
    double stiff[4][4] = {};
};

int env_thread_cap() {
    const char* env = std::getenv("DEGENBEAM_THREADS");
    if (!env) return 1;
    return std::clamp(std::atoi(env), 1, 16);
}

// One shared positive quadrature serves every entry of an element: the local
// matrices stay Gram matrices, so M and S are exactly PSD and the discrete
// stiffness kernel (constants, linears) is annihilated to roundoff. Elements
// touching x0 get the dyadically graded rule; plain elements the Gauss rule.
LocalMatrices element_matrices(const ProblemSpec& spec, const Grid& grid, int e,
                               const QuadratureSettings& qs,
                               const std::vector<bool>& constrained) {
    LocalMatrices loc;
    const bool div = spec.form == OperatorForm::Divergence;
    const auto dofs = element_dofs(e);
    const double lo = grid.nodes[e];
    const double hi = grid.nodes[e + 1];
    const double len = hi - lo;
    const bool singular = spec.a.degenerate && grid.touches_x0(e);

    auto accumulate = [&](double x, double wq) {
        const auto s = eval_basis(grid, e, (x - lo) / len);
        const double wm = wq * (div ? 1.0 : 1.0 / spec.a.eval(x));
        const double ws = wq * (div ? spec.a.eval(x) : 1.0);
        for (int p = 0; p < 4; ++p)
            for (int r = p; r < 4; ++r) {
                loc.mass[p][r] += wm * s[p].value * s[r].value;
                loc.stiff[p][r] += ws * s[p].d2 * s[r].d2;
            }
    };

    if (singular) {
        const SegmentRule rule = dyadic_segment_rule(lo, hi, grid.x0, qs.rule_order);
        for (std::size_t q = 0; q < rule.x.size(); ++q) accumulate(rule.x[q], rule.w[q]);
    } else {
        const GaussRule& rule = gauss_rule(qs.rule_order);
        for (std::size_t q = 0; q < rule.points.size(); ++q)
            accumulate(lo + len * rule.points[q], len * rule.weights[q]);
    }

    for (int p = 0; p < 4; ++p)
        for (int r = p; r < 4; ++r)
            if (constrained[dofs[p]] || constrained[dofs[r]])
                loc.mass[p][r] = loc.stiff[p][r] = 0.0;
    return loc;
}

} // namespace

DiscreteSystem assemble_system(const ProblemSpec& spec, const Grid& grid,
                               const QuadratureSettings& settings) {
    if (spec.a.degenerate && grid.nodes[grid.x0_node] != spec.a.x0)
        fail("invalid-point", "grid does not contain x0 as a node");

    DiscreteSystem sys;
    sys.n_dofs = n_dofs(grid);
    sys.grid = grid;
    sys.a = spec.a;
    sys.quadrature = settings;
    sys.pivot_weight =
        spec.form == OperatorForm::Divergence ? WeightKind::Plain : WeightKind::OverA;
    sys.M = SymmetricBanded(sys.n_dofs, 3);
    sys.S = SymmetricBanded(sys.n_dofs, 3);

    std::vector<bool> constrained(sys.n_dofs, false);
    if (!spec.bc.essential.empty()) {
        const int dof = value_dof(grid.x0_node);
        constrained[dof] = true;
        sys.constrained_dofs.push_back(dof);
    }

    // An unconstrained value DOF at x0 makes the 1/a-weighted diagonal entry
    // a non-integrable singularity in the strong case.
    if (sys.pivot_weight == WeightKind::OverA && spec.a.degenerate &&
        spec.degeneracy.tag == Degeneracy::Strong &&
        !constrained[value_dof(grid.x0_node)]) {
        fail("assembly-divergence",
             "1/a-weighted mass entry at the x0 value DOF diverges; "
             "the essential u(x0)=0 constraint is missing");
    }

    const int ne = grid.n_elements();
    std::vector<LocalMatrices> locals(ne);
    const int threads = std::min(env_thread_cap(), ne);

    auto compute_range = [&](int begin, int end, std::exception_ptr& err) {
        try {
            for (int e = begin; e < end; ++e)
                locals[e] = element_matrices(spec, grid, e, settings, constrained);
        } catch (...) {
            err = std::current_exception();
        }
    };

    std::exception_ptr first_error;
    if (threads <= 1) {
        compute_range(0, ne, first_error);
    } else {
        std::vector<std::thread> pool;
        std::vector<std::exception_ptr> errs(threads);
        const int chunk = (ne + threads - 1) / threads;
        for (int t = 0; t < threads; ++t) {
            const int begin = t * chunk;
            const int end = std::min(ne, begin + chunk);
            if (begin >= end) break;
            pool.emplace_back(compute_range, begin, end, std::ref(errs[t]));
        }
        for (auto& th : pool) th.join();
        for (auto& err : errs)
            if (err && !first_error) first_error = err;
    }
    if (first_error) std::rethrow_exception(first_error);

    // Fixed element-order accumulation: results do not depend on how the
    // element integrals were scheduled.
    for (int e = 0; e < ne; ++e) {
        const auto dofs = element_dofs(e);
        for (int p = 0; p < 4; ++p)
            for (int q = p; q < 4; ++q) {
                sys.M.add(dofs[p], dofs[q], locals[e].mass[p][q]);
                sys.S.add(dofs[p], dofs[q], locals[e].stiff[p][q]);
            }
    }

    for (int dof : sys.constrained_dofs) {
        sys.M.make_identity_row_col(dof);
        sys.S.make_identity_row_col(dof);
    }
    return sys;
}

std::vector<double> apply_constraints(const DiscreteSystem& system,
                                      std::vector<double> vec) {
    if (static_cast<int>(vec.size()) != system.n_dofs)
        fail("dimension-error", "DOF vector length mismatch");
    for (int dof : system.constrained_dofs) vec[dof] = 0.0;
    return vec;
}

std::vector<double> load_vector(const DiscreteSystem& system,
                                const std::function<double(double)>& f) {
    const Grid& grid = system.grid;
    std::vector<double> F(system.n_dofs, 0.0);
    std::vector<bool> constrained(system.n_dofs, false);
    for (int dof : system.constrained_dofs) constrained[dof] = true;

    const bool over_a = system.pivot_weight == WeightKind::OverA;
    const GaussRule& rule = gauss_rule(system.quadrature.rule_order);
    for (int e = 0; e < grid.n_elements(); ++e) {
        const auto dofs = element_dofs(e);
        const double lo = grid.nodes[e];
        const double hi = grid.nodes[e + 1];
        const double len = hi - lo;
        const bool singular = over_a && system.a.degenerate && grid.touches_x0(e);
        // the same rules as assembly, so that the load of an FE function is
        // exactly M times its DOF vector
        auto sweep = [&](const double* xs, const double* ws, std::size_t count) {
            for (std::size_t q = 0; q < count; ++q) {
                const double x = xs[q];
                const double fv = f(x) * (over_a ? 1.0 / system.a.eval(x) : 1.0);
                if (fv == 0.0) continue;
                const auto s = eval_basis(grid, e, (x - lo) / len);
                for (int p = 0; p < 4; ++p) {
                    if (constrained[dofs[p]]) continue;
                    F[dofs[p]] += ws[q] * fv * s[p].value;
                }
            }
        };
        if (singular) {
            const SegmentRule sr =
                dyadic_segment_rule(lo, hi, grid.x0, system.quadrature.rule_order);
            sweep(sr.x.data(), sr.w.data(), sr.x.size());
        } else {
            std::vector<double> xs(rule.points.size()), ws(rule.points.size());
            for (std::size_t q = 0; q < rule.points.size(); ++q) {
                xs[q] = lo + len * rule.points[q];
                ws[q] = len * rule.weights[q];
            }
            sweep(xs.data(), ws.data(), xs.size());
        }
    }
    return F;
}

} // namespace degenbeam
