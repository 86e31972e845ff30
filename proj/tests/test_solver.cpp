#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "degenbeam/errors.hpp"
#include "degenbeam/hermite.hpp"
#include "degenbeam/polynomial.hpp"
#include "degenbeam/solver.hpp"

using namespace degenbeam;

namespace {

ProblemSpec spec_with(OperatorForm form, CoefficientFunction a,
                      std::function<double(double, double)> h,
                      std::function<double(double)> u0,
                      std::function<double(double)> du0, double T = 0.002,
                      double dt = 1e-4, double theta = 1.0) {
    return make_problem_spec(form, std::move(a), std::move(h), std::move(u0),
                             std::move(du0), T, dt, theta);
}

std::function<double(double, double)> zero_source() {
    return [](double, double) { return 0.0; };
}

std::vector<double> random_state(const DiscreteSystem& sys, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    std::vector<double> u(sys.n_dofs);
    for (double& v : u) v = dist(rng);
    return apply_constraints(sys, u);
}

} // namespace

TEST_CASE("elliptic: constants are fixed points of I + A1") {
    const ProblemSpec spec =
        spec_with(OperatorForm::Divergence, make_power_coefficient(1.0, 0.5),
                  zero_source(), [](double) { return 0.0; }, [](double) { return 0.0; });
    const DiscreteSystem sys = assemble_system(spec, build_grid(16, 0.5));
    const std::vector<double> u = elliptic_solve(sys, [](double) { return 3.0; });
    const FeFunction fn(sys.grid, u);
    for (double x : {0.0, 0.25, 0.5, 0.8, 1.0})
        CHECK(fn.value(x) == doctest::Approx(3.0).epsilon(1e-9));
}

TEST_CASE("elliptic: u = x survives the strong non-divergence constraint at 0") {
    const ProblemSpec spec =
        spec_with(OperatorForm::NonDivergence, make_power_coefficient(1.5, 0.0),
                  zero_source(), [](double) { return 0.0; }, [](double) { return 0.0; });
    const DiscreteSystem sys = assemble_system(spec, build_grid(16, 0.0));
    const std::vector<double> u = elliptic_solve(sys, [](double x) { return x; });
    const FeFunction fn(sys.grid, u);
    for (double x : {0.0, 0.3, 0.6, 1.0})
        CHECK(fn.value(x) == doctest::Approx(x).epsilon(1e-9));
    CHECK(u[value_dof(sys.grid.x0_node)] == 0.0);
}

TEST_CASE("elliptic: manufactured degenerate solve converges under refinement") {
    // (I + A1) u* = f with u* = x^4(1-x)^4 (x-1/2)^4 and a = |x-1/2|: u*''
    // vanishes at x0 to second order, so the piecewise source has no hidden
    // interior jump and u* is the variational solution.
    const Polynomial q({0.25, 0.0, -1.0}, 0.5);
    const Polynomial profile = q * q * q * q * Polynomial::monomial(4, 0.5);
    const Polynomial p2 = profile.derivative(2);
    const Polynomial p3 = profile.derivative(3);
    const Polynomial p4 = profile.derivative(4);
    auto f = [&](double x) {
        const double s = x > 0.5 ? 1.0 : -1.0;  // a' = sign, a'' = 0 off x0
        return profile.value(x) + 2.0 * s * p3.value(x) +
               std::abs(x - 0.5) * p4.value(x);
    };
    double previous = std::numeric_limits<double>::infinity();
    for (int n : {8, 16, 32, 64}) {
        const ProblemSpec spec =
            spec_with(OperatorForm::Divergence, make_power_coefficient(1.0, 0.5),
                      zero_source(), [](double) { return 0.0; },
                      [](double) { return 0.0; });
        const DiscreteSystem sys = assemble_system(spec, build_grid(n, 0.5));
        const FeFunction fn(sys.grid, elliptic_solve(sys, f));
        double err = 0.0;
        for (int i = 0; i <= 200; ++i) {
            const double x = i / 200.0;
            err = std::max(err, std::abs(fn.value(x) - profile.value(x)));
        }
        CHECK(err < previous);
        previous = err;
    }
    CHECK(previous < 1e-8);
}

TEST_CASE("evolve keeps a kernel state stationary") {
    const ProblemSpec spec =
        spec_with(OperatorForm::Divergence, make_power_coefficient(0.5, 0.5),
                  zero_source(), [](double) { return 2.5; }, [](double) { return 0.0; });
    const DiscreteSystem sys = assemble_system(spec, build_grid(8, 0.5));
    const Trajectory traj = evolve(spec, sys);
    REQUIRE(traj.states.size() == traj.times.size());
    for (const auto& state : traj.states) {
        const FeFunction fn(sys.grid, state);
        CHECK(fn.value(0.3) == doctest::Approx(2.5).epsilon(1e-11));
    }
    for (double E : traj.energies) CHECK(std::abs(E) < 1e-10);
}

TEST_CASE("theta scheme validation") {
    ProblemSpec spec =
        spec_with(OperatorForm::Divergence, make_constant_coefficient(1.0),
                  zero_source(), [](double) { return 0.0; }, [](double) { return 0.0; });
    const DiscreteSystem sys = assemble_system(spec, build_grid(4, 0.5));
    spec.theta = 1.5;
    CHECK_THROWS_AS(evolve(spec, sys), Error);
    spec.theta = 1.0;
    spec.dt = 0.0;
    CHECK_THROWS_AS(evolve(spec, sys), Error);
}

TEST_CASE("contraction in the pivot norm for theta in {1/2, 1}") {
    std::mt19937 seed_rng(42);
    for (OperatorForm form : {OperatorForm::Divergence, OperatorForm::NonDivergence}) {
        for (double theta : {0.5, 1.0}) {
            ProblemSpec spec = spec_with(form, make_power_coefficient(1.5, 0.5),
                                         zero_source(), [](double) { return 0.0; },
                                         [](double) { return 0.0; }, 10 * 1e-3, 1e-3,
                                         theta);
            const DiscreteSystem sys = assemble_system(spec, build_grid(16, 0.5));
            for (int rep = 0; rep < 3; ++rep) {
                const std::vector<double> u = random_state(sys, seed_rng());
                ProblemSpec s2 = spec;
                const FeFunction init(sys.grid, u);
                s2.initial = [&init](double x) { return init.value(x); };
                s2.initial_slope = [&init](double x) { return init.d1(x); };
                const Trajectory traj = evolve(s2, sys);
                for (std::size_t i = 0; i + 1 < traj.pivot_norms.size(); ++i) {
                    CHECK(traj.pivot_norms[i + 1] <=
                          traj.pivot_norms[i] * (1.0 + 1e-12) + 1e-14);
                }
            }
        }
    }
}

TEST_CASE("Richardson order in dt: ~1 for backward Euler, ~2 for Crank-Nicolson") {
    auto final_norm = [](double dt, double theta) {
        const ProblemSpec spec = spec_with(
            OperatorForm::Divergence, make_constant_coefficient(1.0), zero_source(),
            [](double x) {
                const double y = x * (1.0 - x);
                return y * y * y * y;
            },
            [](double x) {
                const double y = x * (1.0 - x);
                return 4.0 * y * y * y * (1.0 - 2.0 * x);
            },
            2e-3, dt, theta);
        const DiscreteSystem sys = assemble_system(spec, build_grid(16, 0.5));
        return evolve(spec, sys).pivot_norms.back();
    };
    for (double theta : {1.0, 0.5}) {
        const double n1 = final_norm(1e-4, theta);
        const double n2 = final_norm(5e-5, theta);
        const double n3 = final_norm(2.5e-5, theta);
        const double order = std::log2(std::abs(n1 - n2) / std::abs(n2 - n3));
        if (theta == 1.0) CHECK(order == doctest::Approx(1.0).epsilon(0.35));
        else CHECK(order == doctest::Approx(2.0).epsilon(0.25));
    }
}

TEST_CASE("evolution is linear in the initial datum") {
    const CoefficientFunction a = make_power_coefficient(0.5, 0.5);
    auto run = [&](std::function<double(double)> u0, std::function<double(double)> du0) {
        const ProblemSpec spec = spec_with(OperatorForm::Divergence, a, zero_source(),
                                           std::move(u0), std::move(du0));
        const DiscreteSystem sys = assemble_system(spec, build_grid(8, 0.5));
        return evolve(spec, sys).states.back();
    };
    const auto from_u = run([](double x) { return std::sin(M_PI * x); },
                            [](double x) { return M_PI * std::cos(M_PI * x); });
    const auto from_v = run([](double x) { return x * x; }, [](double x) { return 2 * x; });
    const auto from_mix = run(
        [](double x) { return 2.0 * std::sin(M_PI * x) - 3.0 * x * x; },
        [](double x) { return 2.0 * M_PI * std::cos(M_PI * x) - 6.0 * x; });
    for (std::size_t i = 0; i < from_mix.size(); ++i)
        CHECK(from_mix[i] ==
              doctest::Approx(2.0 * from_u[i] - 3.0 * from_v[i]).epsilon(1e-9));
}

TEST_CASE("stationary consistency between elliptic_solve and evolve") {
    // (I + A) u* = f; evolving with h = f - u* keeps u* fixed
    const ProblemSpec base =
        spec_with(OperatorForm::Divergence, make_power_coefficient(1.0, 0.5),
                  zero_source(), [](double) { return 0.0; }, [](double) { return 0.0; },
                  5e-3, 5e-4, 1.0);
    const DiscreteSystem sys = assemble_system(base, build_grid(8, 0.5));
    auto f = [](double x) { return std::sin(M_PI * x); };
    const std::vector<double> ustar = elliptic_solve(sys, f);
    const FeFunction ufn(sys.grid, ustar);

    ProblemSpec spec = base;
    spec.source = [&](double, double x) { return f(x) - ufn.value(x); };
    spec.initial = [&](double x) { return ufn.value(x); };
    spec.initial_slope = [&](double x) { return ufn.d1(x); };
    const Trajectory traj = evolve(spec, sys);
    for (std::size_t i = 0; i < traj.states.size(); ++i) {
        double drift = 0.0;
        for (int d = 0; d < sys.n_dofs; ++d)
            drift = std::max(drift, std::abs(traj.states[i][d] - ustar[d]));
        CHECK(drift < 1e-8);
    }
}

TEST_CASE("discrete energy estimate for backward Euler") {
    // ||u_N||_M^2 + 2 dt sum E(u^{n+1}) <= ||u_0||_M^2 + dt sum ||h^{n+1}||_M^2
    for (double alpha : {0.5, 1.5}) {
        const double T = 2e-3, dt = 1e-4;
        const ProblemSpec spec = spec_with(
            OperatorForm::Divergence, make_power_coefficient(alpha, 0.5),
            [](double t, double x) { return std::sin(M_PI * x) * std::exp(-t); },
            [](double x) { return std::pow(x * (1 - x), 4); },
            [](double x) { return 4 * std::pow(x * (1 - x), 3) * (1 - 2 * x); }, T, dt,
            1.0);
        const DiscreteSystem sys = assemble_system(spec, build_grid(32, 0.5));
        const Trajectory traj = evolve(spec, sys);

        double lhs = traj.pivot_norms.back() * traj.pivot_norms.back();
        for (std::size_t n = 1; n < traj.energies.size(); ++n)
            lhs += 2.0 * dt * traj.energies[n];
        double rhs = traj.pivot_norms.front() * traj.pivot_norms.front();
        for (std::size_t n = 1; n < traj.times.size(); ++n) {
            const double t = traj.times[n];
            const std::vector<double> h = interpolate(
                sys.grid,
                [t](double x) { return std::sin(M_PI * x) * std::exp(-t); },
                [t](double x) { return M_PI * std::cos(M_PI * x) * std::exp(-t); });
            rhs += dt * sys.M.quadratic_form(h);
        }
        CHECK(lhs <= rhs);
    }
}

TEST_CASE("free-free beam spectrum against the characteristic-equation oracle") {
    const ProblemSpec spec =
        spec_with(OperatorForm::Divergence, make_constant_coefficient(1.0),
                  zero_source(), [](double) { return 0.0; }, [](double) { return 0.0; });
    const DiscreteSystem sys = assemble_system(spec, build_grid(64, 0.5));
    const std::vector<double> evs = dense_spectrum(sys, 4);

    CHECK(std::abs(evs[0]) < 1e-8);
    CHECK(std::abs(evs[1]) < 1e-8);

    // independent root-find: cosh(b) cos(b) = 1 on (4, 5)
    auto characteristic = [](double b) { return std::cosh(b) * std::cos(b) - 1.0; };
    double lo = 4.0, hi = 5.0;
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (characteristic(lo) * characteristic(mid) <= 0.0) hi = mid;
        else lo = mid;
    }
    const double beta1 = 0.5 * (lo + hi);
    const double lambda3 = std::pow(beta1, 4);
    CHECK(std::abs(evs[2] - lambda3) / lambda3 < 5e-3);
}

TEST_CASE("strong non-divergence keeps exactly the span{x - x0} kernel") {
    const ProblemSpec spec =
        spec_with(OperatorForm::NonDivergence, make_power_coefficient(1.0, 0.0),
                  zero_source(), [](double) { return 0.0; }, [](double) { return 0.0; });
    const DiscreteSystem sys = assemble_system(spec, build_grid(64, 0.0));
    const std::vector<double> evs = dense_spectrum(sys, 4);
    int zeros = 0;
    for (double ev : evs) {
        CHECK(ev >= -1e-9 * sys.S.inf_norm());
        if (std::abs(ev) < 1e-8) ++zeros;
    }
    CHECK(zeros == 1);
}

TEST_CASE("spectrum is nonnegative across the taxonomy") {
    for (OperatorForm form : {OperatorForm::Divergence, OperatorForm::NonDivergence}) {
        for (double alpha : {0.5, 1.5}) {
            for (double x0 : {0.0, 0.5, 1.0}) {
                const ProblemSpec spec =
                    spec_with(form, make_power_coefficient(alpha, x0), zero_source(),
                              [](double) { return 0.0; }, [](double) { return 0.0; });
                const DiscreteSystem sys = assemble_system(spec, build_grid(24, x0));
                const std::vector<double> evs = dense_spectrum(sys, 3);
                CHECK(evs.front() >= -1e-9 * sys.S.inf_norm());
            }
        }
    }
}
