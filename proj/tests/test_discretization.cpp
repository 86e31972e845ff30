#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "degenbeam/errors.hpp"
#include "degenbeam/gauss.hpp"
#include "degenbeam/hermite.hpp"
#include "degenbeam/quadrature.hpp"

using namespace degenbeam;

TEST_CASE("uniform grid keeps x0 as a node") {
    const Grid g = build_grid(4, 0.5);
    REQUIRE(g.n_nodes() == 5);
    CHECK(g.nodes == std::vector<double>{0.0, 0.25, 0.5, 0.75, 1.0});
    CHECK(g.nodes[g.x0_node] == 0.5);
}

TEST_CASE("nearest node snaps onto interior x0") {
    const Grid g = build_grid(4, 0.3);
    CHECK(g.nodes == std::vector<double>{0.0, 0.3, 0.5, 0.75, 1.0});
    CHECK(g.x0_node == 1);
}

TEST_CASE("geometric grading splits the adjacent element") {
    const Grid g = build_grid(4, 0.0, GridGrading::geometric(0.5, 2));
    CHECK(g.nodes == std::vector<double>{0.0, 0.0625, 0.125, 0.25, 0.5, 0.75, 1.0});
    CHECK(g.x0_node == 0);

    const Grid gi = build_grid(4, 0.5, GridGrading::geometric(0.5, 1));
    CHECK(gi.nodes == std::vector<double>{0.0, 0.25, 0.375, 0.5, 0.625, 0.75, 1.0});
}

TEST_CASE("grid validation") {
    CHECK_THROWS_AS(build_grid(1, 0.5), Error);
    try {
        build_grid(1, 0.5);
    } catch (const Error& err) {
        CHECK(err.code() == "too-coarse");
    }
}

TEST_CASE("basis interpolates values and slopes at the nodes") {
    const Grid g = build_grid(5, 0.4);
    const double L = g.element_length(2);

    const auto at0 = eval_basis(g, 2, 0.0);
    CHECK(at0[0].value == 1.0);
    CHECK(at0[1].value == 0.0);
    CHECK(at0[2].value == 0.0);
    CHECK(at0[3].value == 0.0);
    CHECK(at0[0].d1 == 0.0);
    CHECK(at0[1].d1 == 1.0);
    CHECK(at0[2].d1 == 0.0);
    CHECK(at0[3].d1 == 0.0);

    const auto at1 = eval_basis(g, 2, 1.0);
    CHECK(at1[2].value == 1.0);
    CHECK(at1[3].d1 == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(at1[0].value == 0.0);
    CHECK(at1[1].d1 == doctest::Approx(0.0));

    // partition of unity at the midpoint; slope shapes carry the length scale
    const auto mid = eval_basis(g, 2, 0.5);
    CHECK(mid[0].value + mid[2].value == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(mid[1].value == doctest::Approx(L * 0.125));
    CHECK_THROWS_AS(eval_basis(g, 99, 0.5), Error);
}

TEST_CASE("Hermite interpolation reproduces cubics exactly") {
    const Grid g = build_grid(7, 0.35);
    auto f = [](double x) { return 2.0 - x + 3.0 * x * x - 0.5 * x * x * x; };
    auto df = [](double x) { return -1.0 + 6.0 * x - 1.5 * x * x; };
    const FeFunction u(g, interpolate(g, f, df));
    for (double x : {0.0, 0.11, 0.35, 0.5, 0.77, 1.0}) {
        CHECK(u.value(x) == doctest::Approx(f(x)).epsilon(1e-14));
        CHECK(u.d1(x) == doctest::Approx(df(x)).epsilon(1e-13));
    }
}

TEST_CASE("quadrature points stay strictly inside elements") {
    const Grid g = build_grid(6, 0.5);
    const QuadratureRule rule = make_quadrature(g, WeightKind::Plain, 4);
    REQUIRE(static_cast<int>(rule.elements.size()) == g.n_elements());
    for (int e = 0; e < g.n_elements(); ++e) {
        for (double x : rule.elements[e].x) {
            CHECK(x > g.nodes[e]);
            CHECK(x < g.nodes[e + 1]);
            CHECK(x != g.x0);
        }
    }
}

TEST_CASE("plain Gauss is exact for polynomials up to degree 2n-1") {
    std::mt19937 rng(20240811);
    std::uniform_real_distribution<double> coef(-2.0, 2.0);
    const Grid g = build_grid(5, 0.3);
    const CoefficientFunction a = make_constant_coefficient(1.0);
    for (int order : {2, 3, 4, 6}) {
        const int degree = 2 * order - 1;
        for (int rep = 0; rep < 8; ++rep) {
            std::vector<double> c(degree + 1);
            for (double& v : c) v = coef(rng);
            auto poly = [&](double x) {
                double acc = 0.0;
                for (int k = degree; k >= 0; --k) acc = acc * x + c[k];
                return acc;
            };
            double exact = 0.0;
            for (int k = 0; k <= degree; ++k) exact += c[k] / (k + 1);
            QuadratureSettings qs;
            qs.rule_order = order;
            const double got = integrate(poly, WeightKind::Plain, g, a, qs);
            CHECK(got == doctest::Approx(exact).epsilon(1e-14));
        }
    }
}

TEST_CASE("frozen weighted integrals") {
    const Grid g = build_grid(8, 0.5);
    // closed form: 2 * 2 sqrt(1/2) per side
    const CoefficientFunction weak = make_power_coefficient(0.5, 0.5);
    const double inv = integrate([](double) { return 1.0; }, WeightKind::OverA, g, weak);
    CHECK(inv == doctest::Approx(2.0 * std::sqrt(2.0)).epsilon(1e-6));

    // integral of |x small-half| over [0,1]
    const CoefficientFunction lin = make_power_coefficient(1.0, 0.5);
    const double times = integrate([](double) { return 1.0; }, WeightKind::TimesA, g, lin);
    CHECK(times == doctest::Approx(0.25).epsilon(1e-12));

    const CoefficientFunction one = make_constant_coefficient(1.0);
    const double x2 = integrate([](double x) { return x * x; }, WeightKind::Plain, g, one);
    CHECK(x2 == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
}

TEST_CASE("weak 1/a ladder converges to the closed form by depth 24") {
    for (double alpha : {0.25, 0.5, 0.75}) {
        const CoefficientFunction a = make_power_coefficient(alpha, 0.5);
        const Grid g = build_grid(8, 0.5);
        // per side: (1/2)^{1-alpha} / (1-alpha)
        const double exact = 2.0 * std::pow(0.5, 1.0 - alpha) / (1.0 - alpha);
        QuadratureSettings qs;
        qs.max_ladder_depth = 24;
        const double got = integrate([](double) { return 1.0; }, WeightKind::OverA, g, a, qs);
        CHECK(std::abs(got - exact) / exact < 1e-6);
    }
}

TEST_CASE("strong 1/a ladder grows without bound") {
    const Grid g = build_grid(8, 0.5);
    for (double alpha : {1.0, 1.5}) {
        const CoefficientFunction a = make_power_coefficient(alpha, 0.5);
        auto one = [](double) { return 1.0; };
        for (int d : {4, 8, 12, 16, 20}) {
            const double now = integrate_over_a_at_depth(one, g, a, d);
            const double later = integrate_over_a_at_depth(one, g, a, d + 4);
            CHECK(later > 1.1 * now);
        }
        CHECK_THROWS_AS(integrate(one, WeightKind::OverA, g, a), Error);
    }
}

TEST_CASE("OverA with a vanishing integrand converges in the strong case") {
    const CoefficientFunction a = make_power_coefficient(1.5, 0.5);
    const Grid g = build_grid(8, 0.5);
    // (x-x0)^2 / |x-x0|^1.5 integrates to 2 * (1/2)^{3/2} / (3/2)
    auto g2 = [](double x) { return (x - 0.5) * (x - 0.5); };
    const double got = integrate(g2, WeightKind::OverA, g, a, {}, true);
    const double exact = 2.0 * std::pow(0.5, 1.5) / 1.5;
    CHECK(got == doctest::Approx(exact).epsilon(1e-7));
}

TEST_CASE("dyadic segment rule keeps plain Gauss exactness") {
    const SegmentRule r = dyadic_segment_rule(0.5, 0.75, 0.5, 4);
    double total = 0.0, cubic = 0.0;
    for (std::size_t q = 0; q < r.x.size(); ++q) {
        CHECK(r.w[q] > 0.0);
        total += r.w[q];
        cubic += r.w[q] * std::pow(r.x[q], 3);
    }
    CHECK(total == doctest::Approx(0.25).epsilon(1e-14));
    // integral of x^3 over [0.5, 0.75]
    CHECK(cubic == doctest::Approx((std::pow(0.75, 4) - std::pow(0.5, 4)) / 4.0)
                       .epsilon(1e-13));
}
