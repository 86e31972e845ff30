#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "degenbeam/coefficient.hpp"
#include "degenbeam/errors.hpp"

using namespace degenbeam;

namespace {
bool fails_with(const std::string& code, const std::function<void()>& fn) {
    try {
        fn();
    } catch (const Error& err) {
        return err.code() == code;
    }
    return false;
}
} // namespace

TEST_CASE("power coefficient evaluates |x-x0|^alpha") {
    const CoefficientFunction a = make_power_coefficient(2.0, 0.5);
    CHECK(a.eval(0.5) == 0.0);
    CHECK(a.eval(0.0) == doctest::Approx(0.25).epsilon(1e-15));
    CHECK(a.eval(1.0) == doctest::Approx(0.25).epsilon(1e-15));

    const CoefficientFunction b = make_power_coefficient(0.5, 0.5);
    for (double x : {0.1, 0.3, 0.75, 0.95}) {
        CHECK(b.eval(x) == doctest::Approx(std::sqrt(std::abs(x - 0.5))).epsilon(1e-14));
        const double s = x > 0.5 ? 1.0 : -1.0;
        CHECK(b.deriv(x) ==
              doctest::Approx(0.5 * s * std::pow(std::abs(x - 0.5), -0.5)).epsilon(1e-14));
    }

    const CoefficientFunction c = make_power_coefficient(1.0, 0.0);
    CHECK(c.eval(0.25) == doctest::Approx(0.25));
    CHECK(c.deriv(0.25) == doctest::Approx(1.0));
}

TEST_CASE("power coefficient input validation") {
    CHECK(fails_with("invalid-exponent", [] { make_power_coefficient(0.0, 0.5); }));
    CHECK(fails_with("invalid-exponent", [] { make_power_coefficient(-1.0, 0.5); }));
    CHECK(fails_with("invalid-point", [] { make_power_coefficient(1.0, 1.5); }));
    CHECK(fails_with("invalid-point", [] { make_power_coefficient(1.0, -0.1); }));
}

TEST_CASE("classification follows the analytic power-law rule") {
    for (double alpha : {0.25, 0.5, 0.75}) {
        const auto cls = classify_degeneracy(make_power_coefficient(alpha, 0.5));
        CHECK(cls.tag == Degeneracy::Weak);
        CHECK(cls.integrable_inverse);
    }
    for (double alpha : {1.0, 1.5, 2.0}) {
        const auto cls = classify_degeneracy(make_power_coefficient(alpha, 0.5));
        CHECK(cls.tag == Degeneracy::Strong);
        CHECK_FALSE(cls.integrable_inverse);
    }
}

TEST_CASE("classification probes custom coefficients") {
    // sin^2(pi x) behaves like (pi x)^2 near 0: 1/a not integrable
    const CoefficientFunction a = make_custom_coefficient(
        [](double x) { return std::pow(std::sin(M_PI * x), 2); },
        [](double x) { return M_PI * std::sin(2.0 * M_PI * x); }, 0.0);
    CHECK(classify_degeneracy(a).tag == Degeneracy::Strong);

    // a mild integrable custom profile
    const CoefficientFunction b = make_custom_coefficient(
        [](double x) { return std::pow(std::abs(x - 0.3), 0.25); },
        [](double x) {
            const double s = x > 0.3 ? 1.0 : -1.0;
            return 0.25 * s * std::pow(std::abs(x - 0.3), -0.75);
        },
        0.3);
    CHECK(classify_degeneracy(b).tag == Degeneracy::Weak);
}

TEST_CASE("classification rejects non-degenerate coefficients") {
    CHECK(fails_with("not-degenerate",
                     [] { classify_degeneracy(make_constant_coefficient(1.0)); }));
}

TEST_CASE("hypothesis check on the prototype coefficients") {
    // |x-x0|^K / a == 1 for a = |x-x0|^K: satisfied in both forms, C = 1
    const HypothesisReport nd =
        check_hypothesis_K(make_power_coefficient(1.5, 0.5), OperatorForm::NonDivergence, 1.5);
    CHECK(nd.satisfied);
    CHECK(nd.witness_constant == doctest::Approx(1.0).epsilon(1e-12));

    const HypothesisReport dv =
        check_hypothesis_K(make_power_coefficient(1.0, 0.0), OperatorForm::Divergence, 1.0);
    CHECK(dv.satisfied);

    // ratio |x-x0|^{-0.6} is unbounded near x0
    const HypothesisReport bad = check_hypothesis_K(make_power_coefficient(2.5, 0.5),
                                                    OperatorForm::NonDivergence, 1.9);
    CHECK_FALSE(bad.satisfied);
}

TEST_CASE("hypothesis check errors") {
    CHECK(fails_with("invalid-K", [] {
        check_hypothesis_K(make_power_coefficient(1.5, 0.5), OperatorForm::Divergence, 0.5);
    }));
    CHECK(fails_with("invalid-K", [] {
        check_hypothesis_K(make_power_coefficient(1.5, 0.5), OperatorForm::Divergence, 2.0);
    }));
    CHECK(fails_with("hypothesis-not-applicable", [] {
        check_hypothesis_K(make_power_coefficient(0.5, 0.5), OperatorForm::Divergence, 1.0);
    }));
}

TEST_CASE("self-check a(x)=|x-x0|^K passes at K for the sweep values") {
    for (double K : {1.0, 1.25, 1.5, 1.75, 1.99}) {
        for (OperatorForm form : {OperatorForm::Divergence, OperatorForm::NonDivergence}) {
            const HypothesisReport r =
                check_hypothesis_K(make_power_coefficient(K, 0.5), form, K);
            CHECK(r.satisfied);
        }
    }
}

TEST_CASE("hypothesis is monotone upward in K") {
    // a >= |x-x0|^K / C implies the same bound with any larger exponent
    // (|x-x0| <= 1), so success at K propagates to K' in [K, 2).
    for (OperatorForm form : {OperatorForm::Divergence, OperatorForm::NonDivergence}) {
        const CoefficientFunction a = make_power_coefficient(1.25, 0.5);
        REQUIRE(check_hypothesis_K(a, form, 1.25).satisfied);
        for (double Kp : {1.3, 1.5, 1.75, 1.99})
            CHECK(check_hypothesis_K(a, form, Kp).satisfied);
        // and fails below alpha
        CHECK_FALSE(check_hypothesis_K(a, form, 1.0).satisfied);
    }

    // same direction for a custom strong coefficient
    const CoefficientFunction c = make_custom_coefficient(
        [](double x) { return std::abs(x - 0.5) * (1.0 + std::abs(x - 0.5)); },
        [](double x) {
            const double s = x > 0.5 ? 1.0 : -1.0;
            return s * (1.0 + 2.0 * std::abs(x - 0.5));
        },
        0.5);
    REQUIRE(check_hypothesis_K(c, OperatorForm::NonDivergence, 1.0).satisfied);
    for (double Kp : {1.25, 1.5, 1.99})
        CHECK(check_hypothesis_K(c, OperatorForm::NonDivergence, Kp).satisfied);
}

TEST_CASE("sweep finds a valid K when one exists") {
    const auto hit = sweep_hypothesis_K(make_power_coefficient(1.4, 0.5),
                                        OperatorForm::NonDivergence);
    REQUIRE(hit.has_value());
    CHECK(hit->K >= 1.4);
    CHECK(hit->satisfied);

    const auto miss = sweep_hypothesis_K(make_power_coefficient(2.5, 0.5),
                                         OperatorForm::NonDivergence);
    CHECK_FALSE(miss.has_value());
}
