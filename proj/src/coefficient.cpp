#include "degenbeam/coefficient.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "degenbeam/errors.hpp"
#include "degenbeam/gauss.hpp"

namespace degenbeam {

CoefficientFunction make_power_coefficient(double alpha, double x0) {
    if (!(alpha > 0.0)) fail("invalid-exponent", "PowerLaw requires alpha > 0");
    if (!(x0 >= 0.0 && x0 <= 1.0)) fail("invalid-point", "x0 must lie in [0,1]");
    CoefficientFunction a;
    a.x0 = x0;
    a.family = CoefficientFamily::PowerLaw;
    a.alpha = alpha;
    a.degenerate = true;
    a.eval = [alpha, x0](double x) { return std::pow(std::abs(x - x0), alpha); };
    a.deriv = [alpha, x0](double x) {
        const double d = x - x0;
        if (d == 0.0) return 0.0;
        const double s = d > 0.0 ? 1.0 : -1.0;
        return alpha * s * std::pow(std::abs(d), alpha - 1.0);
    };
    a.second_deriv = [alpha, x0](double x) {
        const double d = std::abs(x - x0);
        if (d == 0.0) return 0.0;
        return alpha * (alpha - 1.0) * std::pow(d, alpha - 2.0);
    };
    return a;
}

CoefficientFunction make_constant_coefficient(double value, double x0) {
    if (!(value > 0.0)) fail("invalid-coefficient", "constant coefficient must be positive");
    if (!(x0 >= 0.0 && x0 <= 1.0)) fail("invalid-point", "x0 must lie in [0,1]");
    CoefficientFunction a;
    a.x0 = x0;
    a.family = CoefficientFamily::Custom;
    a.degenerate = false;
    a.eval = [value](double) { return value; };
    a.deriv = [](double) { return 0.0; };
    a.second_deriv = [](double) { return 0.0; };
    return a;
}

CoefficientFunction make_custom_coefficient(std::function<double(double)> eval,
                                            std::function<double(double)> deriv,
                                            double x0,
                                            std::function<double(double)> second_deriv) {
    if (!(x0 >= 0.0 && x0 <= 1.0)) fail("invalid-point", "x0 must lie in [0,1]");
    CoefficientFunction a;
    a.x0 = x0;
    a.family = CoefficientFamily::Custom;
    a.eval = std::move(eval);
    a.deriv = deriv;
    a.degenerate = a.eval(x0) <= 1e-14;
    if (second_deriv) {
        a.second_deriv = std::move(second_deriv);
    } else {
        a.second_deriv = [deriv](double x) {
            const double h = 1e-5;
            return (deriv(x + h) - deriv(x - h)) / (2.0 * h);
        };
    }
    return a;
}

namespace {

// Integral of 1/a over [0,1] minus the window [x0 - w, x0 + w], computed on
// dyadic distance bands so the whole probe ladder is deterministic.
double inverse_integral_outside_window(const CoefficientFunction& a, double window) {
    const GaussRule& rule = gauss_rule(8);
    auto inv = [&](double x) { return 1.0 / a.eval(x); };
    double total = 0.0;
    for (int side = 0; side < 2; ++side) {
        const double span = side == 0 ? a.x0 : 1.0 - a.x0;
        if (span <= window) continue;
        double d = window;
        while (d < span) {
            const double hi = std::min(2.0 * d, span);
            const double lo_x = side == 0 ? a.x0 - hi : a.x0 + d;
            const double hi_x = side == 0 ? a.x0 - d : a.x0 + hi;
            total += gauss_segment(inv, lo_x, hi_x, rule);
            d = hi;
        }
    }
    return total;
}

} // namespace

DegeneracyClass classify_degeneracy(const CoefficientFunction& a,
                                    const IntegrabilityProbe& probe) {
    if (!a.degenerate || a.eval(a.x0) > 1e-12)
        fail("not-degenerate", "coefficient does not vanish at x0");

    if (a.family == CoefficientFamily::PowerLaw) {
        const bool weak = *a.alpha < 1.0;
        return {weak ? Degeneracy::Weak : Degeneracy::Strong, weak};
    }

    double prev = 0.0, last = 0.0;
    for (int j = probe.j_begin; j <= probe.j_end; ++j) {
        prev = last;
        last = inverse_integral_outside_window(a, std::ldexp(1.0, -j));
    }
    const bool cauchy = std::abs(last - prev) < probe.cauchy_tol * std::abs(last);
    return {cauchy ? Degeneracy::Weak : Degeneracy::Strong, cauchy};
}

namespace {

constexpr int kScanPointsPerSide = 512;
constexpr double kScanInnerDistance = 1e-10;
constexpr double kMonotoneTol = 1e-12;

// Geometric distances from far to near, per side of x0.
std::vector<double> scan_distances(double span) {
    std::vector<double> d;
    if (span <= 0.0) return d;
    d.reserve(kScanPointsPerSide);
    const double q = std::pow(kScanInnerDistance / span, 1.0 / (kScanPointsPerSide - 1));
    double cur = span;
    for (int i = 0; i < kScanPointsPerSide; ++i) {
        d.push_back(cur);
        cur *= q;
    }
    return d;
}

} // namespace

HypothesisReport check_hypothesis_K(const CoefficientFunction& a,
                                    OperatorForm form, double K) {
    if (!(K >= 1.0 && K < 2.0)) fail("invalid-K", "K must lie in [1,2)");
    const DegeneracyClass cls = classify_degeneracy(a);
    if (cls.tag != Degeneracy::Strong)
        fail("hypothesis-not-applicable", "the hypothesis concerns strongly degenerate a");

    HypothesisReport report;
    report.form = form;
    report.K = K;

    auto ratio = [&](double x) { return std::pow(std::abs(x - a.x0), K) / a.eval(x); };

    bool monotone_ok = true;
    double sup = 0.0;
    double inner_max = 0.0, outer_max = 0.0;
    for (int side = 0; side < 2; ++side) {
        const double span = side == 0 ? a.x0 : 1.0 - a.x0;
        const std::vector<double> dist = scan_distances(span);
        double prev = 0.0;
        for (std::size_t i = 0; i < dist.size(); ++i) {
            const double x = side == 0 ? a.x0 - dist[i] : a.x0 + dist[i];
            const double r = ratio(x);
            sup = std::max(sup, r);
            // monotone toward x0 on either side means: nonincreasing as the
            // distance shrinks along this scan
            if (i > 0 && r - prev > kMonotoneTol * std::max(1.0, std::abs(prev)))
                monotone_ok = false;
            prev = r;
            if (i >= 3 * dist.size() / 4)
                inner_max = std::max(inner_max, r);
            else
                outer_max = std::max(outer_max, r);
            if (i % 16 == 0) report.witness.emplace_back(x, r);
        }
    }
    report.witness_constant = sup;

    if (a.family == CoefficientFamily::PowerLaw) {
        // exact rule for the prototype: |x-x0|^{K-alpha} is monotone toward 0
        // and bounded iff K >= alpha
        report.satisfied = K >= *a.alpha - 1e-12;
        return report;
    }

    if (form == OperatorForm::Divergence) {
        report.satisfied = monotone_ok;
    } else {
        // bounded iff the scan does not keep growing as it approaches x0
        report.satisfied = inner_max <= 4.0 * std::max(outer_max, 1e-300);
    }
    return report;
}

std::optional<HypothesisReport> sweep_hypothesis_K(const CoefficientFunction& a,
                                                   OperatorForm form) {
    for (double K : {1.0, 1.25, 1.5, 1.75, 1.99}) {
        HypothesisReport r = check_hypothesis_K(a, form, K);
        if (r.satisfied) return r;
    }
    return std::nullopt;
}

} // namespace degenbeam
