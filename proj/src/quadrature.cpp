#include "degenbeam/quadrature.hpp"

#include <cmath>
#include <limits>
#include <map>
#include <mutex>

#include "degenbeam/errors.hpp"
#include "degenbeam/gauss.hpp"

namespace degenbeam {

namespace {

GaussRule compute_gauss_rule(int n) {
    GaussRule rule;
    rule.points.resize(n);
    rule.weights.resize(n);
    // Roots of P_n on [-1,1] by Newton iteration, then mapped to [0,1].
    for (int i = 0; i < n / 2; ++i) {
        double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) break;
        }
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule.points[i] = (1.0 - x) / 2.0;
        rule.points[n - 1 - i] = (1.0 + x) / 2.0;
        rule.weights[i] = w / 2.0;
        rule.weights[n - 1 - i] = w / 2.0;
    }
    if (n % 2 == 1) {
        double p0 = 1.0, p1 = 0.0;  // P_k(0) recurrence
        for (int k = 2; k <= n; ++k) {
            const double p2 = (-(k - 1.0) * p0) / k;
            p0 = p1;
            p1 = p2;
        }
        const double dp = n * (0.0 * p1 - p0) / (0.0 - 1.0);  // P_n'(0)
        rule.points[n / 2] = 0.5;
        rule.weights[n / 2] = 2.0 / (dp * dp) / 2.0;
    }
    return rule;
}

} // namespace

const GaussRule& gauss_rule(int order) {
    if (order < 1 || order > 64) fail("invalid-order", "Gauss order must be in [1,64]");
    static std::mutex mutex;
    static std::map<int, GaussRule> cache;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(order);
    if (it == cache.end()) it = cache.emplace(order, compute_gauss_rule(order)).first;
    return it->second;
}

QuadratureRule make_quadrature(const Grid& grid, WeightKind kind, int order) {
    const GaussRule& base = gauss_rule(order);
    QuadratureRule rule;
    rule.weight_kind = kind;
    rule.order = order;
    rule.elements.resize(grid.n_elements());
    for (int e = 0; e < grid.n_elements(); ++e) {
        const double lo = grid.nodes[e];
        const double len = grid.element_length(e);
        auto& pts = rule.elements[e];
        pts.x.resize(base.points.size());
        pts.w.resize(base.points.size());
        for (std::size_t q = 0; q < base.points.size(); ++q) {
            pts.x[q] = lo + len * base.points[q];
            pts.w[q] = len * base.weights[q];
        }
    }
    return rule;
}

namespace {

struct LadderOutcome {
    double value = 0.0;
    bool converged = false;
};

// Dyadic subdivision (ratio 1/2) of the span between x0 and `far`, with a
// geometric tail estimate once the piece ratio stabilizes below one. The raw
// partial sums alone converge too slowly for fractional singularities; the
// tail model recovers the full integral to the per-piece Gauss accuracy.
LadderOutcome dyadic_ladder(const std::function<double(double)>& gw, double x0,
                            double far, const GaussRule& rule, double tol,
                            int min_depth, int max_depth) {
    const double h = std::abs(far - x0);
    LadderOutcome out;
    if (h == 0.0) {
        out.converged = true;
        return out;
    }
    const double sign = far > x0 ? 1.0 : -1.0;
    double sum = 0.0;
    double prev_piece = 0.0;
    double prev_total = std::numeric_limits<double>::quiet_NaN();
    int zero_streak = 0;
    for (int j = 0; j <= max_depth; ++j) {
        const double d_hi = h * std::ldexp(1.0, -j);
        const double d_lo = h * std::ldexp(1.0, -(j + 1));
        const double a = x0 + sign * d_lo;
        const double b = x0 + sign * d_hi;
        const double piece = gauss_segment(gw, std::min(a, b), std::max(a, b), rule);
        sum += piece;
        if (piece == 0.0) {
            if (++zero_streak >= 2 && j >= min_depth) {
                out.value = sum;
                out.converged = true;
                return out;
            }
        } else {
            zero_streak = 0;
        }
        if (j > 0 && prev_piece != 0.0) {
            const double r = piece / prev_piece;
            if (std::abs(r) < 0.995 && j >= min_depth) {
                const double total = sum + piece * r / (1.0 - r);
                if (!std::isnan(prev_total) &&
                    std::abs(total - prev_total) <=
                        tol * std::max(std::abs(total), 1e-30)) {
                    out.value = total;
                    out.converged = true;
                    return out;
                }
                prev_total = total;
            } else {
                prev_total = std::numeric_limits<double>::quiet_NaN();
            }
        }
        prev_piece = piece;
    }
    out.value = sum;
    out.converged = false;
    return out;
}

} // namespace

double integrate_segment(const std::function<double(double)>& gw, double lo,
                         double hi, std::optional<double> singular_endpoint,
                         const QuadratureSettings& settings) {
    const GaussRule& rule = gauss_rule(settings.rule_order);
    if (!singular_endpoint || (*singular_endpoint != lo && *singular_endpoint != hi))
        return gauss_segment(gw, lo, hi, rule);
    const double x0 = *singular_endpoint;
    const double far = (x0 == lo) ? hi : lo;
    const LadderOutcome l = dyadic_ladder(gw, x0, far, rule, settings.over_a_tol,
                                          settings.min_ladder_depth,
                                          settings.max_ladder_depth);
    if (!l.converged)
        fail("divergent-integral", "singular quadrature ladder did not converge near x0");
    return l.value;
}

double integrate(const std::function<double(double)>& g, WeightKind kind,
                 const Grid& grid, const CoefficientFunction& a,
                 const QuadratureSettings& settings, bool vanishes_at_x0) {
    std::function<double(double)> gw;
    switch (kind) {
        case WeightKind::Plain:
            gw = g;
            break;
        case WeightKind::TimesA:
            gw = [&](double x) { return g(x) * a.eval(x); };
            break;
        case WeightKind::OverA:
            gw = [&](double x) { return g(x) / a.eval(x); };
            break;
    }
    const bool singular = (kind != WeightKind::Plain) && a.degenerate;
    double acc = 0.0;
    for (int e = 0; e < grid.n_elements(); ++e) {
        const bool touches = singular && grid.touches_x0(e);
        try {
            acc += integrate_segment(gw, grid.nodes[e], grid.nodes[e + 1],
                                     touches ? std::optional<double>(grid.x0)
                                             : std::nullopt,
                                     settings);
        } catch (const Error& err) {
            if (err.code() == "divergent-integral" && vanishes_at_x0)
                fail("divergent-integral",
                     "ladder did not converge even though the integrand was "
                     "flagged as vanishing at x0");
            throw;
        }
    }
    return acc;
}

SegmentRule dyadic_segment_rule(double lo, double hi, double x0, int order, int depth) {
    const GaussRule& base = gauss_rule(order);
    SegmentRule rule;
    if (x0 != lo && x0 != hi) {
        const double len = hi - lo;
        for (std::size_t q = 0; q < base.points.size(); ++q) {
            rule.x.push_back(lo + len * base.points[q]);
            rule.w.push_back(len * base.weights[q]);
        }
        return rule;
    }
    const double far = (x0 == lo) ? hi : lo;
    const double h = std::abs(far - x0);
    const double sign = far > x0 ? 1.0 : -1.0;
    auto add_piece = [&](double d_near, double d_far) {
        const double a = x0 + sign * d_near;
        const double b = x0 + sign * d_far;
        const double p_lo = std::min(a, b);
        const double len = std::abs(b - a);
        if (len <= 0.0) return;
        for (std::size_t q = 0; q < base.points.size(); ++q) {
            rule.x.push_back(p_lo + len * base.points[q]);
            rule.w.push_back(len * base.weights[q]);
        }
    };
    for (int j = 0; j <= depth; ++j)
        add_piece(h * std::ldexp(1.0, -(j + 1)), h * std::ldexp(1.0, -j));
    add_piece(0.0, h * std::ldexp(1.0, -(depth + 1)));  // innermost sliver
    return rule;
}

double integrate_over_a_at_depth(const std::function<double(double)>& g,
                                 const Grid& grid, const CoefficientFunction& a,
                                 int depth, int order) {
    const GaussRule& rule = gauss_rule(order);
    auto gw = [&](double x) { return g(x) / a.eval(x); };
    double acc = 0.0;
    for (int e = 0; e < grid.n_elements(); ++e) {
        const double lo = grid.nodes[e];
        const double hi = grid.nodes[e + 1];
        if (!a.degenerate || !grid.touches_x0(e)) {
            acc += gauss_segment(gw, lo, hi, rule);
            continue;
        }
        const SegmentRule sr = dyadic_segment_rule(lo, hi, grid.x0, order, depth);
        for (std::size_t q = 0; q < sr.x.size(); ++q) acc += sr.w[q] * gw(sr.x[q]);
    }
    return acc;
}

} // namespace degenbeam
