#ifndef DEGENBEAM_QUADRATURE_HPP
#define DEGENBEAM_QUADRATURE_HPP

#include <functional>
#include <optional>
#include <vector>

#include "degenbeam/coefficient.hpp"
#include "degenbeam/grid.hpp"

namespace degenbeam {

enum class WeightKind { Plain, TimesA, OverA };

/// Materialized per-element Gauss points. Points are strictly interior to
/// their elements, so they never hit x0 (a node by construction).
struct QuadratureRule {
    WeightKind weight_kind = WeightKind::Plain;
    int order = 4;
    struct ElementPoints {
        std::vector<double> x;
        std::vector<double> w;
    };
    std::vector<ElementPoints> elements;
};

QuadratureRule make_quadrature(const Grid& grid, WeightKind kind, int order);

struct QuadratureSettings {
    int rule_order = 4;
    double over_a_tol = 1e-8;   // relative-change stop for the singular ladder
    int min_ladder_depth = 4;
    int max_ladder_depth = 48;
};

/// Integral of g * w over [0,1], w in {1, a, 1/a}. Weighted integrals over the
/// two elements adjacent to x0 use a dyadic subdivision ladder (ratio 1/2)
/// with a geometric tail estimate; everything else is plain per-element Gauss
/// accumulated in element order. OverA with a non-integrable singularity at
/// x0 fails to converge and raises "divergent-integral"; callers whose
/// integrand vanishes at x0 at least linearly can assert vanishes_at_x0 to
/// get a sharper error message when the probe still diverges.
double integrate(const std::function<double(double)>& g, WeightKind kind,
                 const Grid& grid, const CoefficientFunction& a,
                 const QuadratureSettings& settings = {},
                 bool vanishes_at_x0 = false);

/// Raw truncated ladder for g / a at a fixed depth: dyadic pieces plus a bare
/// Gauss estimate on the innermost sliver, no tail model and no convergence
/// test. Grows without bound in d exactly when the integral diverges; this is
/// the numerical witness used by the strong-case checks.
double integrate_over_a_at_depth(const std::function<double(double)>& g,
                                 const Grid& grid, const CoefficientFunction& a,
                                 int depth, int order = 4);

/// Integral of gw over one segment [lo, hi]. When singular_endpoint equals lo
/// or hi, the dyadic ladder with the geometric tail estimate runs from that
/// endpoint; otherwise a plain Gauss rule is used. Non-convergence raises
/// "divergent-integral".
double integrate_segment(const std::function<double(double)>& gw, double lo,
                         double hi, std::optional<double> singular_endpoint,
                         const QuadratureSettings& settings = {});

/// Fixed positive quadrature for a segment with an integrable singularity at
/// endpoint x0: Gauss points on dyadic pieces graded toward x0, innermost
/// sliver included. Covers [lo, hi] exactly, so plain integrands keep their
/// Gauss exactness. Assembly evaluates every entry of an element on one such
/// shared rule: local matrices stay Gram matrices (exactly PSD, exact
/// discrete kernels), which per-entry adaptive quadrature would destroy.
struct SegmentRule {
    std::vector<double> x;
    std::vector<double> w;
};
SegmentRule dyadic_segment_rule(double lo, double hi, double x0, int order,
                                int depth = 40);

} // namespace degenbeam

#endif
