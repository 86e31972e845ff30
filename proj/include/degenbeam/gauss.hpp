#ifndef DEGENBEAM_GAUSS_HPP
#define DEGENBEAM_GAUSS_HPP

#include <vector>

namespace degenbeam {

// Gauss-Legendre rule mapped to [0,1]: n points, exact for degree <= 2n-1.
struct GaussRule {
    std::vector<double> points;   // strictly inside (0,1)
    std::vector<double> weights;  // sum to 1
};

// Nodes by Newton iteration on P_n; cached per order, deterministic.
const GaussRule& gauss_rule(int order);

// Integral of g over [lo, hi] with the given rule.
template <typename F>
double gauss_segment(const F& g, double lo, double hi, const GaussRule& rule) {
    const double len = hi - lo;
    double acc = 0.0;
    for (std::size_t q = 0; q < rule.points.size(); ++q)
        acc += rule.weights[q] * g(lo + len * rule.points[q]);
    return len * acc;
}

} // namespace degenbeam

#endif
