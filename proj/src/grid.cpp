#include "degenbeam/grid.hpp"

#include <algorithm>
#include <cmath>

#include "degenbeam/errors.hpp"

namespace degenbeam {

int Grid::element_of(double x) const {
    if (x <= nodes.front()) return 0;
    if (x >= nodes.back()) return n_elements() - 1;
    const auto it = std::upper_bound(nodes.begin(), nodes.end(), x);
    return static_cast<int>(it - nodes.begin()) - 1;
}

Grid build_grid(int n_elements, double x0, GridGrading grading) {
    if (n_elements < 2) fail("too-coarse", "need at least 2 elements");
    if (!(x0 >= 0.0 && x0 <= 1.0)) fail("invalid-point", "x0 must lie in [0,1]");

    Grid grid;
    grid.x0 = x0;
    grid.nodes.resize(n_elements + 1);
    for (int i = 0; i <= n_elements; ++i)
        grid.nodes[i] = static_cast<double>(i) / n_elements;

    // x0 becomes a node: snap the nearest interior node (endpoints are nodes
    // already), keeping the element count unchanged.
    if (x0 == 0.0) {
        grid.x0_node = 0;
    } else if (x0 == 1.0) {
        grid.x0_node = n_elements;
    } else {
        int idx = static_cast<int>(std::lround(x0 * n_elements));
        idx = std::clamp(idx, 1, n_elements - 1);
        grid.nodes[idx] = x0;
        grid.x0_node = idx;
    }

    if (grading.kind == GridGrading::Kind::GeometricTowardX0 && grading.layers > 0) {
        if (!(grading.ratio > 0.0 && grading.ratio < 1.0))
            fail("invalid-grading", "geometric ratio must lie in (0,1)");
        std::vector<double> extra;
        for (int side = 0; side < 2; ++side) {
            const int elem = side == 0 ? grid.x0_node - 1 : grid.x0_node;
            if (elem < 0 || elem >= grid.n_elements()) continue;
            const double h = grid.nodes[elem + 1] - grid.nodes[elem];
            const double sign = side == 0 ? -1.0 : 1.0;
            double len = h;
            for (int k = 0; k < grading.layers; ++k) {
                len *= grading.ratio;
                extra.push_back(x0 + sign * len);
            }
        }
        grid.nodes.insert(grid.nodes.end(), extra.begin(), extra.end());
        std::sort(grid.nodes.begin(), grid.nodes.end());
        grid.nodes.erase(std::unique(grid.nodes.begin(), grid.nodes.end()),
                         grid.nodes.end());
        grid.x0_node = static_cast<int>(
            std::lower_bound(grid.nodes.begin(), grid.nodes.end(), x0) -
            grid.nodes.begin());
    }

    for (int e = 0; e < grid.n_elements(); ++e) {
        if (!(grid.element_length(e) > 0.0))
            fail("invalid-grading", "grid produced a non-positive element");
    }
    return grid;
}

} // namespace degenbeam
