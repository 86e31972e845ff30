#include "degenbeam/hermite.hpp"

#include "degenbeam/errors.hpp"

namespace degenbeam {

std::array<int, 4> element_dofs(int element) {
    return {2 * element, 2 * element + 1, 2 * element + 2, 2 * element + 3};
}

std::array<ShapeValue, 4> eval_basis(const Grid& grid, int element, double xi) {
    if (element < 0 || element >= grid.n_elements())
        fail("index-error", "element index out of range");
    const double L = grid.element_length(element);
    const double L2 = L * L;
    const double x2 = xi * xi;
    const double x3 = x2 * xi;
    std::array<ShapeValue, 4> s;
    // value at left node
    s[0] = {1.0 - 3.0 * x2 + 2.0 * x3, (-6.0 * xi + 6.0 * x2) / L, (-6.0 + 12.0 * xi) / L2};
    // slope at left node (carries L so the DOF is u'(node))
    s[1] = {L * (xi - 2.0 * x2 + x3), 1.0 - 4.0 * xi + 3.0 * x2, (-4.0 + 6.0 * xi) / L};
    // value at right node
    s[2] = {3.0 * x2 - 2.0 * x3, (6.0 * xi - 6.0 * x2) / L, (6.0 - 12.0 * xi) / L2};
    // slope at right node
    s[3] = {L * (-x2 + x3), -2.0 * xi + 3.0 * x2, (-2.0 + 6.0 * xi) / L};
    return s;
}

std::vector<double> interpolate(const Grid& grid,
                                const std::function<double(double)>& f,
                                const std::function<double(double)>& df) {
    std::vector<double> dofs(n_dofs(grid));
    for (int i = 0; i < grid.n_nodes(); ++i) {
        dofs[value_dof(i)] = f(grid.nodes[i]);
        dofs[slope_dof(i)] = df(grid.nodes[i]);
    }
    return dofs;
}

FeFunction::FeFunction(const Grid& grid, std::vector<double> dofs)
    : grid_(grid), dofs_(std::move(dofs)) {
    if (static_cast<int>(dofs_.size()) != n_dofs(grid_))
        fail("dimension-error", "DOF vector length does not match the grid");
}

double FeFunction::eval(double x, int deriv, int side) const {
    int e = grid_.element_of(x);
    if (side < 0 && e > 0 && x == grid_.nodes[e]) e -= 1;
    const double L = grid_.element_length(e);
    const double xi = (x - grid_.nodes[e]) / L;
    const auto dofs = element_dofs(e);
    if (deriv <= 2) {
        const auto shapes = eval_basis(grid_, e, xi);
        double acc = 0.0;
        for (int p = 0; p < 4; ++p) {
            const double s = deriv == 0 ? shapes[p].value
                           : deriv == 1 ? shapes[p].d1
                                        : shapes[p].d2;
            acc += dofs_[dofs[p]] * s;
        }
        return acc;
    }
    // third derivative of the cubic: constant per element
    const double L2 = L * L;
    const double L3 = L2 * L;
    const double d3[4] = {12.0 / L3, 6.0 / L2, -12.0 / L3, 6.0 / L2};
    double acc = 0.0;
    for (int p = 0; p < 4; ++p) acc += dofs_[dofs[p]] * d3[p];
    return acc;
}

double FeFunction::value(double x) const { return eval(x, 0, 0); }
double FeFunction::d1(double x) const { return eval(x, 1, 0); }
double FeFunction::d2(double x, int side) const { return eval(x, 2, side); }
double FeFunction::d3(double x, int side) const { return eval(x, 3, side); }

} // namespace degenbeam
