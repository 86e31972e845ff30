#ifndef DEGENBEAM_HERMITE_HPP
#define DEGENBEAM_HERMITE_HPP

#include <array>
#include <functional>
#include <vector>

#include "degenbeam/grid.hpp"

namespace degenbeam {

// Two DOFs per node: value then slope. Global C1 continuity comes from the
// shared nodal value/slope pattern of the cubic Hermite shapes.
inline int value_dof(int node) { return 2 * node; }
inline int slope_dof(int node) { return 2 * node + 1; }
inline int n_dofs(const Grid& g) { return 2 * g.n_nodes(); }

struct ShapeValue {
    double value;
    double d1;  // d/dx
    double d2;  // d^2/dx^2
};

/// The four cubic Hermite shapes of an element at local xi in [0,1], with the
/// slope shapes scaled by the element length so that DOFs are nodal values of
/// u and u'. Derivatives are with respect to x.
std::array<ShapeValue, 4> eval_basis(const Grid& grid, int element, double xi);

/// Global DOF indices of an element's four local shapes.
std::array<int, 4> element_dofs(int element);

/// Hermite interpolant: nodal values from f, nodal slopes from df.
std::vector<double> interpolate(const Grid& grid,
                                const std::function<double(double)>& f,
                                const std::function<double(double)>& df);

/// Piecewise-cubic reconstruction of a DOF vector. value/d1 are continuous;
/// d2/d3 take one-sided limits at nodes (side < 0 left, side >= 0 right).
class FeFunction {
public:
    FeFunction(const Grid& grid, std::vector<double> dofs);

    double value(double x) const;
    double d1(double x) const;
    double d2(double x, int side = 0) const;
    double d3(double x, int side = 0) const;

    const Grid& grid() const { return grid_; }
    const std::vector<double>& dofs() const { return dofs_; }

private:
    double eval(double x, int deriv, int side) const;

    Grid grid_;
    std::vector<double> dofs_;
};

} // namespace degenbeam

#endif
