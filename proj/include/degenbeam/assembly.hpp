#ifndef DEGENBEAM_ASSEMBLY_HPP
#define DEGENBEAM_ASSEMBLY_HPP

#include <functional>
#include <optional>
#include <vector>

#include "degenbeam/banded.hpp"
#include "degenbeam/bc.hpp"
#include "degenbeam/coefficient.hpp"
#include "degenbeam/grid.hpp"
#include "degenbeam/quadrature.hpp"

namespace degenbeam {

/// Problem description: operator form, coefficient, derived BC set, data and
/// scheme parameters. Built through make_problem_spec so that bc always is
/// the taxonomy set for (form, degeneracy, x0 location).
struct ProblemSpec {
    OperatorForm form = OperatorForm::Divergence;
    CoefficientFunction a;
    DegeneracyClass degeneracy;
    BCSet bc;
    std::function<double(double, double)> source;  // h(t, x)
    std::function<double(double)> initial;         // u0(x)
    std::function<double(double)> initial_slope;   // u0'(x)
    double horizon = 0.01;
    double dt = 1e-4;
    double theta = 1.0;
    std::optional<HypothesisReport> hypothesis;    // strong cases, when checked
};

ProblemSpec make_problem_spec(OperatorForm form, CoefficientFunction a,
                              std::function<double(double, double)> source,
                              std::function<double(double)> initial,
                              std::function<double(double)> initial_slope,
                              double horizon = 0.01, double dt = 1e-4,
                              double theta = 1.0);

/// Assembled Galerkin system. M is the Gram matrix of the pivot inner product
/// (plain L2 for divergence, 1/a-weighted for non-divergence); S is the
/// stiffness (integral of a u'' v'' resp. u'' v''). Rows/columns of
/// constrained DOFs are replaced by identity in both matrices. Immutable.
struct DiscreteSystem {
    SymmetricBanded M;
    SymmetricBanded S;
    std::vector<int> constrained_dofs;
    int n_dofs = 0;
    WeightKind pivot_weight = WeightKind::Plain;

    // context carried for load vectors and diagnostics
    Grid grid;
    CoefficientFunction a;
    QuadratureSettings quadrature;
};

/// Builds M and S for the problem spec on the given grid. The grid must contain x0 as
/// a node. A divergent 1/a-weighted entry between unconstrained DOFs (strong
/// non-divergence with a missing essential constraint) raises
/// "assembly-divergence".
DiscreteSystem assemble_system(const ProblemSpec& spec, const Grid& grid,
                               const QuadratureSettings& settings = {});

/// Zero the constrained entries of a DOF vector, leave the rest unchanged.
std::vector<double> apply_constraints(const DiscreteSystem& system,
                                      std::vector<double> vec);

/// Pivot-weighted load vector F_i = integral of f * phi_i * w, with
/// constrained entries zeroed.
std::vector<double> load_vector(const DiscreteSystem& system,
                                const std::function<double(double)>& f);

} // namespace degenbeam

#endif
