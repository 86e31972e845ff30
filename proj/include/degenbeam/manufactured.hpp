#ifndef DEGENBEAM_MANUFACTURED_HPP
#define DEGENBEAM_MANUFACTURED_HPP

#include <string>
#include <vector>

#include "degenbeam/assembly.hpp"
#include "degenbeam/norms.hpp"
#include "degenbeam/polynomial.hpp"

namespace degenbeam {

/// Manufactured solution u(t,x) = P(x) exp(-decay_rate t) with the source
/// obtained by exact coefficient-level differentiation of P (fixed ahead of
/// any solve):
///   divergence      h = e^{-rt} (-r P + a'' P'' + 2 a' P''' + a P'''')
///   non-divergence  h = e^{-rt} (-r P + a P'''')
/// evaluated one-sidedly away from x0. decay_rate = 0 gives a stationary
/// manufactured solution.
struct ManufacturedCase {
    std::string name;
    OperatorForm form = OperatorForm::Divergence;
    CoefficientFunction a;
    Polynomial profile;  // P
    double decay_rate = 1.0;
    NormKind error_norm = NormKind::L2;
};

/// Profile selection: x^4 (1-x)^4 wherever that keeps the source in the pivot
/// space (constant a, or degeneracy at an endpoint), and the x0-flattened
/// x^4 (1-x)^4 (x-x0)^4 for interior degeneracy, where P'' must vanish at x0
/// to second order for a'' P'' to stay square-integrable.
ManufacturedCase make_manufactured_case(OperatorForm form, CoefficientFunction a);

/// Largest trace-condition residual of the profile against the case's BC set.
/// Flux traces at a degenerate endpoint are evaluated at a 1e-7 offset (the
/// one-sided limit), everything else exactly at the endpoint.
double manufactured_bc_residual(const ManufacturedCase& c);

double manufactured_source(const ManufacturedCase& c, double t, double x);

struct ConvergenceTable {
    std::vector<int> levels;          // element counts, doubling
    std::vector<double> errors;       // error at final time per level
    std::vector<double> observed_orders;  // log2(e_i / e_{i+1}), size levels-1
};

/// Runs the parabolic problem on doubling meshes starting at n0, measuring
/// the error at t = horizon in the case's norm. dt shrinks by 16x per level
/// (proportional to h^4). Raises "invalid-manufactured-solution" when the
/// profile violates its BC set beyond 1e-8.
ConvergenceTable manufactured_convergence(const ManufacturedCase& c, int n0,
                                          int n_levels, double horizon,
                                          double dt0, double theta,
                                          const QuadratureSettings& settings = {});

} // namespace degenbeam

#endif
