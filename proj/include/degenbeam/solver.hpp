#ifndef DEGENBEAM_SOLVER_HPP
#define DEGENBEAM_SOLVER_HPP

#include <functional>
#include <vector>

#include "degenbeam/assembly.hpp"

namespace degenbeam {

struct Trajectory {
    std::vector<double> times;                 // 0 = times[0] < ... <= horizon
    std::vector<std::vector<double>> states;   // DOF vector per time
    std::vector<double> pivot_norms;           // sqrt(u^T M u)
    std::vector<double> energies;              // u^T S u
};

/// Solves (M + S) u = F for F_i = integral of f * phi_i in the pivot weight,
/// i.e. the discrete (I + A_i) u = f. Banded Cholesky; the residual is checked
/// against 1e-10 * ||F||.
std::vector<double> elliptic_solve(const DiscreteSystem& system,
                                   const std::function<double(double)>& f);

/// theta-scheme for u_t + A u = h:
///   (M + theta dt S) u^{n+1} = (M - (1-theta) dt S) u^n
///                              + dt (theta F^{n+1} + (1-theta) F^n).
/// One factorization is reused across the constant-dt sweep. Records the
/// pivot norm and the S-energy at every step, initial state included.
Trajectory evolve(const ProblemSpec& spec, const DiscreteSystem& system);

/// k smallest generalized eigenvalues of S x = lambda M x, ascending, by
/// reduction to a dense symmetric problem through a factorization of M
/// (n_dofs <= 2000). M not positive definite raises "pivot-failure".
std::vector<double> dense_spectrum(const DiscreteSystem& system, int k);

} // namespace degenbeam

#endif
