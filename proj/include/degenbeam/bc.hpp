#ifndef DEGENBEAM_BC_HPP
#define DEGENBEAM_BC_HPP

#include <string>
#include <vector>

#include "degenbeam/coefficient.hpp"

namespace degenbeam {

enum class X0Location { LeftEnd, Interior, RightEnd };

X0Location classify_location(double x0);

/// Endpoint trace conditions. All of these are natural for the C1 Galerkin
/// discretization: they are exactly the boundary terms killed by the
/// integration-by-parts identities, so no DOF is eliminated for them.
enum class TraceKind {
    SecondDeriv,  // u''(p) = 0
    ThirdDeriv,   // u'''(p) = 0
    FluxValue,    // (a u'')(p) = 0
    FluxDeriv,    // (a u'')'(p) = 0
};

struct TraceCondition {
    TraceKind kind;
    double position;  // 0 or 1
    bool operator==(const TraceCondition&) const = default;
};

/// u(x0) = 0, imposed on the space by pinning the value DOF at the x0 node.
/// This is the only essential constraint that arises (strong non-divergence
/// cases); the slope DOF at x0 always stays free.
struct EssentialConstraint {
    bool operator==(const EssentialConstraint&) const = default;
};

struct BCSet {
    std::vector<TraceCondition> natural;
    std::vector<EssentialConstraint> essential;
    // case labels
    OperatorForm form = OperatorForm::Divergence;
    Degeneracy degeneracy = Degeneracy::Weak;
    X0Location location = X0Location::Interior;

    std::string describe() const;
};

/// The full case table. Total on the (form, degeneracy, location) space.
BCSet bc_taxonomy(OperatorForm form, Degeneracy degeneracy, X0Location location);

} // namespace degenbeam

#endif
