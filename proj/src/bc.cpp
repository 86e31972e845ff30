#include "degenbeam/bc.hpp"

#include <sstream>

namespace degenbeam {

X0Location classify_location(double x0) {
    if (x0 == 0.0) return X0Location::LeftEnd;
    if (x0 == 1.0) return X0Location::RightEnd;
    return X0Location::Interior;
}

namespace {
TraceCondition u2(double p) { return {TraceKind::SecondDeriv, p}; }
TraceCondition u3(double p) { return {TraceKind::ThirdDeriv, p}; }
TraceCondition au2(double p) { return {TraceKind::FluxValue, p}; }
TraceCondition au2p(double p) { return {TraceKind::FluxDeriv, p}; }
} // namespace

BCSet bc_taxonomy(OperatorForm form, Degeneracy degeneracy, X0Location location) {
    BCSet bc;
    bc.form = form;
    bc.degeneracy = degeneracy;
    bc.location = location;

    if (form == OperatorForm::Divergence) {
        // Same condition sets for weak and strong degeneracy; at a degenerate
        // endpoint the plain traces are replaced by the flux traces.
        switch (location) {
            case X0Location::Interior:
                bc.natural = {u2(0), u3(0), u2(1), u3(1)};
                break;
            case X0Location::LeftEnd:
                bc.natural = {u2(1), u3(1), au2(0), au2p(0)};
                break;
            case X0Location::RightEnd:
                bc.natural = {u2(0), u3(0), au2(1), au2p(1)};
                break;
        }
        return bc;
    }

    // Non-divergence form.
    if (degeneracy == Degeneracy::Weak) {
        bc.natural = {u2(0), u3(0), u2(1), u3(1)};
        return bc;
    }
    switch (location) {
        case X0Location::Interior:
            bc.natural = {u2(0), u3(0), u2(1), u3(1)};
            break;
        case X0Location::LeftEnd:
            bc.natural = {u2(0), u2(1), u3(1)};
            break;
        case X0Location::RightEnd:
            bc.natural = {u2(0), u3(0), u2(1)};
            break;
    }
    bc.essential = {EssentialConstraint{}};
    return bc;
}

std::string BCSet::describe() const {
    std::ostringstream out;
    out << (form == OperatorForm::Divergence ? "divergence" : "nondivergence") << "/"
        << (degeneracy == Degeneracy::Weak ? "weak" : "strong") << "/"
        << (location == X0Location::LeftEnd ? "x0=0"
            : location == X0Location::RightEnd ? "x0=1" : "x0 interior")
        << " natural{";
    for (std::size_t i = 0; i < natural.size(); ++i) {
        if (i) out << ", ";
        switch (natural[i].kind) {
            case TraceKind::SecondDeriv: out << "u''(" << natural[i].position << ")=0"; break;
            case TraceKind::ThirdDeriv: out << "u'''(" << natural[i].position << ")=0"; break;
            case TraceKind::FluxValue: out << "(au'')(" << natural[i].position << ")=0"; break;
            case TraceKind::FluxDeriv: out << "(au'')'(" << natural[i].position << ")=0"; break;
        }
    }
    out << "} essential{";
    for (std::size_t i = 0; i < essential.size(); ++i) {
        if (i) out << ", ";
        out << (location == X0Location::LeftEnd ? "u(0)=0"
                : location == X0Location::RightEnd ? "u(1)=0" : "u(x0)=0");
    }
    out << "}";
    return out.str();
}

} // namespace degenbeam
