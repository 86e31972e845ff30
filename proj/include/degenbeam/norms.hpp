#ifndef DEGENBEAM_NORMS_HPP
#define DEGENBEAM_NORMS_HPP

#include <functional>

#include "degenbeam/coefficient.hpp"
#include "degenbeam/grid.hpp"
#include "degenbeam/hermite.hpp"
#include "degenbeam/quadrature.hpp"

namespace degenbeam {

/// Weighted Sobolev norms used throughout:
///   L2          ||u||_{L2}
///   L2OverA     ||u||_{L2_{1/a}}
///   H2aFull     (||u||^2 + ||u'||^2 + ||sqrt(a) u''||^2)^{1/2}
///   TripleBar   (||u||^2 + ||sqrt(a) u''||^2)^{1/2}
///   H2OverA     (||u||^2_{L2_{1/a}} + ||u'||^2 + ||u''||^2)^{1/2}
///   EquivalentI (||u||^2_{L2_{1/a}} + ||u''||^2)^{1/2}
enum class NormKind { L2, L2OverA, H2aFull, TripleBar, H2OverA, EquivalentI };

/// A scalar field with enough derivatives for the H2-type norms.
struct Field {
    std::function<double(double)> value;
    std::function<double(double)> d1;
    std::function<double(double)> d2;
};

Field as_field(const FeFunction& u);

double norm(const Field& u, NormKind kind, const CoefficientFunction& a,
            const Grid& grid, const QuadratureSettings& settings = {});

double norm(const FeFunction& u, NormKind kind, const CoefficientFunction& a,
            const QuadratureSettings& settings = {});

} // namespace degenbeam

#endif
