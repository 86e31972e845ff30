#include "degenbeam/norms.hpp"

#include <cmath>

#include "degenbeam/errors.hpp"

namespace degenbeam {

Field as_field(const FeFunction& u) {
    Field f;
    f.value = [&u](double x) { return u.value(x); };
    f.d1 = [&u](double x) { return u.d1(x); };
    f.d2 = [&u](double x) { return u.d2(x); };
    return f;
}

double norm(const Field& u, NormKind kind, const CoefficientFunction& a,
            const Grid& grid, const QuadratureSettings& settings) {
    auto sq = [](const std::function<double(double)>& g) {
        return [g](double x) {
            const double v = g(x);
            return v * v;
        };
    };
    auto integral = [&](const std::function<double(double)>& g, WeightKind w) {
        try {
            return integrate(g, w, grid, a, settings);
        } catch (const Error& err) {
            if (err.code() == "divergent-integral")
                fail("norm-infinite", "1/a-weighted norm probe diverged");
            throw;
        }
    };

    double acc = 0.0;
    switch (kind) {
        case NormKind::L2:
            acc = integral(sq(u.value), WeightKind::Plain);
            break;
        case NormKind::L2OverA:
            acc = integral(sq(u.value), WeightKind::OverA);
            break;
        case NormKind::H2aFull:
            acc = integral(sq(u.value), WeightKind::Plain) +
                  integral(sq(u.d1), WeightKind::Plain) +
                  integral(sq(u.d2), WeightKind::TimesA);
            break;
        case NormKind::TripleBar:
            acc = integral(sq(u.value), WeightKind::Plain) +
                  integral(sq(u.d2), WeightKind::TimesA);
            break;
        case NormKind::H2OverA:
            acc = integral(sq(u.value), WeightKind::OverA) +
                  integral(sq(u.d1), WeightKind::Plain) +
                  integral(sq(u.d2), WeightKind::Plain);
            break;
        case NormKind::EquivalentI:
            acc = integral(sq(u.value), WeightKind::OverA) +
                  integral(sq(u.d2), WeightKind::Plain);
            break;
    }
    return std::sqrt(std::max(0.0, acc));
}

double norm(const FeFunction& u, NormKind kind, const CoefficientFunction& a,
            const QuadratureSettings& settings) {
    return norm(as_field(u), kind, a, u.grid(), settings);
}

} // namespace degenbeam
