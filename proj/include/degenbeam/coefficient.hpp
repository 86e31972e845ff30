#ifndef DEGENBEAM_COEFFICIENT_HPP
#define DEGENBEAM_COEFFICIENT_HPP

#include <functional>
#include <optional>
#include <vector>

namespace degenbeam {

enum class CoefficientFamily { PowerLaw, Custom };

/// Degeneracy coefficient a: [0,1] -> [0,inf). a vanishes at x0 and is
/// positive elsewhere; a constant (non-degenerate) coefficient is allowed as
/// the smoke case. Immutable after construction.
struct CoefficientFunction {
    std::function<double(double)> eval;          // a(x)
    std::function<double(double)> deriv;         // a'(x) for x != x0
    std::function<double(double)> second_deriv;  // a''(x) for x != x0
    double x0 = 0.5;
    CoefficientFamily family = CoefficientFamily::Custom;
    std::optional<double> alpha;                 // exponent, PowerLaw only
    bool degenerate = true;                      // a(x0) == 0

    double operator()(double x) const { return eval(x); }
};

/// a(x) = |x - x0|^alpha. Requires alpha > 0 and x0 in [0,1].
CoefficientFunction make_power_coefficient(double alpha, double x0);

/// Constant a(x) = value > 0; not degenerate. The nominal x0 only anchors the
/// grid (any interior point works) and defaults to 1/2.
CoefficientFunction make_constant_coefficient(double value, double x0 = 0.5);

/// Custom coefficient with caller-supplied evaluators. x0 must be given
/// explicitly; the module never root-finds for it. second_deriv may be empty,
/// in which case it is replaced by a central difference of deriv.
CoefficientFunction make_custom_coefficient(std::function<double(double)> eval,
                                            std::function<double(double)> deriv,
                                            double x0,
                                            std::function<double(double)> second_deriv = {});

enum class Degeneracy { Weak, Strong };

struct DegeneracyClass {
    Degeneracy tag = Degeneracy::Weak;
    bool integrable_inverse = true;  // 1/a in L1(0,1) iff Weak
};

/// Deterministic integrability probe: quadratures of 1/a over [0,1] minus the
/// windows [x0 - 2^-j, x0 + 2^-j], j = j_begin..j_end. "Cauchy" means the
/// relative change between the last two levels stays below cauchy_tol.
struct IntegrabilityProbe {
    int j_begin = 4;
    int j_end = 16;
    double cauchy_tol = 1e-3;
};

/// Weak iff the probe sequence is Cauchy. PowerLaw coefficients short-circuit
/// to the analytic rule alpha < 1 -> Weak, alpha >= 1 -> Strong.
DegeneracyClass classify_degeneracy(const CoefficientFunction& a,
                                    const IntegrabilityProbe& probe = {});

enum class OperatorForm { Divergence, NonDivergence };

/// Result of checking the structural hypothesis on a at a given K in [1,2).
/// Divergence form: |x-x0|^K / a monotone on each side of x0 (non-increasing
/// left, non-decreasing right). NonDivergence form: the same ratio bounded;
/// witness_constant reports the observed sup.
struct HypothesisReport {
    OperatorForm form = OperatorForm::Divergence;
    double K = 1.0;
    bool satisfied = false;
    double witness_constant = 0.0;
    std::vector<std::pair<double, double>> witness;  // (x, ratio) samples
};

HypothesisReport check_hypothesis_K(const CoefficientFunction& a,
                                    OperatorForm form, double K);

/// Scans K over {1, 1.25, 1.5, 1.75, 1.99} and returns the first satisfied
/// report, if any. There is no decision procedure for general a; this is a
/// convenience sweep only.
std::optional<HypothesisReport> sweep_hypothesis_K(const CoefficientFunction& a,
                                                   OperatorForm form);

} // namespace degenbeam

#endif
