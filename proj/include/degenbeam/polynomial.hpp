#ifndef DEGENBEAM_POLYNOMIAL_HPP
#define DEGENBEAM_POLYNOMIAL_HPP

#include <vector>

namespace degenbeam {

// Polynomial in powers of (x - center). Keeping an expansion center lets the
// manufactured solutions evaluate factors like (x-x0)^4 without cancellation
// next to the degeneracy point.
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(std::vector<double> coeffs, double center = 0.0)
        : coeffs_(std::move(coeffs)), center_(center) {}

    static Polynomial constant(double c) { return Polynomial({c}); }
    // (x - center)^k
    static Polynomial monomial(int k, double center = 0.0);

    double value(double x) const;
    Polynomial derivative() const;
    Polynomial derivative(int order) const;

    Polynomial operator+(const Polynomial& other) const;  // requires same center
    Polynomial operator-(const Polynomial& other) const;
    Polynomial operator*(const Polynomial& other) const;
    Polynomial operator*(double s) const;

    int degree() const { return coeffs_.empty() ? -1 : static_cast<int>(coeffs_.size()) - 1; }
    double center() const { return center_; }
    const std::vector<double>& coefficients() const { return coeffs_; }

private:
    std::vector<double> coeffs_;  // coeffs_[k] * (x-center)^k
    double center_ = 0.0;
};

// Piecewise polynomial with one optional breakpoint; one-sided evaluation is
// exact, which is what the Gauss-Green jump terms need.
class PiecewisePoly {
public:
    PiecewisePoly() = default;

    static PiecewisePoly single(Polynomial p);
    static PiecewisePoly split(double breakpoint, Polynomial left, Polynomial right);

    // side < 0: left limit, side > 0: right limit, side == 0: natural value
    // (right piece at the breakpoint).
    double value(double x, int side = 0) const;
    PiecewisePoly derivative() const;
    PiecewisePoly derivative(int order) const;

    bool has_break() const { return has_break_; }
    double breakpoint() const { return breakpoint_; }

private:
    Polynomial left_, right_;
    double breakpoint_ = 0.0;
    bool has_break_ = false;
};

} // namespace degenbeam

#endif
