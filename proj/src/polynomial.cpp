#include "degenbeam/polynomial.hpp"

#include <cmath>
#include <stdexcept>

namespace degenbeam {

Polynomial Polynomial::monomial(int k, double center) {
    std::vector<double> c(static_cast<std::size_t>(k) + 1, 0.0);
    c.back() = 1.0;
    return Polynomial(std::move(c), center);
}

double Polynomial::value(double x) const {
    const double t = x - center_;
    double acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
    return acc;
}

Polynomial Polynomial::derivative() const {
    if (coeffs_.size() <= 1) return Polynomial({}, center_);
    std::vector<double> d(coeffs_.size() - 1);
    for (std::size_t k = 1; k < coeffs_.size(); ++k)
        d[k - 1] = static_cast<double>(k) * coeffs_[k];
    return Polynomial(std::move(d), center_);
}

Polynomial Polynomial::derivative(int order) const {
    Polynomial p = *this;
    for (int i = 0; i < order; ++i) p = p.derivative();
    return p;
}

namespace {
void require_same_center(const Polynomial& a, const Polynomial& b) {
    if (a.coefficients().empty() || b.coefficients().empty()) return;
    if (a.center() != b.center())
        throw std::logic_error("polynomial arithmetic requires a common expansion center");
}
} // namespace

Polynomial Polynomial::operator+(const Polynomial& other) const {
    require_same_center(*this, other);
    std::vector<double> c(std::max(coeffs_.size(), other.coeffs_.size()), 0.0);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) c[k] += coeffs_[k];
    for (std::size_t k = 0; k < other.coeffs_.size(); ++k) c[k] += other.coeffs_[k];
    return Polynomial(std::move(c), coeffs_.empty() ? other.center_ : center_);
}

Polynomial Polynomial::operator-(const Polynomial& other) const {
    return *this + other * -1.0;
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
    require_same_center(*this, other);
    if (coeffs_.empty() || other.coeffs_.empty())
        return Polynomial({}, center_);
    std::vector<double> c(coeffs_.size() + other.coeffs_.size() - 1, 0.0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < other.coeffs_.size(); ++j)
            c[i + j] += coeffs_[i] * other.coeffs_[j];
    return Polynomial(std::move(c), center_);
}

Polynomial Polynomial::operator*(double s) const {
    std::vector<double> c = coeffs_;
    for (double& v : c) v *= s;
    return Polynomial(std::move(c), center_);
}

PiecewisePoly PiecewisePoly::single(Polynomial p) {
    PiecewisePoly out;
    out.left_ = p;
    out.right_ = std::move(p);
    out.has_break_ = false;
    return out;
}

PiecewisePoly PiecewisePoly::split(double breakpoint, Polynomial left, Polynomial right) {
    PiecewisePoly out;
    out.left_ = std::move(left);
    out.right_ = std::move(right);
    out.breakpoint_ = breakpoint;
    out.has_break_ = true;
    return out;
}

double PiecewisePoly::value(double x, int side) const {
    if (!has_break_) return right_.value(x);
    if (x < breakpoint_ || (x == breakpoint_ && side < 0)) return left_.value(x);
    return right_.value(x);
}

PiecewisePoly PiecewisePoly::derivative() const {
    PiecewisePoly out = *this;
    out.left_ = left_.derivative();
    out.right_ = right_.derivative();
    return out;
}

PiecewisePoly PiecewisePoly::derivative(int order) const {
    PiecewisePoly out = *this;
    for (int i = 0; i < order; ++i) out = out.derivative();
    return out;
}

} // namespace degenbeam
