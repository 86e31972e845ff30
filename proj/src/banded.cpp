#include "degenbeam/banded.hpp"

#include <algorithm>
#include <cmath>

#include "degenbeam/errors.hpp"

namespace degenbeam {

SymmetricBanded::SymmetricBanded(int n, int half_bandwidth)
    : n_(n), hb_(half_bandwidth), band_(half_bandwidth + 1, std::vector<double>(n, 0.0)) {}

double SymmetricBanded::get(int i, int j) const {
    if (i < j) std::swap(i, j);
    const int r = i - j;
    if (r > hb_) return 0.0;
    return band_[r][j];
}

void SymmetricBanded::set(int i, int j, double v) {
    if (i < j) std::swap(i, j);
    const int r = i - j;
    if (r > hb_) fail("dimension-error", "entry outside the band");
    band_[r][j] = v;
}

void SymmetricBanded::add(int i, int j, double v) {
    if (i < j) std::swap(i, j);
    const int r = i - j;
    if (r > hb_) fail("dimension-error", "entry outside the band");
    band_[r][j] += v;
}

std::vector<double> SymmetricBanded::multiply(const std::vector<double>& x) const {
    if (static_cast<int>(x.size()) != n_) fail("dimension-error", "vector length mismatch");
    std::vector<double> y(n_, 0.0);
    for (int j = 0; j < n_; ++j) {
        y[j] += band_[0][j] * x[j];
        for (int r = 1; r <= hb_ && j + r < n_; ++r) {
            y[j + r] += band_[r][j] * x[j];
            y[j] += band_[r][j] * x[j + r];
        }
    }
    return y;
}

double SymmetricBanded::quadratic_form(const std::vector<double>& x) const {
    const std::vector<double> y = multiply(x);
    double acc = 0.0;
    for (int i = 0; i < n_; ++i) acc += x[i] * y[i];
    return acc;
}

void SymmetricBanded::make_identity_row_col(int k) {
    for (int r = 0; r <= hb_; ++r) {
        if (k - r >= 0) band_[r][k - r] = 0.0;  // row k left of diagonal
        if (k + r < n_) band_[r][k] = 0.0;      // column k below diagonal
    }
    band_[0][k] = 1.0;
}

double SymmetricBanded::inf_norm() const {
    double best = 0.0;
    for (int i = 0; i < n_; ++i) {
        double row = 0.0;
        for (int j = std::max(0, i - hb_); j <= std::min(n_ - 1, i + hb_); ++j)
            row += std::abs(get(i, j));
        best = std::max(best, row);
    }
    return best;
}

Eigen::MatrixXd SymmetricBanded::to_dense() const {
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n_, n_);
    for (int j = 0; j < n_; ++j) {
        m(j, j) = band_[0][j];
        for (int r = 1; r <= hb_ && j + r < n_; ++r) {
            m(j + r, j) = band_[r][j];
            m(j, j + r) = band_[r][j];
        }
    }
    return m;
}

BandedCholesky::BandedCholesky(const SymmetricBanded& a)
    : n_(a.size()), hb_(a.half_bandwidth()),
      low_(a.half_bandwidth() + 1, std::vector<double>(a.size(), 0.0)) {
    for (int j = 0; j < n_; ++j) {
        double d = a.get(j, j);
        for (int k = std::max(0, j - hb_); k < j; ++k) {
            const double l = low_[j - k][k];
            d -= l * l;
        }
        if (!(d > 0.0)) fail("system-singular", "nonpositive pivot in banded Cholesky");
        const double dj = std::sqrt(d);
        low_[0][j] = dj;
        for (int i = j + 1; i <= std::min(n_ - 1, j + hb_); ++i) {
            double s = a.get(i, j);
            for (int k = std::max(0, i - hb_); k < j; ++k)
                s -= low_[i - k][k] * low_[j - k][k];
            low_[i - j][j] = s / dj;
        }
    }
}

std::vector<double> BandedCholesky::solve(const std::vector<double>& rhs) const {
    if (static_cast<int>(rhs.size()) != n_) fail("dimension-error", "vector length mismatch");
    std::vector<double> y(rhs);
    for (int i = 0; i < n_; ++i) {
        double s = y[i];
        for (int k = std::max(0, i - hb_); k < i; ++k) s -= low_[i - k][k] * y[k];
        y[i] = s / low_[0][i];
    }
    for (int i = n_ - 1; i >= 0; --i) {
        double s = y[i];
        for (int k = i + 1; k <= std::min(n_ - 1, i + hb_); ++k) s -= low_[k - i][i] * y[k];
        y[i] = s / low_[0][i];
    }
    return y;
}

} // namespace degenbeam
