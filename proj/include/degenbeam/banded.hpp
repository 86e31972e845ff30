#ifndef DEGENBEAM_BANDED_HPP
#define DEGENBEAM_BANDED_HPP

#include <vector>

#include <Eigen/Dense>

namespace degenbeam {

/// Symmetric banded matrix, lower-triangle storage: entry (i,j) with
/// 0 <= i - j <= hb lives at band_[i - j][j]. The cubic Hermite coupling
/// pattern gives hb = 3; nothing outside the band is ever stored, which makes
/// assembled symmetry exact by construction.
class SymmetricBanded {
public:
    SymmetricBanded() = default;
    SymmetricBanded(int n, int half_bandwidth);

    int size() const { return n_; }
    int half_bandwidth() const { return hb_; }

    double get(int i, int j) const;          // 0 outside the band
    void set(int i, int j, double v);
    void add(int i, int j, double v);

    std::vector<double> multiply(const std::vector<double>& x) const;
    double quadratic_form(const std::vector<double>& x) const;  // x^T A x

    /// Zero row/column k and put 1 on the diagonal (symmetric elimination).
    void make_identity_row_col(int k);

    /// Operator infinity norm (max absolute row sum).
    double inf_norm() const;

    Eigen::MatrixXd to_dense() const;

private:
    int n_ = 0;
    int hb_ = 0;
    std::vector<std::vector<double>> band_;  // band_[r][j] = A(j+r, j)
};

/// Banded Cholesky A = L L^T for symmetric positive definite A. Throws
/// "system-singular" when a pivot is not strictly positive.
class BandedCholesky {
public:
    explicit BandedCholesky(const SymmetricBanded& a);

    std::vector<double> solve(const std::vector<double>& rhs) const;

private:
    int n_ = 0;
    int hb_ = 0;
    std::vector<std::vector<double>> low_;  // L, same layout as SymmetricBanded
};

} // namespace degenbeam

#endif
