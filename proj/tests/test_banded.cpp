#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include <Eigen/Dense>

#include "degenbeam/banded.hpp"
#include "degenbeam/errors.hpp"

using namespace degenbeam;

namespace {

// random SPD banded matrix: diagonally dominant
SymmetricBanded random_spd(int n, int hb, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    SymmetricBanded m(n, hb);
    for (int j = 0; j < n; ++j)
        for (int i = j + 1; i <= std::min(n - 1, j + hb); ++i)
            m.set(i, j, dist(rng));
    for (int i = 0; i < n; ++i) {
        double row = 0.0;
        for (int j = std::max(0, i - hb); j <= std::min(n - 1, i + hb); ++j)
            if (j != i) row += std::abs(m.get(i, j));
        m.set(i, i, row + 1.0 + std::abs(dist(rng)));
    }
    return m;
}

} // namespace

TEST_CASE("banded storage round-trips and rejects off-band entries") {
    SymmetricBanded m(6, 3);
    m.set(2, 0, 4.5);
    CHECK(m.get(2, 0) == 4.5);
    CHECK(m.get(0, 2) == 4.5);
    CHECK(m.get(5, 0) == 0.0);
    CHECK_THROWS_AS(m.set(5, 0, 1.0), Error);
}

TEST_CASE("multiply matches the dense product") {
    const SymmetricBanded m = random_spd(40, 3, 123);
    const Eigen::MatrixXd d = m.to_dense();
    CHECK((d - d.transpose()).norm() == 0.0);

    std::mt19937 rng(7);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    std::vector<double> x(40);
    for (double& v : x) v = dist(rng);
    const std::vector<double> y = m.multiply(x);
    Eigen::VectorXd xe(40);
    for (int i = 0; i < 40; ++i) xe[i] = x[i];
    const Eigen::VectorXd ye = d * xe;
    for (int i = 0; i < 40; ++i) CHECK(y[i] == doctest::Approx(ye[i]).epsilon(1e-13));
}

TEST_CASE("banded Cholesky solves against the Eigen oracle") {
    for (unsigned seed : {1u, 2u, 3u}) {
        const SymmetricBanded m = random_spd(60, 3, seed);
        std::mt19937 rng(seed + 100);
        std::uniform_real_distribution<double> dist(-1.0, 1.0);
        std::vector<double> rhs(60);
        for (double& v : rhs) v = dist(rng);

        const BandedCholesky chol(m);
        const std::vector<double> x = chol.solve(rhs);

        const Eigen::MatrixXd d = m.to_dense();
        Eigen::VectorXd b(60);
        for (int i = 0; i < 60; ++i) b[i] = rhs[i];
        const Eigen::VectorXd xe = d.llt().solve(b);
        for (int i = 0; i < 60; ++i) CHECK(x[i] == doctest::Approx(xe[i]).epsilon(1e-11));
    }
}

TEST_CASE("Cholesky rejects indefinite matrices") {
    SymmetricBanded m(4, 1);
    m.set(0, 0, 1.0);
    m.set(1, 1, -2.0);
    m.set(2, 2, 1.0);
    m.set(3, 3, 1.0);
    CHECK_THROWS_AS(BandedCholesky{m}, Error);
}

TEST_CASE("identity row/col elimination keeps symmetry") {
    SymmetricBanded m = random_spd(10, 3, 99);
    m.make_identity_row_col(4);
    const Eigen::MatrixXd d = m.to_dense();
    CHECK(d(4, 4) == 1.0);
    for (int j = 0; j < 10; ++j) {
        if (j == 4) continue;
        CHECK(d(4, j) == 0.0);
        CHECK(d(j, 4) == 0.0);
    }
    CHECK((d - d.transpose()).norm() == 0.0);
}

TEST_CASE("quadratic form matches multiply") {
    const SymmetricBanded m = random_spd(25, 3, 5);
    std::vector<double> x(25, 0.0);
    for (int i = 0; i < 25; ++i) x[i] = std::sin(0.7 * i);
    const std::vector<double> y = m.multiply(x);
    double dot = 0.0;
    for (int i = 0; i < 25; ++i) dot += x[i] * y[i];
    CHECK(m.quadratic_form(x) == doctest::Approx(dot).epsilon(1e-14));
    CHECK(m.quadratic_form(x) > 0.0);
}
