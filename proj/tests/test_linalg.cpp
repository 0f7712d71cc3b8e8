// Dense matrix container plus the QR least-squares and SPD solvers, checked
// against hand-worked systems and an independent normal-equation solver.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <vector>

#include "oracle_helpers.hpp"
#include "swv/linalg.hpp"

using namespace swv;

TEST_CASE("Matrix is row-major with span row views") {
    Matrix m(2, 3, 0.0);
    m(0, 0) = 1.0;
    m(0, 2) = 3.0;
    m(1, 1) = 5.0;
    CHECK(m.rows() == 2);
    CHECK(m.cols() == 3);
    CHECK_FALSE(m.empty());
    CHECK(m.data()[2] == 3.0);   // row 0, col 2
    CHECK(m.data()[4] == 5.0);   // row 1, col 1
    auto r0 = m.row(0);
    CHECK(r0.size() == 3);
    CHECK(r0[0] == 1.0);
    r0[1] = -2.0;
    CHECK(m(0, 1) == -2.0);
    CHECK(Matrix().empty());
}

TEST_CASE("qr_least_squares solves a square system exactly") {
    // 2x + y = 5, x - y = 1  ->  x = 2, y = 1
    Matrix a(2, 2);
    a(0, 0) = 2.0;
    a(0, 1) = 1.0;
    a(1, 0) = 1.0;
    a(1, 1) = -1.0;
    const std::vector<double> x = qr_least_squares(a, std::vector<double>{5.0, 1.0});
    CHECK(x[0] == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(x[1] == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("qr_least_squares residuals are orthogonal to the column space") {
    // The least-squares minimizer is characterized by A^T (b - A x) = 0.
    oracle::Rng rng(2024);
    for (int trial = 0; trial < 25; ++trial) {
        const std::size_t n = 12 + static_cast<std::size_t>(trial % 5);
        const std::size_t p = 3;
        Matrix a(n, p);
        std::vector<double> b(n);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < p; ++j) a(i, j) = rng.uniform(-2.0, 2.0);
            b[i] = rng.uniform(-5.0, 5.0);
        }
        const std::vector<double> x = qr_least_squares(a, b);
        for (std::size_t j = 0; j < p; ++j) {
            double dot = 0.0;
            for (std::size_t i = 0; i < n; ++i) {
                double yhat = 0.0;
                for (std::size_t k = 0; k < p; ++k) yhat += a(i, k) * x[k];
                dot += a(i, j) * (b[i] - yhat);
            }
            CHECK(std::abs(dot) < 1e-9);
        }
    }
}

TEST_CASE("qr_least_squares and the oracle agree through an intercept design") {
    oracle::Rng rng(7);
    for (int trial = 0; trial < 25; ++trial) {
        const std::size_t n = 20;
        Matrix x(n, 2);
        std::vector<double> y(n);
        for (std::size_t i = 0; i < n; ++i) {
            x(i, 0) = rng.uniform(0.0, 10.0);
            x(i, 1) = rng.uniform(-3.0, 3.0);
            y[i] = 1.5 + 0.3 * x(i, 0) - 2.0 * x(i, 1) + rng.uniform(-0.1, 0.1);
        }
        Matrix design(n, 3);
        for (std::size_t i = 0; i < n; ++i) {
            design(i, 0) = 1.0;
            design(i, 1) = x(i, 0);
            design(i, 2) = x(i, 1);
        }
        const std::vector<double> qr = qr_least_squares(design, y);
        const std::vector<double> ref = oracle::ols_normal_equations(x, y);
        REQUIRE(qr.size() == ref.size());
        for (std::size_t j = 0; j < qr.size(); ++j) {
            CHECK(qr[j] == doctest::Approx(ref[j]).epsilon(1e-8));
        }
    }
}

TEST_CASE("qr_least_squares rejects collinear columns") {
    Matrix a(5, 2);
    for (std::size_t i = 0; i < 5; ++i) {
        a(i, 0) = static_cast<double>(i) + 1.0;
        a(i, 1) = 2.0 * a(i, 0);  // exact duplicate direction
    }
    CHECK_THROWS_AS(qr_least_squares(a, std::vector<double>(5, 1.0)),
                    RankDeficientError);
}

TEST_CASE("solve_spd recovers hand-worked solutions") {
    // [[4,1],[1,3]] x = [1,2] -> x = (1/11, 7/11)
    Matrix a(2, 2);
    a(0, 0) = 4.0;
    a(0, 1) = 1.0;
    a(1, 0) = 1.0;
    a(1, 1) = 3.0;
    const std::vector<double> x = solve_spd(a, std::vector<double>{1.0, 2.0});
    CHECK(x[0] == doctest::Approx(1.0 / 11.0).epsilon(1e-12));
    CHECK(x[1] == doctest::Approx(7.0 / 11.0).epsilon(1e-12));
}

TEST_CASE("solve_spd agrees with Gauss-Jordan on random SPD systems") {
    oracle::Rng rng(99);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t n = 6;
        Matrix g(n, n);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) g(i, j) = rng.uniform(-1.0, 1.0);
        }
        Matrix a(n, n);  // G^T G + I is SPD
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                double s = 0.0;
                for (std::size_t k = 0; k < n; ++k) s += g(k, i) * g(k, j);
                a(i, j) = s + (i == j ? 1.0 : 0.0);
            }
        }
        std::vector<double> b(n);
        for (double& v : b) v = rng.uniform(-4.0, 4.0);
        const std::vector<double> chol = solve_spd(a, b);
        const std::vector<double> ref = oracle::gauss_jordan_solve(a, b);
        for (std::size_t i = 0; i < n; ++i) {
            CHECK(chol[i] == doctest::Approx(ref[i]).epsilon(1e-10));
        }
    }
}

TEST_CASE("solve_spd rejects non-positive-definite input") {
    Matrix a(2, 2);
    a(0, 0) = 1.0;
    a(0, 1) = 2.0;
    a(1, 0) = 2.0;
    a(1, 1) = 1.0;  // eigenvalues 3 and -1
    CHECK_THROWS_AS(solve_spd(a, std::vector<double>{1.0, 1.0}), std::runtime_error);
}
