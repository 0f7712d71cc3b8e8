#pragma once
// Minimal dense row-major matrix plus the two solvers the project needs:
// Householder QR least squares (regression) and a damped SPD solve (LM steps).

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

namespace swv {

class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    double& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    double operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return data_.empty(); }

    std::span<double> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
    std::span<const double> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

    double* data() { return data_.data(); }
    const double* data() const { return data_.data(); }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

class RankDeficientError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Least squares min ||A x - b|| via Householder QR.
// Throws RankDeficientError when any |R_jj| < rank_tol * max |R_ii|.
std::vector<double> qr_least_squares(const Matrix& a, std::span<const double> b,
                                     double rank_tol = 1e-10);

// Solve A x = b for symmetric positive definite A (Cholesky).
// Throws std::runtime_error when a pivot is not strictly positive.
std::vector<double> solve_spd(const Matrix& a, std::span<const double> b);

}  // namespace swv
