#pragma once
// Independent reference implementations used to cross-check the library:
// a central-difference gradient, ordinary least squares via normal equations
// with Gauss-Jordan elimination, and a self-contained RNG. Nothing here
// shares code with the solvers under test.

#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <vector>

#include "swv/linalg.hpp"

namespace oracle {

// xorshift128+ so reference draws never depend on swv::Rng.
class Rng {
public:
    explicit Rng(std::uint64_t seed) {
        s0_ = seed ^ 0x9e3779b97f4a7c15ULL;
        s1_ = (seed << 1) | 1ULL;
        for (int i = 0; i < 16; ++i) next_u64();
    }

    std::uint64_t next_u64() {
        std::uint64_t x = s0_;
        const std::uint64_t y = s1_;
        s0_ = y;
        x ^= x << 23;
        s1_ = x ^ y ^ (x >> 17) ^ (y >> 26);
        return s1_ + y;
    }

    double uniform(double lo, double hi) {
        const double u = static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
        return lo + (hi - lo) * u;
    }

private:
    std::uint64_t s0_ = 0;
    std::uint64_t s1_ = 0;
};

// Central finite differences of f around theta, one parameter at a time.
inline std::vector<double> finite_difference_gradient(
    const std::function<double(const std::vector<double>&)>& f, std::vector<double> theta,
    double h = 1e-6) {
    std::vector<double> grad(theta.size());
    for (std::size_t i = 0; i < theta.size(); ++i) {
        const double save = theta[i];
        theta[i] = save + h;
        const double fp = f(theta);
        theta[i] = save - h;
        const double fm = f(theta);
        theta[i] = save;
        grad[i] = (fp - fm) / (2.0 * h);
    }
    return grad;
}

// Gauss-Jordan with partial pivoting; throws on a vanishing pivot.
inline std::vector<double> gauss_jordan_solve(swv::Matrix a, std::vector<double> b) {
    const std::size_t n = a.rows();
    if (a.cols() != n || b.size() != n) {
        throw std::invalid_argument("gauss_jordan_solve: shape mismatch");
    }
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        for (std::size_t r = col + 1; r < n; ++r) {
            if (std::abs(a(r, col)) > std::abs(a(pivot, col))) pivot = r;
        }
        if (std::abs(a(pivot, col)) < 1e-14) {
            throw std::runtime_error("gauss_jordan_solve: singular system");
        }
        if (pivot != col) {
            for (std::size_t c = 0; c < n; ++c) std::swap(a(pivot, c), a(col, c));
            std::swap(b[pivot], b[col]);
        }
        const double inv = 1.0 / a(col, col);
        for (std::size_t c = 0; c < n; ++c) a(col, c) *= inv;
        b[col] *= inv;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col) continue;
            const double factor = a(r, col);
            if (factor == 0.0) continue;
            for (std::size_t c = 0; c < n; ++c) a(r, c) -= factor * a(col, c);
            b[r] -= factor * b[col];
        }
    }
    return b;
}

// OLS through the normal equations (X^T X) beta = X^T y on [1 | X].
// Returns beta with the intercept first.
inline std::vector<double> ols_normal_equations(const swv::Matrix& x, std::span<const double> y) {
    const std::size_t n = x.rows();
    const std::size_t p = x.cols() + 1;
    swv::Matrix a(n, p);
    for (std::size_t i = 0; i < n; ++i) {
        a(i, 0) = 1.0;
        for (std::size_t j = 0; j < x.cols(); ++j) a(i, j + 1) = x(i, j);
    }
    swv::Matrix ata(p, p);
    std::vector<double> aty(p, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t ja = 0; ja < p; ++ja) {
            aty[ja] += a(i, ja) * y[i];
            for (std::size_t jb = 0; jb < p; ++jb) ata(ja, jb) += a(i, ja) * a(i, jb);
        }
    }
    return gauss_jordan_solve(std::move(ata), std::move(aty));
}

}  // namespace oracle
