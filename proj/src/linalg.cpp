#include "swv/linalg.hpp"

#include <cmath>

namespace swv {

std::vector<double> qr_least_squares(const Matrix& a, std::span<const double> b,
                                     double rank_tol) {
    const std::size_t m = a.rows();
    const std::size_t n = a.cols();
    if (b.size() != m) throw std::invalid_argument("qr_least_squares: rhs length mismatch");
    if (m < n) throw std::invalid_argument("qr_least_squares: fewer rows than columns");

    Matrix r = a;
    std::vector<double> rhs(b.begin(), b.end());

    // Householder triangularization applied to [A | b]
    for (std::size_t k = 0; k < n; ++k) {
        double norm = 0.0;
        for (std::size_t i = k; i < m; ++i) norm += r(i, k) * r(i, k);
        norm = std::sqrt(norm);
        if (norm == 0.0) continue;  // caught by the rank check below

        const double alpha = (r(k, k) > 0.0) ? -norm : norm;
        std::vector<double> v(m - k);
        v[0] = r(k, k) - alpha;
        for (std::size_t i = k + 1; i < m; ++i) v[i - k] = r(i, k);
        double vtv = 0.0;
        for (double x : v) vtv += x * x;
        if (vtv == 0.0) continue;

        r(k, k) = alpha;
        for (std::size_t i = k + 1; i < m; ++i) r(i, k) = 0.0;

        for (std::size_t j = k + 1; j < n; ++j) {
            double dot = 0.0;
            for (std::size_t i = k; i < m; ++i) dot += v[i - k] * r(i, j);
            const double scale = 2.0 * dot / vtv;
            for (std::size_t i = k; i < m; ++i) r(i, j) -= scale * v[i - k];
        }
        double dot = 0.0;
        for (std::size_t i = k; i < m; ++i) dot += v[i - k] * rhs[i];
        const double scale = 2.0 * dot / vtv;
        for (std::size_t i = k; i < m; ++i) rhs[i] -= scale * v[i - k];
    }

    double max_diag = 0.0;
    for (std::size_t j = 0; j < n; ++j) max_diag = std::max(max_diag, std::abs(r(j, j)));
    for (std::size_t j = 0; j < n; ++j) {
        if (std::abs(r(j, j)) < rank_tol * max_diag || max_diag == 0.0) {
            throw RankDeficientError("design matrix is rank deficient (column " +
                                     std::to_string(j) + ")");
        }
    }

    std::vector<double> x(n, 0.0);
    for (std::size_t jj = n; jj-- > 0;) {
        double s = rhs[jj];
        for (std::size_t k = jj + 1; k < n; ++k) s -= r(jj, k) * x[k];
        x[jj] = s / r(jj, jj);
    }
    return x;
}

std::vector<double> solve_spd(const Matrix& a, std::span<const double> b) {
    const std::size_t n = a.rows();
    if (a.cols() != n) throw std::invalid_argument("solve_spd: matrix not square");
    if (b.size() != n) throw std::invalid_argument("solve_spd: rhs length mismatch");

    Matrix l(n, n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j <= i; ++j) {
            double s = a(i, j);
            for (std::size_t k = 0; k < j; ++k) s -= l(i, k) * l(j, k);
            if (i == j) {
                if (s <= 0.0 || !std::isfinite(s)) {
                    throw std::runtime_error("solve_spd: matrix not positive definite");
                }
                l(i, i) = std::sqrt(s);
            } else {
                l(i, j) = s / l(j, j);
            }
        }
    }

    std::vector<double> y(n);
    for (std::size_t i = 0; i < n; ++i) {
        double s = b[i];
        for (std::size_t k = 0; k < i; ++k) s -= l(i, k) * y[k];
        y[i] = s / l(i, i);
    }
    std::vector<double> x(n);
    for (std::size_t ii = n; ii-- > 0;) {
        double s = y[ii];
        for (std::size_t k = ii + 1; k < n; ++k) s -= l(k, ii) * x[k];
        x[ii] = s / l(ii, ii);
    }
    return x;
}

}  // namespace swv
