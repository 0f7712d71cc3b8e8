#include "swv/regression.hpp"

namespace swv {

LinearModel fit_ols(const FeatureTable& table) {
    const std::size_t n = table.n_rows();
    const std::size_t p = table.n_features();
    if (n < p + 1) {
        throw std::invalid_argument("fit_ols: need at least " + std::to_string(p + 1) +
                                    " rows for " + std::to_string(p) + " features, got " +
                                    std::to_string(n));
    }

    Matrix design(n, p + 1);
    for (std::size_t i = 0; i < n; ++i) {
        design(i, 0) = 1.0;
        for (std::size_t j = 0; j < p; ++j) design(i, j + 1) = table.x(i, j);
    }

    const std::vector<double> beta = qr_least_squares(design, table.y);

    LinearModel m;
    m.intercept = beta[0];
    m.slopes.assign(beta.begin() + 1, beta.end());
    m.feature_names = table.feature_names;
    return m;
}

std::vector<double> predict_linear(const LinearModel& model, const Matrix& x) {
    if (x.cols() != model.slopes.size()) {
        throw std::invalid_argument("predict_linear: expected " +
                                    std::to_string(model.slopes.size()) + " columns, got " +
                                    std::to_string(x.cols()));
    }
    std::vector<double> out(x.rows());
    for (std::size_t i = 0; i < x.rows(); ++i) {
        double v = model.intercept;
        for (std::size_t j = 0; j < x.cols(); ++j) v += model.slopes[j] * x(i, j);
        out[i] = v;
    }
    return out;
}

}  // namespace swv
