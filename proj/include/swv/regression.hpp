#pragma once
// Ordinary least squares for the single- and multiple-variable linear
// predictors. Coefficients are fitted in raw physical units.

#include <string>
#include <vector>

#include "swv/conditioning.hpp"
#include "swv/linalg.hpp"

namespace swv {

struct LinearModel {
    double intercept = 0.0;
    std::vector<double> slopes;  // aligned with feature_names
    std::vector<std::string> feature_names;
};

// Unique least-squares minimizer via Householder QR on [1 | X].
// Throws RankDeficientError on collinear features and std::invalid_argument
// when rows < features + 1.
LinearModel fit_ols(const FeatureTable& table);

std::vector<double> predict_linear(const LinearModel& model, const Matrix& x);

}  // namespace swv
