#pragma once
// A trained predictor of either family (linear or neural) under one label,
// so the comparison harness, model files and the predict command can treat
// the four methods uniformly.

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "swv/linalg.hpp"
#include "swv/neuralnet.hpp"
#include "swv/regression.hpp"

namespace swv {

struct PredictorModel {
    std::string method;  // report label, e.g. lr_single / mlr / ann_single / ann_multi
    std::vector<std::string> feature_names;
    std::variant<LinearModel, NeuralModel> impl;

    // training metadata carried into the model file
    std::uint64_t seed = 0;
    int epochs_run = 0;
    double final_sse = 0.0;
    std::string stop_reason;  // "direct_solve" for linear fits

    bool is_neural() const { return std::holds_alternative<NeuralModel>(impl); }
};

// Raw physical-unit features in (columns in feature_names order), Vs km/s out.
std::vector<double> predict(const PredictorModel& model, const Matrix& x_raw);

}  // namespace swv
