#include "swv/predictor.hpp"

namespace swv {

std::vector<double> predict(const PredictorModel& model, const Matrix& x_raw) {
    if (x_raw.cols() != model.feature_names.size()) {
        throw std::invalid_argument("predictor '" + model.method + "' expects " +
                                    std::to_string(model.feature_names.size()) +
                                    " feature columns, got " + std::to_string(x_raw.cols()));
    }
    if (const auto* linear = std::get_if<LinearModel>(&model.impl)) {
        return predict_linear(*linear, x_raw);
    }
    return predict_nn(std::get<NeuralModel>(model.impl), x_raw);
}

}  // namespace swv
