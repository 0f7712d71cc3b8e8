#pragma once
// JSON (de)serialization of trained predictors. One schema covers both
// families: linear models carry "coefficients", neural models "weights"
// plus the fitted scalers.

#include <filesystem>

#include "json.hpp"

#include "swv/predictor.hpp"

namespace swv {

inline constexpr int kModelSchemaVersion = 1;

nlohmann::ordered_json model_to_json(const PredictorModel& model);
PredictorModel model_from_json(const nlohmann::json& j);

void save_model(const PredictorModel& model, const std::filesystem::path& path);
PredictorModel load_model(const std::filesystem::path& path);

}  // namespace swv
