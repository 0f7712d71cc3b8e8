#include "swv/model_io.hpp"

#include <utility>

#include "swv/util.hpp"

namespace swv {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

json scaler_to_json(const MinMaxScaler& s) {
    return json{{"min", s.col_min()}, {"max", s.col_max()}};
}

MinMaxScaler scaler_from_json(const json& j) {
    return MinMaxScaler(j.at("min").get<std::vector<double>>(),
                        j.at("max").get<std::vector<double>>());
}

}  // namespace

nlohmann::ordered_json model_to_json(const PredictorModel& model) {
    ordered_json j;
    j["schema_version"] = kModelSchemaVersion;
    j["method"] = model.method;
    j["kind"] = model.is_neural() ? "neural" : "linear";
    j["feature_names"] = model.feature_names;
    if (const auto* linear = std::get_if<LinearModel>(&model.impl)) {
        j["coefficients"] = {{"intercept", linear->intercept}, {"slopes", linear->slopes}};
        j["scalers"] = nullptr;
    } else {
        const auto& nn = std::get<NeuralModel>(model.impl);
        ordered_json weights;
        weights["n_inputs"] = nn.n_inputs;
        weights["n_hidden"] = nn.n_hidden;
        std::vector<double> w1(nn.w1.data(), nn.w1.data() + nn.w1.rows() * nn.w1.cols());
        weights["w1"] = w1;  // row-major, n_hidden x n_inputs
        weights["b1"] = nn.b1;
        weights["w2"] = nn.w2;
        weights["b2"] = nn.b2;
        j["weights"] = std::move(weights);
        j["scalers"] = {{"input", scaler_to_json(nn.input_scaler)},
                        {"target", scaler_to_json(nn.target_scaler)}};
    }
    j["training_meta"] = {{"seed", model.seed},
                          {"epochs_run", model.epochs_run},
                          {"final_sse", model.final_sse},
                          {"stop_reason", model.stop_reason}};
    return j;
}

PredictorModel model_from_json(const nlohmann::json& j) {
    try {
        const int version = j.at("schema_version").get<int>();
        if (version != kModelSchemaVersion) {
            throw std::runtime_error("unsupported model schema_version " +
                                     std::to_string(version));
        }
        PredictorModel model;
        model.method = j.at("method").get<std::string>();
        model.feature_names = j.at("feature_names").get<std::vector<std::string>>();

        const std::string kind = j.at("kind").get<std::string>();
        if (kind == "linear") {
            LinearModel linear;
            const json& c = j.at("coefficients");
            linear.intercept = c.at("intercept").get<double>();
            linear.slopes = c.at("slopes").get<std::vector<double>>();
            linear.feature_names = model.feature_names;
            if (linear.slopes.size() != model.feature_names.size()) {
                throw std::runtime_error("coefficient count does not match feature_names");
            }
            model.impl = std::move(linear);
        } else if (kind == "neural") {
            NeuralModel nn;
            const json& w = j.at("weights");
            nn.n_inputs = w.at("n_inputs").get<int>();
            nn.n_hidden = w.at("n_hidden").get<int>();
            if (nn.n_inputs < 1 || nn.n_hidden < 1) {
                throw std::runtime_error("network shape must be positive");
            }
            const auto w1 = w.at("w1").get<std::vector<double>>();
            nn.b1 = w.at("b1").get<std::vector<double>>();
            nn.w2 = w.at("w2").get<std::vector<double>>();
            nn.b2 = w.at("b2").get<double>();
            const auto nh = static_cast<std::size_t>(nn.n_hidden);
            const auto ni = static_cast<std::size_t>(nn.n_inputs);
            if (w1.size() != nh * ni || nn.b1.size() != nh || nn.w2.size() != nh) {
                throw std::runtime_error("weight array sizes do not match the declared shape");
            }
            nn.w1 = Matrix(nh, ni);
            std::copy(w1.begin(), w1.end(), nn.w1.data());
            const json& s = j.at("scalers");
            nn.input_scaler = scaler_from_json(s.at("input"));
            nn.target_scaler = scaler_from_json(s.at("target"));
            if (nn.input_scaler.n_cols() != ni || nn.target_scaler.n_cols() != 1) {
                throw std::runtime_error("scaler column counts do not match the network shape");
            }
            if (ni != model.feature_names.size()) {
                throw std::runtime_error("n_inputs does not match feature_names");
            }
            model.impl = std::move(nn);
        } else {
            throw std::runtime_error("unknown model kind '" + kind + "'");
        }

        const json& meta = j.at("training_meta");
        model.seed = meta.at("seed").get<std::uint64_t>();
        model.epochs_run = meta.at("epochs_run").get<int>();
        model.final_sse = meta.at("final_sse").get<double>();
        model.stop_reason = meta.at("stop_reason").get<std::string>();
        return model;
    } catch (const json::exception& e) {
        throw std::runtime_error(std::string("invalid model JSON: ") + e.what());
    }
}

void save_model(const PredictorModel& model, const std::filesystem::path& path) {
    write_file_atomic(path, model_to_json(model).dump(2) + "\n");
}

PredictorModel load_model(const std::filesystem::path& path) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(read_file(path));
    } catch (const nlohmann::json::parse_error& e) {
        throw std::runtime_error("cannot parse model file " + path.string() + ": " + e.what());
    }
    return model_from_json(j);
}

}  // namespace swv
