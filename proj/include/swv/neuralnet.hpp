#pragma once
// Single-hidden-layer feed-forward network (tanh hidden, identity output)
// with two trainers: online generalized-delta-rule backpropagation and
// damped Gauss-Newton (Levenberg-Marquardt). Loss is plain SSE.

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "swv/conditioning.hpp"
#include "swv/linalg.hpp"

namespace swv {

enum class Optimizer { delta_rule, levenberg_marquardt };

std::string to_string(Optimizer opt);
Optimizer optimizer_from_string(const std::string& name);

struct TrainConfig {
    Optimizer optimizer = Optimizer::levenberg_marquardt;
    double learning_rate = 0.01;  // delta rule only
    int max_epochs = 300;
    double lm_lambda0 = 1e-3;
    double lm_lambda_up = 10.0;
    double lm_lambda_down = 0.1;
    double lm_lambda_max = 1e12;
    int patience = 50;  // epochs without validation improvement
    std::uint64_t seed = 1;
    double init_range = 0.5;
};

void validate_train_config(const TrainConfig& cfg);

struct NeuralModel {
    int n_inputs = 0;
    int n_hidden = 0;
    Matrix w1;               // n_hidden x n_inputs
    std::vector<double> b1;  // n_hidden
    std::vector<double> w2;  // n_hidden, single output neuron
    double b2 = 0.0;
    MinMaxScaler input_scaler;   // n_inputs columns
    MinMaxScaler target_scaler;  // 1 column
};

int param_count(const NeuralModel& m);

// Canonical parameter order: w1 row-major, b1, w2, b2.
std::vector<double> pack_params(const NeuralModel& m);
void unpack_params(NeuralModel& m, std::span<const double> params);

// Weights and biases uniform in [-init_range, +init_range], seeded.
NeuralModel init_network(int n_inputs, int n_hidden, std::uint64_t seed, double init_range);

// Scaled-space evaluation: w2 . tanh(w1 x + b1) + b2
double forward(const NeuralModel& m, std::span<const double> x_scaled);

double sse(const NeuralModel& m, const Matrix& x_scaled, std::span<const double> y_scaled);

// Analytic gradient of sum_i (y_i - yhat_i)^2 in canonical parameter order.
std::vector<double> sse_gradient(const NeuralModel& m, const Matrix& x_scaled,
                                 std::span<const double> y_scaled);

// One damped Gauss-Newton trial step: solve (J^T J + lambda I) d = J^T r
// with J = d yhat / d theta and r = y - yhat.
std::vector<double> lm_trial_step(const NeuralModel& m, const Matrix& x_scaled,
                                  std::span<const double> y_scaled, double lambda);

class TrainingError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class StopReason { max_epochs, early_stopping, lambda_overflow, gradient_converged };

std::string to_string(StopReason reason);

struct EpochStats {
    int epoch = 0;
    double train_sse = 0.0;
    double validation_sse = 0.0;
    double lambda = 0.0;   // LM damping used this epoch; 0 for delta rule
    bool accepted = true;  // LM step acceptance; always true for delta rule
};

struct TrainResult {
    NeuralModel model;  // best-validation snapshot
    std::vector<EpochStats> history;
    StopReason stop_reason = StopReason::max_epochs;
    int best_epoch = 0;
    double best_validation_sse = 0.0;
    double final_train_sse = 0.0;
};

// Both trainers expect model scalers already fitted on the training table
// and stop at max_epochs or when validation SSE stalls for `patience` epochs.
TrainResult train_delta_rule(const NeuralModel& initial, const FeatureTable& train,
                             const FeatureTable& validation, const TrainConfig& cfg);
TrainResult train_lm(const NeuralModel& initial, const FeatureTable& train,
                     const FeatureTable& validation, const TrainConfig& cfg);

// init_network + scaler fit on train + dispatch on cfg.optimizer
TrainResult train_network(const FeatureTable& train, const FeatureTable& validation,
                          int n_hidden, const TrainConfig& cfg);

// Raw physical units in, raw physical units out.
std::vector<double> predict_nn(const NeuralModel& m, const Matrix& x_raw);

}  // namespace swv
