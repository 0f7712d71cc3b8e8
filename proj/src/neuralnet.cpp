#include "swv/neuralnet.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>

#include "swv/util.hpp"

namespace swv {

namespace {

// Infinity-norm threshold on J^T r below which LM declares convergence.
constexpr double kLmGradientTol = 1e-12;

struct ForwardCache {
    std::vector<double> hidden;  // tanh activations
    double yhat = 0.0;
};

void forward_cached(const NeuralModel& m, std::span<const double> x, ForwardCache& cache) {
    cache.hidden.resize(static_cast<std::size_t>(m.n_hidden));
    double out = m.b2;
    for (int k = 0; k < m.n_hidden; ++k) {
        double a = m.b1[static_cast<std::size_t>(k)];
        for (int j = 0; j < m.n_inputs; ++j) {
            a += m.w1(static_cast<std::size_t>(k), static_cast<std::size_t>(j)) *
                 x[static_cast<std::size_t>(j)];
        }
        const double h = std::tanh(a);
        cache.hidden[static_cast<std::size_t>(k)] = h;
        out += m.w2[static_cast<std::size_t>(k)] * h;
    }
    cache.yhat = out;
}

void check_shapes(const NeuralModel& m, const Matrix& x, std::span<const double> y,
                  const char* what) {
    if (x.cols() != static_cast<std::size_t>(m.n_inputs)) {
        throw std::invalid_argument(std::string(what) + ": expected " +
                                    std::to_string(m.n_inputs) + " input columns, got " +
                                    std::to_string(x.cols()));
    }
    if (x.rows() != y.size()) {
        throw std::invalid_argument(std::string(what) + ": " + std::to_string(x.rows()) +
                                    " rows but " + std::to_string(y.size()) + " targets");
    }
}

// Row of d(yhat)/d(theta) for one sample, in canonical parameter order.
void jacobian_row(const NeuralModel& m, std::span<const double> x, const ForwardCache& cache,
                  std::vector<double>& row) {
    const auto nh = static_cast<std::size_t>(m.n_hidden);
    const auto ni = static_cast<std::size_t>(m.n_inputs);
    row.resize(nh * ni + nh + nh + 1);
    for (std::size_t k = 0; k < nh; ++k) {
        const double h = cache.hidden[k];
        const double back = m.w2[k] * (1.0 - h * h);  // d yhat / d a_k
        for (std::size_t j = 0; j < ni; ++j) {
            row[k * ni + j] = back * x[j];  // w1
        }
        row[nh * ni + k] = back;          // b1
        row[nh * ni + nh + k] = h;        // w2
    }
    row[nh * ni + nh + nh] = 1.0;  // b2
}

// Accumulates J^T J (symmetric full storage) and J^T r over all samples.
void normal_system(const NeuralModel& m, const Matrix& x, std::span<const double> y, Matrix& jtj,
                   std::vector<double>& jtr) {
    const auto p = static_cast<std::size_t>(param_count(m));
    jtj = Matrix(p, p);
    jtr.assign(p, 0.0);
    ForwardCache cache;
    std::vector<double> row;
    for (std::size_t i = 0; i < x.rows(); ++i) {
        forward_cached(m, x.row(i), cache);
        jacobian_row(m, x.row(i), cache, row);
        const double r = y[i] - cache.yhat;
        for (std::size_t a = 0; a < p; ++a) {
            jtr[a] += row[a] * r;
            for (std::size_t b = a; b < p; ++b) {
                jtj(a, b) += row[a] * row[b];
            }
        }
    }
    for (std::size_t a = 0; a < p; ++a) {
        for (std::size_t b = 0; b < a; ++b) {
            jtj(a, b) = jtj(b, a);
        }
    }
}

struct ScaledData {
    Matrix x;
    std::vector<double> y;
};

ScaledData scale_table(const NeuralModel& m, const FeatureTable& table, const char* what) {
    check_shapes(m, table.x, table.y, what);
    return {m.input_scaler.apply(table.x), m.target_scaler.apply(table.y)};
}

// Shared validation-driven bookkeeping for both trainers.
struct EarlyStopper {
    NeuralModel best;
    double best_val;
    int best_epoch = 0;
    int stalled = 0;

    EarlyStopper(const NeuralModel& initial, double initial_val)
        : best(initial), best_val(initial_val) {}

    // Returns true when patience is exhausted.
    bool observe(const NeuralModel& current, double val, int epoch, int patience) {
        if (val < best_val) {
            best = current;
            best_val = val;
            best_epoch = epoch;
            stalled = 0;
        } else {
            ++stalled;
        }
        return stalled >= patience;
    }
};

TrainResult finish(EarlyStopper&& stopper, std::vector<EpochStats>&& history, StopReason reason,
                   const Matrix& train_x, std::span<const double> train_y) {
    TrainResult result;
    result.model = std::move(stopper.best);
    result.history = std::move(history);
    result.stop_reason = reason;
    result.best_epoch = stopper.best_epoch;
    result.best_validation_sse = stopper.best_val;
    result.final_train_sse = sse(result.model, train_x, train_y);
    return result;
}

}  // namespace

std::string to_string(Optimizer opt) {
    switch (opt) {
        case Optimizer::delta_rule:
            return "delta_rule";
        case Optimizer::levenberg_marquardt:
            return "levenberg_marquardt";
    }
    throw std::logic_error("unknown optimizer enum value");
}

Optimizer optimizer_from_string(const std::string& name) {
    if (name == "delta_rule") return Optimizer::delta_rule;
    if (name == "levenberg_marquardt") return Optimizer::levenberg_marquardt;
    throw std::invalid_argument("unknown optimizer '" + name +
                                "' (expected delta_rule or levenberg_marquardt)");
}

std::string to_string(StopReason reason) {
    switch (reason) {
        case StopReason::max_epochs:
            return "max_epochs";
        case StopReason::early_stopping:
            return "early_stopping";
        case StopReason::lambda_overflow:
            return "lambda_overflow";
        case StopReason::gradient_converged:
            return "gradient_converged";
    }
    throw std::logic_error("unknown stop reason enum value");
}

void validate_train_config(const TrainConfig& cfg) {
    if (!(cfg.learning_rate >= 0.0)) {
        throw std::invalid_argument("learning_rate must be non-negative");
    }
    if (cfg.max_epochs < 1) {
        throw std::invalid_argument("max_epochs must be at least 1");
    }
    if (!(cfg.lm_lambda0 > 0.0) || !(cfg.lm_lambda_up > 1.0) || !(cfg.lm_lambda_down > 0.0) ||
        !(cfg.lm_lambda_down < 1.0) || !(cfg.lm_lambda_max > cfg.lm_lambda0)) {
        throw std::invalid_argument(
            "LM damping schedule requires lambda0 > 0, up > 1, 0 < down < 1, "
            "lambda_max > lambda0");
    }
    if (cfg.patience < 1) {
        throw std::invalid_argument("patience must be at least 1");
    }
    if (!(cfg.init_range > 0.0)) {
        throw std::invalid_argument("init_range must be positive");
    }
}

int param_count(const NeuralModel& m) { return m.n_hidden * (m.n_inputs + 2) + 1; }

std::vector<double> pack_params(const NeuralModel& m) {
    std::vector<double> params;
    params.reserve(static_cast<std::size_t>(param_count(m)));
    params.insert(params.end(), m.w1.data(), m.w1.data() + m.w1.rows() * m.w1.cols());
    params.insert(params.end(), m.b1.begin(), m.b1.end());
    params.insert(params.end(), m.w2.begin(), m.w2.end());
    params.push_back(m.b2);
    return params;
}

void unpack_params(NeuralModel& m, std::span<const double> params) {
    const auto expected = static_cast<std::size_t>(param_count(m));
    if (params.size() != expected) {
        throw std::invalid_argument("expected " + std::to_string(expected) + " parameters, got " +
                                    std::to_string(params.size()));
    }
    const auto nh = static_cast<std::size_t>(m.n_hidden);
    const auto ni = static_cast<std::size_t>(m.n_inputs);
    std::copy_n(params.begin(), nh * ni, m.w1.data());
    std::copy_n(params.begin() + static_cast<std::ptrdiff_t>(nh * ni), nh, m.b1.begin());
    std::copy_n(params.begin() + static_cast<std::ptrdiff_t>(nh * ni + nh), nh, m.w2.begin());
    m.b2 = params[nh * ni + nh + nh];
}

NeuralModel init_network(int n_inputs, int n_hidden, std::uint64_t seed, double init_range) {
    if (n_inputs < 1 || n_hidden < 1) {
        throw std::invalid_argument("network needs at least one input and one hidden neuron");
    }
    NeuralModel m;
    m.n_inputs = n_inputs;
    m.n_hidden = n_hidden;
    m.w1 = Matrix(static_cast<std::size_t>(n_hidden), static_cast<std::size_t>(n_inputs));
    m.b1.resize(static_cast<std::size_t>(n_hidden));
    m.w2.resize(static_cast<std::size_t>(n_hidden));
    Rng rng(seed);
    std::vector<double> params(static_cast<std::size_t>(param_count(m)));
    for (double& p : params) {
        p = rng.uniform(-init_range, init_range);
    }
    unpack_params(m, params);
    return m;
}

double forward(const NeuralModel& m, std::span<const double> x_scaled) {
    if (x_scaled.size() != static_cast<std::size_t>(m.n_inputs)) {
        throw std::invalid_argument("expected " + std::to_string(m.n_inputs) + " inputs, got " +
                                    std::to_string(x_scaled.size()));
    }
    ForwardCache cache;
    forward_cached(m, x_scaled, cache);
    return cache.yhat;
}

double sse(const NeuralModel& m, const Matrix& x_scaled, std::span<const double> y_scaled) {
    check_shapes(m, x_scaled, y_scaled, "sse");
    ForwardCache cache;
    double total = 0.0;
    for (std::size_t i = 0; i < x_scaled.rows(); ++i) {
        forward_cached(m, x_scaled.row(i), cache);
        const double e = y_scaled[i] - cache.yhat;
        total += e * e;
    }
    return total;
}

std::vector<double> sse_gradient(const NeuralModel& m, const Matrix& x_scaled,
                                 std::span<const double> y_scaled) {
    check_shapes(m, x_scaled, y_scaled, "sse_gradient");
    // dE/d theta = sum_i -2 e_i * d yhat_i / d theta
    Matrix jtj;
    std::vector<double> grad;
    normal_system(m, x_scaled, y_scaled, jtj, grad);
    for (double& g : grad) {
        g *= -2.0;
    }
    return grad;
}

std::vector<double> lm_trial_step(const NeuralModel& m, const Matrix& x_scaled,
                                  std::span<const double> y_scaled, double lambda) {
    check_shapes(m, x_scaled, y_scaled, "lm_trial_step");
    if (!(lambda > 0.0)) {
        throw std::invalid_argument("LM damping must be positive");
    }
    Matrix jtj;
    std::vector<double> jtr;
    normal_system(m, x_scaled, y_scaled, jtj, jtr);
    for (std::size_t a = 0; a < jtj.rows(); ++a) {
        jtj(a, a) += lambda;
    }
    try {
        return solve_spd(jtj, jtr);
    } catch (const std::runtime_error& e) {
        throw TrainingError(std::string("damped normal system is singular: ") + e.what());
    }
}

TrainResult train_delta_rule(const NeuralModel& initial, const FeatureTable& train,
                             const FeatureTable& validation, const TrainConfig& cfg) {
    validate_train_config(cfg);
    if (train.x.rows() == 0 || validation.x.rows() == 0) {
        throw std::invalid_argument("training and validation tables must be non-empty");
    }
    const ScaledData tr = scale_table(initial, train, "train");
    const ScaledData va = scale_table(initial, validation, "validation");

    NeuralModel model = initial;
    const double alpha = cfg.learning_rate;
    EarlyStopper stopper(model, sse(model, va.x, va.y));
    std::vector<EpochStats> history;
    history.reserve(static_cast<std::size_t>(cfg.max_epochs));
    StopReason reason = StopReason::max_epochs;

    ForwardCache cache;
    const auto nh = static_cast<std::size_t>(model.n_hidden);
    const auto ni = static_cast<std::size_t>(model.n_inputs);
    for (int epoch = 1; epoch <= cfg.max_epochs; ++epoch) {
        // One online pass in fixed sample order; deltas use pre-update weights.
        for (std::size_t i = 0; i < tr.x.rows(); ++i) {
            const auto x = tr.x.row(i);
            forward_cached(model, x, cache);
            const double delta2 = tr.y[i] - cache.yhat;  // identity output activation
            for (std::size_t k = 0; k < nh; ++k) {
                const double h = cache.hidden[k];
                const double delta1 = (1.0 - h * h) * model.w2[k] * delta2;
                model.w2[k] += alpha * delta2 * h;
                for (std::size_t j = 0; j < ni; ++j) {
                    model.w1(k, j) += alpha * delta1 * x[j];
                }
                model.b1[k] += alpha * delta1;
            }
            model.b2 += alpha * delta2;
        }

        const double train_sse = sse(model, tr.x, tr.y);
        if (!std::isfinite(train_sse)) {
            throw TrainingError("delta-rule training diverged at epoch " + std::to_string(epoch) +
                                " (non-finite SSE)");
        }
        const double val_sse = sse(model, va.x, va.y);
        history.push_back({epoch, train_sse, val_sse, 0.0, true});
        if (stopper.observe(model, val_sse, epoch, cfg.patience)) {
            reason = StopReason::early_stopping;
            break;
        }
    }
    return finish(std::move(stopper), std::move(history), reason, tr.x, tr.y);
}

TrainResult train_lm(const NeuralModel& initial, const FeatureTable& train,
                     const FeatureTable& validation, const TrainConfig& cfg) {
    validate_train_config(cfg);
    if (train.x.rows() == 0 || validation.x.rows() == 0) {
        throw std::invalid_argument("training and validation tables must be non-empty");
    }
    const ScaledData tr = scale_table(initial, train, "train");
    const ScaledData va = scale_table(initial, validation, "validation");

    NeuralModel model = initial;
    double current_sse = sse(model, tr.x, tr.y);
    if (!std::isfinite(current_sse)) {
        throw TrainingError("initial network produces non-finite SSE");
    }
    EarlyStopper stopper(model, sse(model, va.x, va.y));
    std::vector<EpochStats> history;
    history.reserve(static_cast<std::size_t>(cfg.max_epochs));
    StopReason reason = StopReason::max_epochs;

    const auto p = static_cast<std::size_t>(param_count(model));
    double lambda = cfg.lm_lambda0;
    Matrix jtj;
    std::vector<double> jtr;
    for (int epoch = 1; epoch <= cfg.max_epochs; ++epoch) {
        normal_system(model, tr.x, tr.y, jtj, jtr);
        double grad_inf = 0.0;
        for (double g : jtr) {
            grad_inf = std::max(grad_inf, std::abs(g));
        }
        if (grad_inf <= kLmGradientTol) {
            reason = StopReason::gradient_converged;
            break;
        }

        Matrix damped = jtj;
        for (std::size_t a = 0; a < p; ++a) {
            damped(a, a) += lambda;
        }
        std::vector<double> step;
        try {
            step = solve_spd(damped, jtr);
        } catch (const std::runtime_error& e) {
            throw TrainingError("damped normal system is singular at epoch " +
                                std::to_string(epoch) + ": " + e.what());
        }

        NeuralModel candidate = model;
        std::vector<double> params = pack_params(model);
        for (std::size_t a = 0; a < p; ++a) {
            params[a] += step[a];
        }
        unpack_params(candidate, params);
        const double cand_sse = sse(candidate, tr.x, tr.y);

        const double lambda_used = lambda;
        bool accepted = false;
        if (std::isfinite(cand_sse) && cand_sse < current_sse) {
            model = std::move(candidate);
            current_sse = cand_sse;
            lambda *= cfg.lm_lambda_down;
            accepted = true;
        } else {
            lambda *= cfg.lm_lambda_up;
        }

        const double val_sse = sse(model, va.x, va.y);
        history.push_back({epoch, current_sse, val_sse, lambda_used, accepted});
        if (stopper.observe(model, val_sse, epoch, cfg.patience)) {
            reason = StopReason::early_stopping;
            break;
        }
        if (lambda > cfg.lm_lambda_max) {
            reason = StopReason::lambda_overflow;
            break;
        }
    }
    return finish(std::move(stopper), std::move(history), reason, tr.x, tr.y);
}

TrainResult train_network(const FeatureTable& train, const FeatureTable& validation, int n_hidden,
                          const TrainConfig& cfg) {
    validate_train_config(cfg);
    if (train.x.rows() < 2) {
        throw std::invalid_argument("need at least 2 training rows to fit scalers");
    }
    NeuralModel model = init_network(static_cast<int>(train.x.cols()), n_hidden, cfg.seed,
                                     cfg.init_range);
    model.input_scaler = MinMaxScaler::fit(train.x);
    model.target_scaler = MinMaxScaler::fit(std::span<const double>(train.y));
    switch (cfg.optimizer) {
        case Optimizer::delta_rule:
            return train_delta_rule(model, train, validation, cfg);
        case Optimizer::levenberg_marquardt:
            return train_lm(model, train, validation, cfg);
    }
    throw std::logic_error("unknown optimizer enum value");
}

std::vector<double> predict_nn(const NeuralModel& m, const Matrix& x_raw) {
    if (x_raw.cols() != static_cast<std::size_t>(m.n_inputs)) {
        throw std::invalid_argument("expected " + std::to_string(m.n_inputs) +
                                    " feature columns, got " + std::to_string(x_raw.cols()));
    }
    const Matrix x_scaled = m.input_scaler.apply(x_raw);
    std::vector<double> out(x_raw.rows());
    ForwardCache cache;
    for (std::size_t i = 0; i < x_raw.rows(); ++i) {
        forward_cached(m, x_scaled.row(i), cache);
        out[i] = m.target_scaler.invert_value(0, cache.yhat);
    }
    return out;
}

}  // namespace swv
