#include "swv/evaluation.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <utility>

#include "swv/regression.hpp"

namespace swv {

namespace {

void check_lengths(std::span<const double> actual, std::span<const double> predicted,
                   const char* what) {
    if (actual.empty()) throw std::invalid_argument(std::string(what) + ": empty input");
    if (actual.size() != predicted.size()) {
        throw std::invalid_argument(std::string(what) + ": " + std::to_string(actual.size()) +
                                    " actual vs " + std::to_string(predicted.size()) +
                                    " predicted values");
    }
}

// No (well, depth) pair may occur in two parts of one split.
void audit_disjoint(const ScenarioSplit& split) {
    std::set<std::pair<std::string, double>> seen;
    auto add_part = [&seen](const FeatureTable& part, const char* label) {
        for (std::size_t i = 0; i < part.n_rows(); ++i) {
            if (!seen.emplace(part.provenance.well_name, part.depth[i]).second) {
                throw std::logic_error(std::string("scenario split leaks a row into the ") +
                                       label + " part at depth " +
                                       std::to_string(part.depth[i]));
            }
        }
    };
    add_part(split.train, "train");
    add_part(split.validation, "validation");
    add_part(split.test, "test");
}

PredictorModel fit_method(const MethodSpec& spec, const FeatureTable& train,
                          const FeatureTable& validation) {
    PredictorModel model;
    model.method = spec.name;
    model.feature_names = train.feature_names;
    if (spec.is_neural) {
        TrainResult result = train_network(train, validation, spec.n_hidden, spec.train);
        model.seed = spec.train.seed;
        model.epochs_run = static_cast<int>(result.history.size());
        model.final_sse = result.final_train_sse;
        model.stop_reason = to_string(result.stop_reason);
        model.impl = std::move(result.model);
    } else {
        LinearModel linear = fit_ols(train);
        const std::vector<double> fitted = predict_linear(linear, train.x);
        double sse = 0.0;
        for (std::size_t i = 0; i < fitted.size(); ++i) {
            const double e = train.y[i] - fitted[i];
            sse += e * e;
        }
        model.final_sse = sse;
        model.stop_reason = "direct_solve";
        model.impl = std::move(linear);
    }
    return model;
}

}  // namespace

double r_squared(std::span<const double> actual, std::span<const double> predicted) {
    check_lengths(actual, predicted, "r_squared");
    double mean = 0.0;
    for (double a : actual) mean += a;
    mean /= static_cast<double>(actual.size());
    double ss_res = 0.0;
    double ss_tot = 0.0;
    for (std::size_t i = 0; i < actual.size(); ++i) {
        const double r = actual[i] - predicted[i];
        const double d = actual[i] - mean;
        ss_res += r * r;
        ss_tot += d * d;
    }
    if (ss_tot == 0.0) {
        throw std::domain_error("r_squared: actual values are constant (zero variance)");
    }
    return 1.0 - ss_res / ss_tot;
}

double aapre(std::span<const double> actual, std::span<const double> predicted) {
    check_lengths(actual, predicted, "aapre");
    double sum = 0.0;
    for (std::size_t i = 0; i < actual.size(); ++i) {
        if (actual[i] == 0.0) {
            throw std::domain_error("aapre: actual value is zero at index " + std::to_string(i));
        }
        sum += std::abs(actual[i] - predicted[i]) / actual[i];
    }
    return 100.0 * sum / static_cast<double>(actual.size());
}

GuardedAapre aapre_guarded(std::span<const double> actual, std::span<const double> predicted,
                           double min_actual) {
    check_lengths(actual, predicted, "aapre_guarded");
    GuardedAapre out;
    double sum = 0.0;
    for (std::size_t i = 0; i < actual.size(); ++i) {
        if (actual[i] <= min_actual) {
            ++out.n_excluded;
            continue;
        }
        sum += std::abs(actual[i] - predicted[i]) / actual[i];
        ++out.n_used;
    }
    if (out.n_used == 0) {
        throw std::domain_error("aapre_guarded: no actual value exceeds the guard threshold");
    }
    out.percent = 100.0 * sum / static_cast<double>(out.n_used);
    return out;
}

ScenarioEvaluation run_scenario(const ScenarioSplit& split,
                                const std::vector<MethodSpec>& methods) {
    audit_disjoint(split);
    ScenarioEvaluation out;
    out.reports.reserve(methods.size());
    for (const MethodSpec& spec : methods) {
        EvalReport report;
        report.scenario = split.kind;
        report.method = spec.name;
        try {
            const FeatureTable train = select_features(split.train, spec.features);
            const FeatureTable validation = select_features(split.validation, spec.features);
            const FeatureTable test = select_features(split.test, spec.features);

            PredictorModel model = fit_method(spec, train, validation);
            const std::vector<double> predicted = predict(model, test.x);

            report.depth = test.depth;
            report.actual = test.y;
            report.predicted = predicted;
            report.r_squared = r_squared(test.y, predicted);
            const GuardedAapre g = aapre_guarded(test.y, predicted);
            report.aapre_percent = g.percent;
            report.n_samples = g.n_used;
            report.n_excluded = g.n_excluded;
            out.models.push_back(std::move(model));
        } catch (const std::exception& e) {
            report.error = e.what();
            report.depth.clear();
            report.actual.clear();
            report.predicted.clear();
        }
        out.reports.push_back(std::move(report));
    }
    return out;
}

ComparisonTable compare_methods(const std::vector<EvalReport>& reports) {
    if (reports.empty()) throw std::invalid_argument("compare_methods: no reports");
    ComparisonTable table;
    for (ScenarioKind kind : {ScenarioKind::known_interval,
                              ScenarioKind::unknown_interval_same_well,
                              ScenarioKind::different_well}) {
        std::vector<ComparisonRow> group;
        for (const EvalReport& r : reports) {
            if (r.scenario != kind || !r.ok()) continue;
            group.push_back({r.scenario, r.method, r.r_squared, r.aapre_percent, 0, false});
        }
        std::sort(group.begin(), group.end(), [](const ComparisonRow& a, const ComparisonRow& b) {
            if (a.r_squared != b.r_squared) return a.r_squared > b.r_squared;
            if (a.aapre_percent != b.aapre_percent) return a.aapre_percent < b.aapre_percent;
            return a.method < b.method;
        });
        for (std::size_t i = 0; i < group.size(); ++i) {
            group[i].rank = static_cast<int>(i + 1);
            group[i].best = i == 0;
        }
        table.rows.insert(table.rows.end(), group.begin(), group.end());
    }
    return table;
}

std::vector<ScreenResult> screen_single_features(const FeatureTable& train,
                                                 const std::vector<std::string>& candidates) {
    if (candidates.empty()) {
        throw std::invalid_argument("screen_single_features: no candidate features");
    }
    std::vector<ScreenResult> out;
    out.reserve(candidates.size());
    for (const std::string& name : candidates) {
        const FeatureTable sub = select_features(train, {name});
        const LinearModel model = fit_ols(sub);
        const std::vector<double> fitted = predict_linear(model, sub.x);
        out.push_back({sub.feature_names.front(), r_squared(sub.y, fitted)});
    }
    std::sort(out.begin(), out.end(), [](const ScreenResult& a, const ScreenResult& b) {
        if (a.train_r_squared != b.train_r_squared) return a.train_r_squared > b.train_r_squared;
        return a.feature < b.feature;
    });
    return out;
}

}  // namespace swv
