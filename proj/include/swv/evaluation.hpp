#pragma once
// Goodness-of-fit metrics plus the comparison harness that fits a set of
// predictor methods on one scenario split and scores them on held-out rows.

#include <span>
#include <string>
#include <vector>

#include "swv/conditioning.hpp"
#include "swv/neuralnet.hpp"
#include "swv/predictor.hpp"

namespace swv {

// 1 - SS_res / SS_tot. Throws on length mismatch, empty input or constant
// actual (zero variance denominator).
double r_squared(std::span<const double> actual, std::span<const double> predicted);

// Mean of 100 * |actual - predicted| / actual. Throws when any actual is 0.
double aapre(std::span<const double> actual, std::span<const double> predicted);

struct GuardedAapre {
    double percent = 0.0;
    std::size_t n_used = 0;
    std::size_t n_excluded = 0;  // rows with actual <= the guard threshold
};

// As aapre, but rows with actual <= min_actual are excluded and counted
// instead of raising. Throws only when no row survives the guard.
GuardedAapre aapre_guarded(std::span<const double> actual, std::span<const double> predicted,
                           double min_actual = 1e-6);

struct MethodSpec {
    std::string name;  // lr_single | mlr | ann_single | ann_multi (free-form allowed)
    bool is_neural = false;
    std::vector<std::string> features;  // subset of the split's feature names
    int n_hidden = 4;                   // neural only
    TrainConfig train;                  // neural only; seed already derived per method
};

struct EvalReport {
    ScenarioKind scenario = ScenarioKind::known_interval;
    std::string method;
    double r_squared = 0.0;
    double aapre_percent = 0.0;
    std::size_t n_samples = 0;   // rows scored
    std::size_t n_excluded = 0;  // AAPRE guard exclusions
    std::vector<double> depth;   // test rows, for plot-ready output
    std::vector<double> actual;
    std::vector<double> predicted;
    std::string error;  // fit failure message; empty on success

    bool ok() const { return error.empty(); }
};

struct ScenarioEvaluation {
    std::vector<EvalReport> reports;      // one per method, input order
    std::vector<PredictorModel> models;   // successful fits only
};

// Fits every method on split.train (neural methods stop on split.validation),
// predicts split.test and scores both metrics. A failing method yields a
// report carrying the error; the others still run. Audits that no test row
// (well, depth) ever appears in train or validation.
ScenarioEvaluation run_scenario(const ScenarioSplit& split,
                                const std::vector<MethodSpec>& methods);

struct ComparisonRow {
    ScenarioKind scenario = ScenarioKind::known_interval;
    std::string method;
    double r_squared = 0.0;
    double aapre_percent = 0.0;
    int rank = 0;  // 1 = best within the scenario
    bool best = false;
};

struct ComparisonTable {
    std::vector<ComparisonRow> rows;
};

// Groups by scenario, ranks by R^2 descending with ties broken by lower
// AAPRE then method name, and marks each scenario's rank-1 row.
ComparisonTable compare_methods(const std::vector<EvalReport>& reports);

struct ScreenResult {
    std::string feature;
    double train_r_squared = 0.0;
};

// One-feature OLS per candidate, scored on the same training rows, sorted
// by descending train R^2 (ties by name).
std::vector<ScreenResult> screen_single_features(const FeatureTable& train,
                                                 const std::vector<std::string>& candidates);

}  // namespace swv
