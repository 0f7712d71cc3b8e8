// Goodness-of-fit metrics, the per-scenario comparison harness, split leak
// auditing, ranking, and single-feature screening.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "oracle_helpers.hpp"
#include "swv/evaluation.hpp"

using namespace swv;

namespace {

FeatureTable make_table(const std::string& well, double depth0, const Matrix& x,
                        std::vector<double> y, std::vector<std::string> names) {
    FeatureTable t;
    t.x = x;
    t.y = std::move(y);
    t.feature_names = std::move(names);
    for (std::size_t i = 0; i < x.rows(); ++i) {
        t.depth.push_back(depth0 + 0.5 * static_cast<double>(i));
    }
    t.provenance = {well, t.depth.front(), t.depth.back()};
    return t;
}

// Rows obeying y = 2 + a + 0.5 b exactly, so a linear fit is perfect.
FeatureTable linear_rows(const std::string& well, double depth0, std::size_t n,
                         std::uint64_t seed) {
    oracle::Rng rng(seed);
    Matrix x(n, 2);
    std::vector<double> y(n);
    for (std::size_t i = 0; i < n; ++i) {
        x(i, 0) = rng.uniform(0.0, 1.0);
        x(i, 1) = rng.uniform(0.0, 1.0);
        y[i] = 2.0 + x(i, 0) + 0.5 * x(i, 1);
    }
    return make_table(well, depth0, x, std::move(y), {"A", "B"});
}

EvalReport report_of(ScenarioKind kind, const std::string& method, double r2, double ap,
                     const std::string& error = "") {
    EvalReport r;
    r.scenario = kind;
    r.method = method;
    r.r_squared = r2;
    r.aapre_percent = ap;
    r.error = error;
    return r;
}

}  // namespace

TEST_CASE("r_squared matches the hand-computed value and rejects bad input") {
    const std::vector<double> actual{1.0, 2.0, 3.0};
    const std::vector<double> predicted{1.1, 1.9, 3.2};
    // ss_res = 0.01 + 0.01 + 0.04 = 0.06, ss_tot = 2
    CHECK(r_squared(actual, predicted) == doctest::Approx(0.97).epsilon(1e-12));
    CHECK(r_squared(actual, actual) == 1.0);
    CHECK_THROWS_AS(r_squared({}, {}), std::invalid_argument);
    CHECK_THROWS_AS(r_squared(actual, std::vector<double>{1.0, 2.0}), std::invalid_argument);
    CHECK_THROWS_AS(r_squared(std::vector<double>{2.0, 2.0, 2.0}, actual), std::domain_error);
}

TEST_CASE("aapre averages absolute relative errors in percent") {
    const std::vector<double> actual{1.0, 2.0, 4.0};
    const std::vector<double> predicted{1.1, 1.8, 4.4};
    CHECK(aapre(actual, predicted) == doctest::Approx(10.0).epsilon(1e-12));
    CHECK(aapre(actual, actual) == 0.0);
    CHECK_THROWS_AS(aapre(std::vector<double>{1.0, 0.0}, std::vector<double>{1.0, 1.0}),
                    std::domain_error);
    CHECK_THROWS_AS(aapre({}, {}), std::invalid_argument);
}

TEST_CASE("aapre_guarded excludes near-zero actuals instead of raising") {
    const std::vector<double> actual{0.0, 2.0, 4.0};
    const std::vector<double> predicted{5.0, 1.8, 4.4};
    const GuardedAapre g = aapre_guarded(actual, predicted);
    CHECK(g.percent == doctest::Approx(10.0).epsilon(1e-12));
    CHECK(g.n_used == 2);
    CHECK(g.n_excluded == 1);

    // The threshold is inclusive.
    const GuardedAapre h = aapre_guarded(std::vector<double>{0.5, 2.0},
                                         std::vector<double>{0.55, 1.8}, 0.5);
    CHECK(h.n_used == 1);
    CHECK(h.n_excluded == 1);
    CHECK(h.percent == doctest::Approx(10.0).epsilon(1e-12));

    CHECK_THROWS_AS(aapre_guarded(std::vector<double>{0.0, 1e-7}, std::vector<double>{1.0, 1.0}),
                    std::domain_error);
}

TEST_CASE("run_scenario scores each method and isolates failures") {
    ScenarioSplit split;
    split.kind = ScenarioKind::known_interval;
    split.train = linear_rows("W", 100.0, 30, 11);
    split.validation = linear_rows("W", 200.0, 10, 12);
    split.test = linear_rows("W", 300.0, 10, 13);

    MethodSpec mlr;
    mlr.name = "mlr";
    mlr.features = {"A", "B"};

    MethodSpec ann;
    ann.name = "ann";
    ann.is_neural = true;
    ann.features = {"A", "B"};
    ann.n_hidden = 2;
    ann.train.max_epochs = 40;
    ann.train.seed = 9;

    MethodSpec bad;
    bad.name = "bad";
    bad.features = {"A", "MISSING"};

    const ScenarioEvaluation eval = run_scenario(split, {mlr, ann, bad});
    REQUIRE(eval.reports.size() == 3);
    CHECK(eval.models.size() == 2);  // the failing method leaves no model

    const EvalReport& r0 = eval.reports[0];
    CHECK(r0.ok());
    CHECK(r0.method == "mlr");
    CHECK(r0.scenario == ScenarioKind::known_interval);
    CHECK(r0.n_samples == 10);
    CHECK(r0.n_excluded == 0);
    CHECK(r0.depth == split.test.depth);
    CHECK(r0.actual == split.test.y);
    REQUIRE(r0.predicted.size() == 10);
    CHECK(r0.r_squared == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(r0.aapre_percent == doctest::Approx(0.0).scale(1.0).epsilon(1e-7));

    const EvalReport& r1 = eval.reports[1];
    CHECK(r1.ok());
    CHECK(r1.method == "ann");
    CHECK(r1.n_samples == 10);
    CHECK(std::isfinite(r1.r_squared));

    const EvalReport& r2 = eval.reports[2];
    CHECK_FALSE(r2.ok());
    CHECK(r2.method == "bad");
    CHECK(!r2.error.empty());
    CHECK(r2.predicted.empty());
    CHECK(r2.depth.empty());

    CHECK(eval.models[0].method == "mlr");
    CHECK(eval.models[0].stop_reason == "direct_solve");
    CHECK(eval.models[1].method == "ann");
    CHECK(eval.models[1].is_neural());
    CHECK(eval.models[1].seed == 9);
}

TEST_CASE("run_scenario refuses a split whose parts share a row") {
    ScenarioSplit split;
    split.kind = ScenarioKind::unknown_interval_same_well;
    split.train = linear_rows("W", 100.0, 5, 21);
    split.validation = linear_rows("W", 200.0, 5, 22);
    split.test = linear_rows("W", 102.0, 5, 23);  // depth 102 also sits in train
    CHECK_THROWS_AS(run_scenario(split, {}), std::logic_error);

    // The same depths on a different well are fine: rows are keyed by
    // (well, depth), not depth alone.
    split.test = linear_rows("X", 102.0, 5, 23);
    CHECK_NOTHROW(run_scenario(split, {}));
}

TEST_CASE("compare_methods ranks within scenario groups") {
    std::vector<EvalReport> reports;
    // Deliberately scrambled input order across scenarios.
    reports.push_back(report_of(ScenarioKind::different_well, "mlr", 0.80, 6.0));
    reports.push_back(report_of(ScenarioKind::known_interval, "lr_single", 0.90, 5.0));
    reports.push_back(report_of(ScenarioKind::known_interval, "ann_multi", 0.97, 2.0));
    reports.push_back(report_of(ScenarioKind::different_well, "ann_multi", 0.85, 5.0));
    reports.push_back(report_of(ScenarioKind::known_interval, "mlr", 0.97, 3.0));
    reports.push_back(report_of(ScenarioKind::known_interval, "broken", 0.0, 0.0, "fit failed"));

    const ComparisonTable table = compare_methods(reports);
    REQUIRE(table.rows.size() == 5);  // the failed report is skipped

    // known_interval group first: tie on R^2 broken by lower AAPRE.
    CHECK(table.rows[0].scenario == ScenarioKind::known_interval);
    CHECK(table.rows[0].method == "ann_multi");
    CHECK(table.rows[0].rank == 1);
    CHECK(table.rows[0].best);
    CHECK(table.rows[1].method == "mlr");
    CHECK(table.rows[1].rank == 2);
    CHECK_FALSE(table.rows[1].best);
    CHECK(table.rows[2].method == "lr_single");
    CHECK(table.rows[2].rank == 3);

    // different_well group afterwards with its own rank sequence.
    CHECK(table.rows[3].scenario == ScenarioKind::different_well);
    CHECK(table.rows[3].method == "ann_multi");
    CHECK(table.rows[3].rank == 1);
    CHECK(table.rows[3].best);
    CHECK(table.rows[4].method == "mlr");
    CHECK(table.rows[4].rank == 2);

    CHECK_THROWS_AS(compare_methods({}), std::invalid_argument);
}

TEST_CASE("compare_methods breaks full ties by method name") {
    std::vector<EvalReport> reports;
    reports.push_back(report_of(ScenarioKind::known_interval, "zeta", 0.9, 4.0));
    reports.push_back(report_of(ScenarioKind::known_interval, "alpha", 0.9, 4.0));
    const ComparisonTable table = compare_methods(reports);
    REQUIRE(table.rows.size() == 2);
    CHECK(table.rows[0].method == "alpha");
    CHECK(table.rows[1].method == "zeta");
}

TEST_CASE("screen_single_features orders candidates by training fit") {
    oracle::Rng rng(77);
    const std::size_t n = 60;
    Matrix x(n, 3);
    std::vector<double> y(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double a = rng.uniform(0.0, 1.0);
        x(i, 0) = a;
        y[i] = 1.0 + 2.0 * a;                       // A explains y exactly
        x(i, 1) = y[i] + rng.uniform(-0.8, 0.8);    // B is a noisy proxy
        x(i, 2) = rng.uniform(0.0, 1.0);            // C is unrelated
    }
    const FeatureTable train = make_table("W", 100.0, x, std::move(y), {"A", "B", "C"});

    const std::vector<ScreenResult> ranked = screen_single_features(train, {"C", "B", "A"});
    REQUIRE(ranked.size() == 3);
    CHECK(ranked[0].feature == "A");
    CHECK(ranked[0].train_r_squared == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(ranked[1].feature == "B");
    CHECK(ranked[2].feature == "C");
    CHECK(ranked[1].train_r_squared > ranked[2].train_r_squared);
    CHECK(ranked[2].train_r_squared < 0.2);

    // The middle score agrees with an independently fitted one-feature OLS.
    Matrix xb(n, 1);
    for (std::size_t i = 0; i < n; ++i) xb(i, 0) = train.x(i, 1);
    const std::vector<double> beta = oracle::ols_normal_equations(xb, train.y);
    std::vector<double> fitted(n);
    for (std::size_t i = 0; i < n; ++i) fitted[i] = beta[0] + beta[1] * xb(i, 0);
    CHECK(ranked[1].train_r_squared ==
          doctest::Approx(r_squared(train.y, fitted)).epsilon(1e-10));

    CHECK_THROWS_AS(screen_single_features(train, {}), std::invalid_argument);
}
