#include "swv/conditioning.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "swv/util.hpp"

namespace swv {

std::map<std::string, PhysicalRange> default_physical_ranges() {
    return {
        {"RHOB", {1.0, 3.5}},
        {"NPHI", {-0.05, 1.0}},
        {"GR", {0.0, 400.0}},
        {"DT", {40.0, 300.0}},
    };
}

std::map<std::string, std::size_t> screen_physical_ranges(
    WellLog& log, const std::map<std::string, PhysicalRange>& ranges) {
    std::map<std::string, std::size_t> remapped;
    for (Curve& c : log.curves) {
        const std::string mnem = canonical_mnemonic(c.mnemonic);
        const auto it = ranges.find(mnem);
        if (it == ranges.end()) continue;
        std::size_t count = 0;
        for (double& v : c.samples) {
            if (is_missing(v)) continue;
            if (v < it->second.lo || v > it->second.hi) {
                v = std::numeric_limits<double>::quiet_NaN();
                ++count;
            }
        }
        if (count > 0) remapped[mnem] = count;
    }
    return remapped;
}

std::vector<double> condition_curve(const std::vector<double>& samples,
                                    const std::vector<double>& depth, int max_gap) {
    if (samples.size() != depth.size()) {
        throw std::invalid_argument("condition_curve: samples/depth length mismatch");
    }
    if (max_gap < 0) throw std::invalid_argument("condition_curve: max_gap must be >= 0");
    if (std::all_of(samples.begin(), samples.end(), [](double v) { return is_missing(v); })) {
        throw std::invalid_argument("condition_curve: all samples missing");
    }

    std::vector<double> out = samples;
    const std::size_t n = out.size();
    std::size_t i = 0;
    while (i < n) {
        if (!is_missing(out[i])) {
            ++i;
            continue;
        }
        std::size_t j = i;
        while (j < n && is_missing(out[j])) ++j;
        // run [i, j); anchors are i-1 and j
        const bool has_left = i > 0;
        const bool has_right = j < n;
        const std::size_t run = j - i;
        if (has_left && has_right && run <= static_cast<std::size_t>(max_gap)) {
            const double d0 = depth[i - 1], d1 = depth[j];
            const double v0 = out[i - 1], v1 = out[j];
            for (std::size_t k = i; k < j; ++k) {
                const double t = (depth[k] - d0) / (d1 - d0);
                out[k] = v0 + t * (v1 - v0);
            }
        }
        i = j;
    }
    return out;
}

FeatureTable build_feature_table(const WellLog& log,
                                 const std::vector<std::string>& feature_names,
                                 const std::string& target_name) {
    if (feature_names.empty()) {
        throw std::invalid_argument("build_feature_table: empty feature list");
    }

    std::vector<const std::vector<double>*> columns;
    std::vector<std::string> canon_names;
    for (const std::string& name : feature_names) {
        const std::string canon = canonical_mnemonic(name);
        if (canon == "DEPTH") {
            columns.push_back(&log.depth);
        } else {
            const Curve* c = log.find_curve(name);
            if (!c) throw std::invalid_argument("build_feature_table: curve '" + name +
                                                "' not found in well " + log.well_name);
            columns.push_back(&c->samples);
        }
        canon_names.push_back(canon);
    }
    const Curve* target = log.find_curve(target_name);
    if (!target) {
        throw std::invalid_argument("build_feature_table: target curve '" + target_name +
                                    "' not found in well " + log.well_name);
    }

    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < log.depth.size(); ++i) {
        bool ok = !is_missing(target->samples[i]);
        for (const auto* col : columns) ok = ok && !is_missing((*col)[i]);
        if (ok) keep.push_back(i);
    }
    if (keep.empty()) {
        throw std::runtime_error("build_feature_table: no rows survive conditioning in well " +
                                 log.well_name);
    }

    FeatureTable t;
    t.feature_names = canon_names;
    t.x = Matrix(keep.size(), columns.size());
    t.depth.reserve(keep.size());
    t.y.reserve(keep.size());
    for (std::size_t r = 0; r < keep.size(); ++r) {
        const std::size_t i = keep[r];
        t.depth.push_back(log.depth[i]);
        t.y.push_back(target->samples[i]);
        for (std::size_t j = 0; j < columns.size(); ++j) t.x(r, j) = (*columns[j])[i];
    }
    t.provenance = {log.well_name, t.depth.front(), t.depth.back()};
    return t;
}

FeatureTable select_features(const FeatureTable& table, const std::vector<std::string>& names) {
    if (names.empty()) throw std::invalid_argument("select_features: empty feature list");
    std::vector<std::size_t> cols;
    cols.reserve(names.size());
    for (const std::string& name : names) {
        const std::string canon = canonical_mnemonic(name);
        bool found = false;
        for (std::size_t j = 0; j < table.feature_names.size(); ++j) {
            if (table.feature_names[j] == canon) {
                cols.push_back(j);
                found = true;
                break;
            }
        }
        if (!found) {
            throw std::invalid_argument("select_features: feature '" + name +
                                        "' not present in table");
        }
    }
    FeatureTable out;
    out.depth = table.depth;
    out.y = table.y;
    out.provenance = table.provenance;
    out.feature_names.reserve(cols.size());
    for (std::size_t j : cols) out.feature_names.push_back(table.feature_names[j]);
    out.x = Matrix(table.x.rows(), cols.size());
    for (std::size_t r = 0; r < table.x.rows(); ++r) {
        for (std::size_t j = 0; j < cols.size(); ++j) out.x(r, j) = table.x(r, cols[j]);
    }
    return out;
}

std::string to_string(ScenarioKind kind) {
    switch (kind) {
        case ScenarioKind::known_interval: return "known_interval";
        case ScenarioKind::unknown_interval_same_well: return "unknown_interval_same_well";
        case ScenarioKind::different_well: return "different_well";
    }
    return "unknown";
}

ScenarioKind scenario_kind_from_string(const std::string& name) {
    if (name == "known_interval") return ScenarioKind::known_interval;
    if (name == "unknown_interval_same_well") return ScenarioKind::unknown_interval_same_well;
    if (name == "different_well") return ScenarioKind::different_well;
    throw std::invalid_argument("unknown scenario kind '" + name + "'");
}

namespace {

void check_fractions(const SplitFractions& f) {
    if (f.train <= 0.0 || f.validation <= 0.0 || f.test <= 0.0 ||
        std::abs(f.train + f.validation + f.test - 1.0) > 1e-9) {
        throw std::invalid_argument("split fractions must be positive and sum to 1");
    }
}

FeatureTable take_rows(const FeatureTable& t, const std::vector<std::size_t>& rows) {
    FeatureTable out;
    out.feature_names = t.feature_names;
    out.x = Matrix(rows.size(), t.n_features());
    out.depth.reserve(rows.size());
    out.y.reserve(rows.size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        const std::size_t i = rows[r];
        out.depth.push_back(t.depth[i]);
        out.y.push_back(t.y[i]);
        for (std::size_t j = 0; j < t.n_features(); ++j) out.x(r, j) = t.x(i, j);
    }
    if (!out.depth.empty()) {
        const auto [lo, hi] = std::minmax_element(out.depth.begin(), out.depth.end());
        out.provenance = {t.provenance.well_name, *lo, *hi};
    } else {
        out.provenance.well_name = t.provenance.well_name;
    }
    return out;
}

void require_nonempty(const ScenarioSplit& s) {
    if (s.train.n_rows() == 0 || s.validation.n_rows() == 0 || s.test.n_rows() == 0) {
        throw std::runtime_error("scenario split " + to_string(s.kind) +
                                 " produced an empty part");
    }
}

}  // namespace

ScenarioSplit split_scenario(const FeatureTable& table, ScenarioKind kind,
                             const SplitFractions& fractions, std::uint64_t seed) {
    if (kind == ScenarioKind::different_well) {
        throw std::invalid_argument("different_well split needs two tables");
    }
    check_fractions(fractions);
    const std::size_t n = table.n_rows();
    const auto n_train = static_cast<std::size_t>(std::floor(fractions.train * n));
    const auto n_val = static_cast<std::size_t>(std::floor(fractions.validation * n));

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    if (kind == ScenarioKind::known_interval) {
        Rng rng(seed);
        rng.shuffle(order);
    }

    std::vector<std::size_t> train(order.begin(), order.begin() + n_train);
    std::vector<std::size_t> val(order.begin() + n_train, order.begin() + n_train + n_val);
    std::vector<std::size_t> test(order.begin() + n_train + n_val, order.end());
    std::sort(train.begin(), train.end());
    std::sort(val.begin(), val.end());
    std::sort(test.begin(), test.end());

    ScenarioSplit s{take_rows(table, train), take_rows(table, val), take_rows(table, test), kind};
    require_nonempty(s);
    return s;
}

ScenarioSplit split_scenario(const FeatureTable& train_well, const FeatureTable& test_well,
                             const SplitFractions& fractions, std::uint64_t seed) {
    check_fractions(fractions);
    const std::size_t n = train_well.n_rows();
    const auto n_train = static_cast<std::size_t>(std::floor((1.0 - fractions.validation) * n));

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    Rng rng(seed);
    rng.shuffle(order);

    std::vector<std::size_t> train(order.begin(), order.begin() + n_train);
    std::vector<std::size_t> val(order.begin() + n_train, order.end());
    std::sort(train.begin(), train.end());
    std::sort(val.begin(), val.end());

    std::vector<std::size_t> all_test(test_well.n_rows());
    std::iota(all_test.begin(), all_test.end(), 0);

    ScenarioSplit s{take_rows(train_well, train), take_rows(train_well, val),
                    take_rows(test_well, all_test), ScenarioKind::different_well};
    require_nonempty(s);
    return s;
}

MinMaxScaler::MinMaxScaler(std::vector<double> mins, std::vector<double> maxs)
    : min_(std::move(mins)), max_(std::move(maxs)) {
    if (min_.size() != max_.size()) {
        throw std::invalid_argument("MinMaxScaler: min/max length mismatch");
    }
    for (std::size_t j = 0; j < min_.size(); ++j) {
        if (!(max_[j] > min_[j])) {
            throw std::invalid_argument("MinMaxScaler: column " + std::to_string(j) +
                                        " has max <= min");
        }
    }
}

MinMaxScaler MinMaxScaler::fit(const Matrix& x) {
    if (x.rows() < 2) throw std::invalid_argument("MinMaxScaler: need at least 2 rows");
    std::vector<double> mins(x.cols()), maxs(x.cols());
    for (std::size_t j = 0; j < x.cols(); ++j) {
        double lo = x(0, j), hi = x(0, j);
        for (std::size_t i = 1; i < x.rows(); ++i) {
            lo = std::min(lo, x(i, j));
            hi = std::max(hi, x(i, j));
        }
        mins[j] = lo;
        maxs[j] = hi;
    }
    return MinMaxScaler(std::move(mins), std::move(maxs));  // rejects constant columns
}

MinMaxScaler MinMaxScaler::fit(std::span<const double> column) {
    Matrix m(column.size(), 1);
    for (std::size_t i = 0; i < column.size(); ++i) m(i, 0) = column[i];
    return fit(m);
}

double MinMaxScaler::apply_value(std::size_t col, double v) const {
    return -1.0 + 2.0 * (v - min_[col]) / (max_[col] - min_[col]);
}

double MinMaxScaler::invert_value(std::size_t col, double v) const {
    return min_[col] + (v + 1.0) * 0.5 * (max_[col] - min_[col]);
}

Matrix MinMaxScaler::apply(const Matrix& x) const {
    if (x.cols() != n_cols()) throw std::invalid_argument("MinMaxScaler: column count mismatch");
    Matrix out(x.rows(), x.cols());
    for (std::size_t i = 0; i < x.rows(); ++i) {
        for (std::size_t j = 0; j < x.cols(); ++j) out(i, j) = apply_value(j, x(i, j));
    }
    return out;
}

std::vector<double> MinMaxScaler::apply(std::span<const double> column) const {
    if (n_cols() != 1) throw std::invalid_argument("MinMaxScaler: vector apply needs 1 column");
    std::vector<double> out(column.size());
    for (std::size_t i = 0; i < column.size(); ++i) out[i] = apply_value(0, column[i]);
    return out;
}

std::vector<double> MinMaxScaler::invert(std::span<const double> column) const {
    if (n_cols() != 1) throw std::invalid_argument("MinMaxScaler: vector invert needs 1 column");
    std::vector<double> out(column.size());
    for (std::size_t i = 0; i < column.size(); ++i) out[i] = invert_value(0, column[i]);
    return out;
}

}  // namespace swv
