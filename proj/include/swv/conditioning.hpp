#pragma once
// Data conditioning: physical-range screening, gap interpolation, feature
// table assembly, train/validation/test splitting and min-max scaling.

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "swv/linalg.hpp"
#include "swv/well_log.hpp"

namespace swv {

struct PhysicalRange {
    double lo = 0.0;
    double hi = 0.0;
};

// RHOB 1.0-3.5 g/cm3, NPHI -0.05-1.0 v/v, GR 0-400 API, DT 40-300 us/ft
std::map<std::string, PhysicalRange> default_physical_ranges();

// Samples outside their configured range become missing. Returns the number
// of samples remapped per curve (canonical mnemonic).
std::map<std::string, std::size_t> screen_physical_ranges(
    WellLog& log, const std::map<std::string, PhysicalRange>& ranges);

// Interior missing runs of length <= max_gap are filled by linear
// interpolation in depth; longer runs and edge runs stay missing.
std::vector<double> condition_curve(const std::vector<double>& samples,
                                    const std::vector<double>& depth, int max_gap);

struct Provenance {
    std::string well_name;
    double depth_min = 0.0;
    double depth_max = 0.0;
};

struct FeatureTable {
    std::vector<double> depth;               // meters
    std::vector<std::string> feature_names;  // canonical mnemonics, DEPTH allowed
    Matrix x;                                // rows align with depth
    std::vector<double> y;                   // target Vs, km/s
    Provenance provenance;

    std::size_t n_rows() const { return depth.size(); }
    std::size_t n_features() const { return feature_names.size(); }
};

// Rows with any missing feature or target sample are dropped.
// The pseudo-feature DEPTH resolves to the depth index itself.
FeatureTable build_feature_table(const WellLog& log,
                                 const std::vector<std::string>& feature_names,
                                 const std::string& target_name);

// Same rows, feature columns restricted to `names` in the given order.
FeatureTable select_features(const FeatureTable& table, const std::vector<std::string>& names);

enum class ScenarioKind { known_interval, unknown_interval_same_well, different_well };

std::string to_string(ScenarioKind kind);
ScenarioKind scenario_kind_from_string(const std::string& name);

struct SplitFractions {
    double train = 0.70;
    double validation = 0.15;
    double test = 0.15;
};

struct ScenarioSplit {
    FeatureTable train;
    FeatureTable validation;
    FeatureTable test;
    ScenarioKind kind = ScenarioKind::known_interval;
};

// known_interval: seeded uniform random rows; unknown_interval_same_well:
// contiguous depth blocks, shallowest 70% train, deepest 15% test.
// Part sizes are floor(frac*n) with the remainder going to test.
ScenarioSplit split_scenario(const FeatureTable& table, ScenarioKind kind,
                             const SplitFractions& fractions, std::uint64_t seed);

// different_well: the train well is split (1 - validation)/validation into
// train/validation; the entire second well is the test part.
ScenarioSplit split_scenario(const FeatureTable& train_well, const FeatureTable& test_well,
                             const SplitFractions& fractions, std::uint64_t seed);

// Per-column affine map onto [-1, 1]; invert is the exact inverse.
class MinMaxScaler {
public:
    MinMaxScaler() = default;
    MinMaxScaler(std::vector<double> mins, std::vector<double> maxs);

    static MinMaxScaler fit(const Matrix& x);
    static MinMaxScaler fit(std::span<const double> column);

    std::size_t n_cols() const { return min_.size(); }
    double apply_value(std::size_t col, double v) const;
    double invert_value(std::size_t col, double v) const;
    Matrix apply(const Matrix& x) const;
    std::vector<double> apply(std::span<const double> column) const;
    std::vector<double> invert(std::span<const double> column) const;

    const std::vector<double>& col_min() const { return min_; }
    const std::vector<double>& col_max() const { return max_; }

private:
    std::vector<double> min_;
    std::vector<double> max_;
};

}  // namespace swv
