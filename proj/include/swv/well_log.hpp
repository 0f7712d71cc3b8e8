#pragma once
// Depth-indexed well-log container. Missing samples are NaN internally; the
// declared null value only matters at the file boundary.

#include <cmath>
#include <optional>
#include <string>
#include <vector>

namespace swv {

struct Curve {
    std::string mnemonic;
    std::string unit;
    std::string description;
    std::vector<double> samples;  // length == owning WellLog depth length
};

inline bool is_missing(double v) { return std::isnan(v); }
inline constexpr double kDefaultNullValue = -999.25;

struct WellLog {
    std::string well_name;
    double null_value = kDefaultNullValue;
    std::string depth_unit;     // declared unit of the depth column; may be empty
    std::vector<double> depth;  // meters, strictly increasing
    std::vector<Curve> curves;

    // Case-insensitive lookup; NPHI and NPFI are interchangeable spellings.
    const Curve* find_curve(const std::string& mnemonic) const;
    Curve* find_curve(const std::string& mnemonic);

    bool has_curve(const std::string& mnemonic) const { return find_curve(mnemonic) != nullptr; }
    std::size_t n_samples() const { return depth.size(); }
};

// Canonical uppercase form with the NPFI alias folded onto NPHI.
std::string canonical_mnemonic(const std::string& name);

// Enforces depth monotonicity, sample lengths and mnemonic uniqueness.
// Throws std::invalid_argument describing the first violation.
void validate_well_log(const WellLog& log);

}  // namespace swv
