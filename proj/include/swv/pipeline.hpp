#pragma once
// End-to-end workflow behind the CLI: config loading, well ingestion with
// unit checks and conditioning, target derivation, the scenario/method
// sweep, and artifact emission. Commands return process exit codes:
// 0 success, 1 pipeline error, 2 usage/config error.

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "swv/conditioning.hpp"
#include "swv/neuralnet.hpp"
#include "swv/petrophysics.hpp"
#include "swv/synthgen.hpp"
#include "swv/well_log.hpp"

namespace swv {

// Bad user input (config contents, missing files, mismatched model/input).
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct AnnSettings {
    int n_hidden = 4;
    TrainConfig train;
};

struct RunConfig {
    std::uint64_t seed = 0;
    std::string train_well_key;  // path as written in the config (artifact key)
    std::string test_well_key;
    std::filesystem::path train_well;  // resolved against the config directory
    std::filesystem::path test_well;
    std::string train_format = "auto";  // las | csv | auto
    std::string test_format = "auto";
    std::map<std::string, std::string> curve_map;  // source mnemonic -> canonical
    int max_gap = 5;
    std::map<std::string, PhysicalRange> physical_ranges;
    CastagnaCoefficients castagna;
    std::vector<std::string> features{"DEPTH", "GR", "NPHI", "RHOB"};
    std::string single_feature = "NPHI";
    std::vector<std::string> screening_features{"GR", "NPHI", "RHOB", "RES"};
    std::vector<ScenarioKind> scenarios{ScenarioKind::known_interval,
                                        ScenarioKind::unknown_interval_same_well,
                                        ScenarioKind::different_well};
    std::vector<std::string> methods{"lr_single", "mlr", "ann_single", "ann_multi"};
    SplitFractions split;
    AnnSettings ann_single;
    AnnSettings ann_multi;
    std::filesystem::path output_dir = "out";
};

// Unknown keys are rejected so typos fail loudly. Relative paths resolve
// against base_dir (the config file's directory).
RunConfig parse_run_config(const nlohmann::json& j, const std::filesystem::path& base_dir);
RunConfig load_run_config(const std::filesystem::path& path);

struct SynthJob {
    SynthConfig synth;
    std::filesystem::path output_dir = "data";
    std::string well_a_filename = "synth_a.las";
    std::string well_b_filename = "synth_b.las";
};

SynthJob parse_synth_job(const nlohmann::json& j, const std::filesystem::path& base_dir);

// Format "las", "csv" or "auto" (by extension). Throws ConfigError when the
// file does not exist or the format cannot be determined.
WellLog read_well_auto(const std::filesystem::path& path, const std::string& format);

// Declared unit strings for known curves must match the expected unit
// family (depth m, DT us/ft, RHOB g/cm3, ...). Empty units pass.
void check_expected_units(const WellLog& log);

// curve_map renames, unit check, physical-range screening, gap
// interpolation, and derivation of the VS target curve (km/s) from DT.
void prepare_well(WellLog& log, const RunConfig& cfg);

struct CliOptions {
    std::string config_path;  // run: required, synth: optional
    std::string output_dir;   // override; empty = use config value
    std::optional<std::uint64_t> seed;
    bool quiet = false;
};

int cmd_inspect(const std::string& path, std::ostream& out, std::ostream& err);
int cmd_synth(const CliOptions& opt, std::ostream& out, std::ostream& err);
int cmd_run(const CliOptions& opt, std::ostream& out, std::ostream& err);
int cmd_predict(const std::string& model_path, const std::string& input_path,
                const std::string& output_path, std::ostream& out, std::ostream& err);

}  // namespace swv
