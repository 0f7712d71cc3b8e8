#include "swv/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <initializer_list>
#include <limits>
#include <ostream>
#include <sstream>
#include <utility>

#include "swv/evaluation.hpp"
#include "swv/las_io.hpp"
#include "swv/model_io.hpp"
#include "swv/regression.hpp"
#include "swv/util.hpp"

namespace swv {

namespace {

namespace fs = std::filesystem;
using nlohmann::json;
using nlohmann::ordered_json;

void reject_unknown_keys(const json& j, std::initializer_list<const char*> allowed,
                         const std::string& where) {
    if (!j.is_object()) throw ConfigError(where + " must be a JSON object");
    for (auto it = j.begin(); it != j.end(); ++it) {
        bool known = false;
        for (const char* k : allowed) {
            if (it.key() == k) {
                known = true;
                break;
            }
        }
        if (!known) throw ConfigError("unknown key '" + it.key() + "' in " + where);
    }
}

fs::path resolve_path(const fs::path& base_dir, const std::string& p) {
    const fs::path path(p);
    return path.is_absolute() ? path : base_dir / path;
}

json load_json_file(const fs::path& path) {
    if (!fs::exists(path)) throw ConfigError("config file not found: " + path.string());
    try {
        return json::parse(read_file(path));
    } catch (const json::parse_error& e) {
        throw ConfigError("cannot parse " + path.string() + ": " + e.what());
    }
}

void apply_ann_block(const json& j, AnnSettings& s, const std::string& where) {
    reject_unknown_keys(j,
                        {"n_hidden", "optimizer", "learning_rate", "max_epochs", "lm_lambda0",
                         "lm_lambda_up", "lm_lambda_down", "lm_lambda_max", "patience",
                         "init_range"},
                        where);
    if (j.contains("n_hidden")) s.n_hidden = j.at("n_hidden").get<int>();
    if (j.contains("optimizer")) {
        s.train.optimizer = optimizer_from_string(j.at("optimizer").get<std::string>());
    }
    if (j.contains("learning_rate")) s.train.learning_rate = j.at("learning_rate").get<double>();
    if (j.contains("max_epochs")) s.train.max_epochs = j.at("max_epochs").get<int>();
    if (j.contains("lm_lambda0")) s.train.lm_lambda0 = j.at("lm_lambda0").get<double>();
    if (j.contains("lm_lambda_up")) s.train.lm_lambda_up = j.at("lm_lambda_up").get<double>();
    if (j.contains("lm_lambda_down")) s.train.lm_lambda_down = j.at("lm_lambda_down").get<double>();
    if (j.contains("lm_lambda_max")) s.train.lm_lambda_max = j.at("lm_lambda_max").get<double>();
    if (j.contains("patience")) s.train.patience = j.at("patience").get<int>();
    if (j.contains("init_range")) s.train.init_range = j.at("init_range").get<double>();
    if (s.n_hidden < 1) throw ConfigError(where + ": n_hidden must be at least 1");
    try {
        validate_train_config(s.train);
    } catch (const std::invalid_argument& e) {
        throw ConfigError(where + ": " + e.what());
    }
}

std::vector<std::string> canonical_name_list(const json& j, const std::string& where) {
    if (!j.is_array() || j.empty()) throw ConfigError(where + " must be a non-empty array");
    std::vector<std::string> names;
    for (const json& v : j) {
        const std::string canon = canonical_mnemonic(v.get<std::string>());
        if (std::find(names.begin(), names.end(), canon) != names.end()) {
            throw ConfigError(where + " lists '" + canon + "' twice");
        }
        names.push_back(canon);
    }
    return names;
}

// Curves the run pipeline conditions and screens, when present.
constexpr const char* kLogCurves[] = {"GR", "NPHI", "RHOB", "DT", "RES"};

const std::map<std::string, std::vector<std::string>>& expected_unit_table() {
    static const std::map<std::string, std::vector<std::string>> table = {
        {"DEPTH", {"M", "METER", "METERS", "METRES"}},
        {"DT", {"US/F", "US/FT", "USEC/FT"}},
        {"RHOB", {"G/C3", "G/CC", "G/CM3"}},
        {"GR", {"GAPI", "API"}},
        {"NPHI", {"V/V", "DEC", "FRAC", "VOL/VOL"}},
        {"RES", {"OHMM", "OHM-M", "OHM.M"}},
        {"VS", {"KM/S"}},
    };
    return table;
}

void check_one_unit(const std::string& mnemonic, const std::string& declared,
                    const std::string& well_name) {
    const std::string unit = to_upper(trim(declared));
    if (unit.empty()) return;
    const auto& table = expected_unit_table();
    const auto it = table.find(canonical_mnemonic(mnemonic));
    if (it == table.end()) return;
    for (const std::string& ok : it->second) {
        if (unit == ok) return;
    }
    std::string expected;
    for (const std::string& ok : it->second) {
        if (!expected.empty()) expected += ", ";
        expected += ok;
    }
    throw std::runtime_error("well " + well_name + ": curve " + mnemonic + " declares unit '" +
                             declared + "' but expected one of: " + expected);
}

struct ScenarioSizes {
    std::string name;
    std::size_t train = 0;
    std::size_t validation = 0;
    std::size_t test = 0;
};

std::vector<MethodSpec> build_method_specs(const RunConfig& cfg, const std::string& scenario) {
    std::vector<MethodSpec> specs;
    specs.reserve(cfg.methods.size());
    for (const std::string& name : cfg.methods) {
        MethodSpec s;
        s.name = name;
        if (name == "lr_single") {
            s.features = {cfg.single_feature};
        } else if (name == "mlr") {
            s.features = cfg.features;
        } else if (name == "ann_single") {
            s.is_neural = true;
            s.features = {cfg.single_feature};
            s.n_hidden = cfg.ann_single.n_hidden;
            s.train = cfg.ann_single.train;
        } else if (name == "ann_multi") {
            s.is_neural = true;
            s.features = cfg.features;
            s.n_hidden = cfg.ann_multi.n_hidden;
            s.train = cfg.ann_multi.train;
        } else {
            throw ConfigError("unknown method '" + name + "'");
        }
        if (s.is_neural) s.train.seed = derive_seed(cfg.seed, "init/" + scenario + "/" + name);
        specs.push_back(std::move(s));
    }
    return specs;
}

std::string describe_file(const fs::path& path, const std::string& key) {
    return key + " (" + path.string() + ")";
}

void print_comparison(std::ostream& out, const ComparisonTable& table,
                      const std::vector<ScenarioSizes>& sizes) {
    char buf[160];
    std::string current;
    for (const ComparisonRow& row : table.rows) {
        const std::string scenario = to_string(row.scenario);
        if (scenario != current) {
            current = scenario;
            std::string counts;
            for (const ScenarioSizes& s : sizes) {
                if (s.name == scenario) {
                    std::snprintf(buf, sizeof(buf), " (train %zu, validation %zu, test %zu)",
                                  s.train, s.validation, s.test);
                    counts = buf;
                    break;
                }
            }
            out << "\nScenario " << scenario << counts << "\n";
            std::snprintf(buf, sizeof(buf), "  %-4s %-12s %10s %10s\n", "rank", "method", "R^2",
                          "AAPRE%");
            out << buf;
        }
        std::snprintf(buf, sizeof(buf), "  %-4d %-12s %10.5f %10.3f%s\n", row.rank,
                      row.method.c_str(), row.r_squared, row.aapre_percent,
                      row.best ? "   <- best" : "");
        out << buf;
    }
}

int run_command(std::ostream& err, const std::function<void()>& body) {
    try {
        body();
        return 0;
    } catch (const ConfigError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace

RunConfig parse_run_config(const nlohmann::json& j, const std::filesystem::path& base_dir) {
    try {
        reject_unknown_keys(j,
                            {"schema_version", "seed", "inputs", "curve_map", "conditioning",
                             "target", "features", "single_feature", "screening_features",
                             "scenarios", "methods", "split", "ann", "ann_single", "ann_multi",
                             "output_dir"},
                            "run config");
        if (j.contains("schema_version") && j.at("schema_version").get<int>() != 1) {
            throw ConfigError("unsupported run config schema_version " +
                              j.at("schema_version").dump());
        }
        RunConfig cfg;
        if (!j.contains("seed")) {
            throw ConfigError("run config requires an explicit seed for reproducibility");
        }
        cfg.seed = j.at("seed").get<std::uint64_t>();

        if (!j.contains("inputs")) throw ConfigError("run config requires an inputs block");
        const json& inputs = j.at("inputs");
        reject_unknown_keys(inputs, {"train_well", "test_well"}, "inputs");
        const auto parse_input = [&](const char* key, std::string& key_out, fs::path& path_out,
                                     std::string& format_out) {
            if (!inputs.contains(key)) {
                throw ConfigError(std::string("inputs.") + key + " is required");
            }
            const json& v = inputs.at(key);
            if (v.is_string()) {
                key_out = v.get<std::string>();
            } else {
                reject_unknown_keys(v, {"path", "format"}, std::string("inputs.") + key);
                key_out = v.at("path").get<std::string>();
                format_out = v.value("format", "auto");
            }
            path_out = resolve_path(base_dir, key_out);
            if (!fs::exists(path_out)) {
                throw ConfigError(std::string("inputs.") + key + " does not exist: " +
                                  path_out.string());
            }
        };
        parse_input("train_well", cfg.train_well_key, cfg.train_well, cfg.train_format);
        parse_input("test_well", cfg.test_well_key, cfg.test_well, cfg.test_format);

        if (j.contains("curve_map")) {
            for (const auto& [src, dst] : j.at("curve_map").items()) {
                cfg.curve_map[src] = canonical_mnemonic(dst.get<std::string>());
            }
        }

        cfg.physical_ranges = default_physical_ranges();
        if (j.contains("conditioning")) {
            const json& c = j.at("conditioning");
            reject_unknown_keys(c, {"max_gap", "physical_ranges"}, "conditioning");
            if (c.contains("max_gap")) cfg.max_gap = c.at("max_gap").get<int>();
            if (cfg.max_gap < 0) throw ConfigError("conditioning.max_gap must be non-negative");
            if (c.contains("physical_ranges")) {
                for (const auto& [mnem, range] : c.at("physical_ranges").items()) {
                    if (!range.is_array() || range.size() != 2) {
                        throw ConfigError("physical range for " + mnem + " must be [lo, hi]");
                    }
                    const double lo = range.at(0).get<double>();
                    const double hi = range.at(1).get<double>();
                    if (!(lo < hi)) {
                        throw ConfigError("physical range for " + mnem + " must have lo < hi");
                    }
                    cfg.physical_ranges[canonical_mnemonic(mnem)] = {lo, hi};
                }
            }
        }

        if (j.contains("target")) {
            const json& t = j.at("target");
            reject_unknown_keys(t, {"castagna_slope", "castagna_intercept"}, "target");
            if (t.contains("castagna_slope")) {
                cfg.castagna.slope = t.at("castagna_slope").get<double>();
            }
            if (t.contains("castagna_intercept")) {
                cfg.castagna.intercept = t.at("castagna_intercept").get<double>();
            }
            if (!(cfg.castagna.slope > 0.0)) {
                throw ConfigError("target.castagna_slope must be positive");
            }
        }

        if (j.contains("features")) cfg.features = canonical_name_list(j.at("features"), "features");
        if (j.contains("single_feature")) {
            cfg.single_feature = canonical_mnemonic(j.at("single_feature").get<std::string>());
        }
        if (j.contains("screening_features")) {
            cfg.screening_features =
                canonical_name_list(j.at("screening_features"), "screening_features");
        }

        if (j.contains("scenarios")) {
            cfg.scenarios.clear();
            for (const json& v : j.at("scenarios")) {
                const ScenarioKind kind = scenario_kind_from_string(v.get<std::string>());
                if (std::find(cfg.scenarios.begin(), cfg.scenarios.end(), kind) !=
                    cfg.scenarios.end()) {
                    throw ConfigError("scenarios lists '" + to_string(kind) + "' twice");
                }
                cfg.scenarios.push_back(kind);
            }
            if (cfg.scenarios.empty()) throw ConfigError("scenarios must not be empty");
        }

        if (j.contains("methods")) {
            cfg.methods.clear();
            for (const json& v : j.at("methods")) {
                const std::string name = v.get<std::string>();
                static const std::vector<std::string> known{"lr_single", "mlr", "ann_single",
                                                            "ann_multi"};
                if (std::find(known.begin(), known.end(), name) == known.end()) {
                    throw ConfigError("unknown method '" + name + "'");
                }
                if (std::find(cfg.methods.begin(), cfg.methods.end(), name) !=
                    cfg.methods.end()) {
                    throw ConfigError("methods lists '" + name + "' twice");
                }
                cfg.methods.push_back(name);
            }
            if (cfg.methods.empty()) throw ConfigError("methods must not be empty");
        }

        if (j.contains("split")) {
            const json& s = j.at("split");
            reject_unknown_keys(s, {"train", "validation", "test"}, "split");
            if (s.contains("train")) cfg.split.train = s.at("train").get<double>();
            if (s.contains("validation")) cfg.split.validation = s.at("validation").get<double>();
            if (s.contains("test")) cfg.split.test = s.at("test").get<double>();
            if (cfg.split.train <= 0.0 || cfg.split.validation <= 0.0 || cfg.split.test <= 0.0 ||
                std::abs(cfg.split.train + cfg.split.validation + cfg.split.test - 1.0) > 1e-9) {
                throw ConfigError("split fractions must be positive and sum to 1");
            }
        }

        if (j.contains("ann")) {
            apply_ann_block(j.at("ann"), cfg.ann_single, "ann");
            apply_ann_block(j.at("ann"), cfg.ann_multi, "ann");
        }
        if (j.contains("ann_single")) apply_ann_block(j.at("ann_single"), cfg.ann_single, "ann_single");
        if (j.contains("ann_multi")) apply_ann_block(j.at("ann_multi"), cfg.ann_multi, "ann_multi");

        if (j.contains("output_dir")) {
            cfg.output_dir = resolve_path(base_dir, j.at("output_dir").get<std::string>());
        }
        return cfg;
    } catch (const json::exception& e) {
        throw ConfigError(std::string("invalid run config: ") + e.what());
    }
}

RunConfig load_run_config(const std::filesystem::path& path) {
    return parse_run_config(load_json_file(path), fs::absolute(path).parent_path());
}

SynthJob parse_synth_job(const nlohmann::json& j, const std::filesystem::path& base_dir) {
    try {
        reject_unknown_keys(
            j, {"schema_version", "seed", "n_samples", "depth_start", "depth_step",
                "layer_thickness_min", "layer_thickness_max", "transition_half_width",
                "porosity_surface", "porosity_decay", "porosity_shale_factor", "porosity_noise",
                "gr_sand", "gr_shale", "rho_matrix_sand", "rho_matrix_shale", "rho_fluid",
                "nphi_shale_excess", "dt_base", "dt_porosity", "dt_shale", "dt_interaction",
                "dt_depth_slope", "res_log_mean", "res_log_sd", "res_shale_slope", "noise_gr",
                "noise_nphi", "noise_rhob", "noise_dt", "noise_res_log", "missing_fraction",
                "well_drift", "output_dir", "well_a_filename", "well_b_filename"},
            "synth config");
        if (j.contains("schema_version") && j.at("schema_version").get<int>() != 1) {
            throw ConfigError("unsupported synth config schema_version " +
                              j.at("schema_version").dump());
        }
        SynthJob job;
        SynthConfig& c = job.synth;
        if (j.contains("seed")) c.seed = j.at("seed").get<std::uint64_t>();
        if (j.contains("n_samples")) c.n_samples = j.at("n_samples").get<int>();
        const auto get = [&](const char* key, double& v) {
            if (j.contains(key)) v = j.at(key).get<double>();
        };
        get("depth_start", c.depth_start);
        get("depth_step", c.depth_step);
        get("layer_thickness_min", c.layer_thickness_min);
        get("layer_thickness_max", c.layer_thickness_max);
        get("transition_half_width", c.transition_half_width);
        get("porosity_surface", c.porosity_surface);
        get("porosity_decay", c.porosity_decay);
        get("porosity_shale_factor", c.porosity_shale_factor);
        get("porosity_noise", c.porosity_noise);
        get("gr_sand", c.gr_sand);
        get("gr_shale", c.gr_shale);
        get("rho_matrix_sand", c.rho_matrix_sand);
        get("rho_matrix_shale", c.rho_matrix_shale);
        get("rho_fluid", c.rho_fluid);
        get("nphi_shale_excess", c.nphi_shale_excess);
        get("dt_base", c.dt_base);
        get("dt_porosity", c.dt_porosity);
        get("dt_shale", c.dt_shale);
        get("dt_interaction", c.dt_interaction);
        get("dt_depth_slope", c.dt_depth_slope);
        get("res_log_mean", c.res_log_mean);
        get("res_log_sd", c.res_log_sd);
        get("res_shale_slope", c.res_shale_slope);
        get("noise_gr", c.noise_gr);
        get("noise_nphi", c.noise_nphi);
        get("noise_rhob", c.noise_rhob);
        get("noise_dt", c.noise_dt);
        get("noise_res_log", c.noise_res_log);
        get("missing_fraction", c.missing_fraction);
        get("well_drift", c.well_drift);
        if (j.contains("output_dir")) {
            job.output_dir = resolve_path(base_dir, j.at("output_dir").get<std::string>());
        }
        if (j.contains("well_a_filename")) {
            job.well_a_filename = j.at("well_a_filename").get<std::string>();
        }
        if (j.contains("well_b_filename")) {
            job.well_b_filename = j.at("well_b_filename").get<std::string>();
        }
        try {
            validate_synth_config(c);
        } catch (const std::invalid_argument& e) {
            throw ConfigError(std::string("synth config: ") + e.what());
        }
        return job;
    } catch (const json::exception& e) {
        throw ConfigError(std::string("invalid synth config: ") + e.what());
    }
}

WellLog read_well_auto(const std::filesystem::path& path, const std::string& format) {
    if (!fs::exists(path)) throw ConfigError("input file not found: " + path.string());
    std::string fmt = format.empty() ? "auto" : format;
    if (fmt == "auto") {
        const std::string ext = to_upper(path.extension().string());
        if (ext == ".LAS") {
            fmt = "las";
        } else if (ext == ".CSV" || ext == ".TXT") {
            fmt = "csv";
        } else {
            throw ConfigError("cannot determine the format of " + path.string() +
                              " (expected a .las or .csv extension)");
        }
    }
    if (fmt == "las") return read_las_file(path);
    if (fmt == "csv") return read_csv_file(path, "DEPTH");
    throw ConfigError("unknown input format '" + fmt + "' (expected las, csv or auto)");
}

void check_expected_units(const WellLog& log) {
    check_one_unit("DEPTH", log.depth_unit, log.well_name);
    for (const Curve& c : log.curves) {
        check_one_unit(c.mnemonic, c.unit, log.well_name);
    }
}

void prepare_well(WellLog& log, const RunConfig& cfg) {
    for (const auto& [src, dst] : cfg.curve_map) {
        if (Curve* c = log.find_curve(src)) c->mnemonic = dst;
    }
    validate_well_log(log);
    check_expected_units(log);
    screen_physical_ranges(log, cfg.physical_ranges);
    for (const char* name : kLogCurves) {
        if (Curve* c = log.find_curve(name)) {
            c->samples = condition_curve(c->samples, log.depth, cfg.max_gap);
        }
    }

    if (log.has_curve("VS")) {
        throw std::runtime_error("well " + log.well_name +
                                 " already contains a VS curve; the pipeline derives its own "
                                 "target (remove or rename the existing curve)");
    }
    const Curve* dt = log.find_curve("DT");
    if (!dt) {
        throw std::runtime_error("well " + log.well_name +
                                 " has no DT curve; cannot derive the shear-velocity target");
    }
    std::vector<double> vs(log.depth.size(), std::numeric_limits<double>::quiet_NaN());
    for (std::size_t i = 0; i < vs.size(); ++i) {
        const double d = dt->samples[i];
        if (is_missing(d)) continue;
        const double v = castagna_vs(vp_from_dt(d), cfg.castagna);
        if (v > 0.0) vs[i] = v;  // non-physical (non-positive) targets stay missing
    }
    log.curves.push_back({"VS", "KM/S", "Shear velocity from the mudrock line", std::move(vs)});
}

int cmd_inspect(const std::string& path, std::ostream& out, std::ostream& err) {
    return run_command(err, [&] {
        const WellLog log = read_well_auto(path, "auto");
        char buf[200];
        out << "Well: " << (log.well_name.empty() ? "(unnamed)" : log.well_name) << "\n";
        if (log.depth.empty()) {
            out << "Samples: 0\n";
        } else {
            std::snprintf(buf, sizeof(buf), "Samples: %zu, depth %s to %s %s\n",
                          log.depth.size(), format_double(log.depth.front(), 8).c_str(),
                          format_double(log.depth.back(), 8).c_str(),
                          log.depth_unit.empty() ? "m" : log.depth_unit.c_str());
            out << buf;
        }
        if (log.curves.empty()) {
            out << "Curves: (none)\n";
            return;
        }
        std::snprintf(buf, sizeof(buf), "%-10s %-8s %14s %14s %9s\n", "CURVE", "UNIT", "MIN",
                      "MAX", "MISSING");
        out << buf;
        for (const Curve& c : log.curves) {
            double lo = std::numeric_limits<double>::infinity();
            double hi = -std::numeric_limits<double>::infinity();
            std::size_t missing = 0;
            for (double v : c.samples) {
                if (is_missing(v)) {
                    ++missing;
                } else {
                    lo = std::min(lo, v);
                    hi = std::max(hi, v);
                }
            }
            const bool any = missing < c.samples.size();
            std::snprintf(buf, sizeof(buf), "%-10s %-8s %14s %14s %9zu\n", c.mnemonic.c_str(),
                          c.unit.c_str(), any ? format_double(lo, 6).c_str() : "-",
                          any ? format_double(hi, 6).c_str() : "-", missing);
            out << buf;
        }
    });
}

int cmd_synth(const CliOptions& opt, std::ostream& out, std::ostream& err) {
    return run_command(err, [&] {
        SynthJob job;
        if (!opt.config_path.empty()) {
            const fs::path cpath = fs::absolute(fs::path(opt.config_path));
            job = parse_synth_job(load_json_file(cpath), cpath.parent_path());
        }
        if (opt.seed) job.synth.seed = *opt.seed;
        if (!opt.output_dir.empty()) job.output_dir = fs::path(opt.output_dir);
        try {
            validate_synth_config(job.synth);
        } catch (const std::invalid_argument& e) {
            throw ConfigError(std::string("synth config: ") + e.what());
        }

        const auto [a, b] = generate_field(job.synth);
        fs::create_directories(job.output_dir);
        const fs::path path_a = job.output_dir / job.well_a_filename;
        const fs::path path_b = job.output_dir / job.well_b_filename;
        write_las_file(a, path_a);
        write_las_file(b, path_b);

        if (!opt.quiet) {
            out << "Seed: " << job.synth.seed << "\n";
            for (const auto& [log, path] : {std::pair<const WellLog&, const fs::path&>{a, path_a},
                                            {b, path_b}}) {
                out << "Well " << log.well_name << " -> " << path.string() << "\n";
                char buf[160];
                std::snprintf(buf, sizeof(buf), "  %zu samples, depth %s to %s m\n",
                              log.depth.size(), format_double(log.depth.front(), 8).c_str(),
                              format_double(log.depth.back(), 8).c_str());
                out << buf;
                out << "  missing:";
                for (const Curve& c : log.curves) {
                    const auto missing = static_cast<std::size_t>(
                        std::count_if(c.samples.begin(), c.samples.end(),
                                      [](double v) { return is_missing(v); }));
                    out << " " << c.mnemonic << "=" << missing;
                }
                out << "\n";
            }
        }
    });
}

int cmd_run(const CliOptions& opt, std::ostream& out, std::ostream& err) {
    std::vector<std::string> failures;
    const int code = run_command(err, [&] {
        if (opt.config_path.empty()) throw ConfigError("run requires --config PATH");
        RunConfig cfg = load_run_config(fs::absolute(fs::path(opt.config_path)));
        if (opt.seed) cfg.seed = *opt.seed;
        if (!opt.output_dir.empty()) cfg.output_dir = fs::path(opt.output_dir);

        ordered_json hashes;
        hashes[cfg.train_well_key] = hash_hex(hash_file(cfg.train_well));
        if (cfg.test_well_key != cfg.train_well_key) {
            hashes[cfg.test_well_key] = hash_hex(hash_file(cfg.test_well));
        }

        WellLog well_a = read_well_auto(cfg.train_well, cfg.train_format);
        WellLog well_b = read_well_auto(cfg.test_well, cfg.test_format);
        prepare_well(well_a, cfg);
        prepare_well(well_b, cfg);

        const FeatureTable table_a = build_feature_table(well_a, cfg.features, "VS");
        const FeatureTable table_b = build_feature_table(well_b, cfg.features, "VS");

        // Single-log screening plus the multi-log reference fit, in-sample on
        // the train well, over rows where every screened curve is present.
        std::vector<std::string> screen_union = cfg.features;
        for (const std::string& f : cfg.screening_features) {
            if (std::find(screen_union.begin(), screen_union.end(), f) == screen_union.end()) {
                screen_union.push_back(f);
            }
        }
        const FeatureTable screen_table = build_feature_table(well_a, screen_union, "VS");
        const std::vector<ScreenResult> screening =
            screen_single_features(screen_table, cfg.screening_features);
        const FeatureTable multi_table = select_features(screen_table, cfg.features);
        const LinearModel multi_fit = fit_ols(multi_table);
        const double multi_r2 = r_squared(multi_table.y, predict_linear(multi_fit, multi_table.x));

        std::vector<EvalReport> reports;
        std::vector<std::pair<std::string, PredictorModel>> trained;
        std::vector<ScenarioSizes> sizes;
        for (const ScenarioKind kind : cfg.scenarios) {
            const std::string name = to_string(kind);
            const std::uint64_t split_seed = derive_seed(cfg.seed, "split/" + name);
            const ScenarioSplit split =
                kind == ScenarioKind::different_well
                    ? split_scenario(table_a, table_b, cfg.split, split_seed)
                    : split_scenario(table_a, kind, cfg.split, split_seed);
            sizes.push_back({name, split.train.n_rows(), split.validation.n_rows(),
                             split.test.n_rows()});
            ScenarioEvaluation ev = run_scenario(split, build_method_specs(cfg, name));
            for (EvalReport& r : ev.reports) reports.push_back(std::move(r));
            for (PredictorModel& m : ev.models) trained.emplace_back(name, std::move(m));
        }

        fs::create_directories(cfg.output_dir / "models");
        for (const auto& [scenario, model] : trained) {
            ordered_json mj = model_to_json(model);
            mj["training_meta"]["input_hashes"] = hashes;
            write_file_atomic(cfg.output_dir / "models" / (scenario + "_" + model.method + ".json"),
                              mj.dump(2) + "\n");
        }

        ordered_json report;
        report["schema_version"] = 1;
        report["seed"] = cfg.seed;
        report["input_hashes"] = hashes;
        report["reports"] = ordered_json::array();
        for (const EvalReport& r : reports) {
            if (!r.ok()) {
                failures.push_back(to_string(r.scenario) + "/" + r.method + ": " + r.error);
                continue;
            }
            report["reports"].push_back(ordered_json{{"scenario", to_string(r.scenario)},
                                                     {"method", r.method},
                                                     {"r_squared", r.r_squared},
                                                     {"aapre_percent", r.aapre_percent},
                                                     {"n_samples", r.n_samples}});
        }
        if (!failures.empty()) {
            ordered_json errors = ordered_json::array();
            for (const EvalReport& r : reports) {
                if (!r.ok()) {
                    errors.push_back(ordered_json{{"scenario", to_string(r.scenario)},
                                                  {"method", r.method},
                                                  {"message", r.error}});
                }
            }
            report["errors"] = std::move(errors);
        }
        write_file_atomic(cfg.output_dir / "report.json", report.dump(2) + "\n");

        std::ostringstream pred;
        pred << "# seed=" << cfg.seed << "\n";
        for (const auto& [key, value] : hashes.items()) {
            pred << "# input_hash " << key << "=" << value.get<std::string>() << "\n";
        }
        pred << "scenario,method,depth_m,actual_kms,predicted_kms,residual_kms\n";
        for (const EvalReport& r : reports) {
            if (!r.ok()) continue;
            for (std::size_t i = 0; i < r.actual.size(); ++i) {
                pred << to_string(r.scenario) << "," << r.method << ","
                     << format_double(r.depth[i]) << "," << format_double(r.actual[i]) << ","
                     << format_double(r.predicted[i]) << ","
                     << format_double(r.actual[i] - r.predicted[i]) << "\n";
            }
        }
        write_file_atomic(cfg.output_dir / "predictions.csv", pred.str());

        const ComparisonTable table = compare_methods(reports);
        std::ostringstream comp;
        comp << "# seed=" << cfg.seed << "\n";
        for (const auto& [key, value] : hashes.items()) {
            comp << "# input_hash " << key << "=" << value.get<std::string>() << "\n";
        }
        comp << "scenario,rank,method,r_squared,aapre_percent,best\n";
        for (const ComparisonRow& row : table.rows) {
            comp << to_string(row.scenario) << "," << row.rank << "," << row.method << ","
                 << format_double(row.r_squared) << "," << format_double(row.aapre_percent) << ","
                 << (row.best ? 1 : 0) << "\n";
        }
        write_file_atomic(cfg.output_dir / "comparison.csv", comp.str());

        ordered_json sj;
        sj["schema_version"] = 1;
        sj["seed"] = cfg.seed;
        sj["input_hashes"] = hashes;
        sj["screening"] = ordered_json::array();
        for (const ScreenResult& s : screening) {
            sj["screening"].push_back(
                ordered_json{{"feature", s.feature}, {"train_r_squared", s.train_r_squared}});
        }
        sj["multi_log"] = ordered_json{{"features", cfg.features},
                                       {"train_r_squared", multi_r2}};
        write_file_atomic(cfg.output_dir / "screening.json", sj.dump(2) + "\n");

        if (!opt.quiet) {
            out << "Inputs: train " << describe_file(cfg.train_well, well_a.well_name) << ", test "
                << describe_file(cfg.test_well, well_b.well_name) << "\n";
            out << "Seed: " << cfg.seed << "\n";
            out << "Single-log screening (train R^2):";
            for (const ScreenResult& s : screening) {
                out << " " << s.feature << "=" << format_double(s.train_r_squared, 4);
            }
            out << "\nMulti-log fit train R^2: " << format_double(multi_r2, 4) << "\n";
            print_comparison(out, table, sizes);
            out << "\nArtifacts written to " << cfg.output_dir.string() << "\n";
        }
        for (const std::string& f : failures) {
            err << "method failed: " << f << "\n";
        }
    });
    if (code != 0) return code;
    return failures.empty() ? 0 : 1;
}

int cmd_predict(const std::string& model_path, const std::string& input_path,
                const std::string& output_path, std::ostream& out, std::ostream& err) {
    return run_command(err, [&] {
        const fs::path mpath(model_path);
        const fs::path ipath(input_path);
        if (!fs::exists(mpath)) throw ConfigError("model file not found: " + model_path);
        if (!fs::exists(ipath)) throw ConfigError("input file not found: " + input_path);

        const PredictorModel model = load_model(mpath);
        const WellLog log = read_well_auto(ipath, "auto");
        check_expected_units(log);

        std::vector<const std::vector<double>*> columns;
        std::string missing_names;
        for (const std::string& f : model.feature_names) {
            if (f == "DEPTH") {
                columns.push_back(&log.depth);
                continue;
            }
            const Curve* c = log.find_curve(f);
            if (!c) {
                if (!missing_names.empty()) missing_names += ", ";
                missing_names += f;
                continue;
            }
            columns.push_back(&c->samples);
        }
        if (!missing_names.empty()) {
            throw ConfigError("input " + input_path + " lacks curves required by model '" +
                              model.method + "': " + missing_names);
        }

        std::ostringstream csv;
        csv << "# model_method=" << model.method << " model_seed=" << model.seed << "\n";
        csv << "# model_hash=" << hash_hex(hash_file(mpath))
            << " input_hash=" << hash_hex(hash_file(ipath)) << "\n";
        csv << "depth_m,vs_pred_kms\n";
        Matrix row(1, columns.size());
        std::size_t n_predicted = 0;
        for (std::size_t i = 0; i < log.depth.size(); ++i) {
            bool complete = true;
            for (std::size_t j = 0; j < columns.size(); ++j) {
                const double v = (*columns[j])[i];
                if (is_missing(v)) {
                    complete = false;
                    break;
                }
                row(0, j) = v;
            }
            csv << format_double(log.depth[i]) << ",";
            if (complete) {
                csv << format_double(predict(model, row)[0]);
                ++n_predicted;
            }
            csv << "\n";
        }
        write_file_atomic(fs::path(output_path), csv.str());
        out << "Wrote " << n_predicted << " predictions (" << log.depth.size() - n_predicted
            << " rows left empty for missing inputs) to " << output_path << "\n";
    });
}

}  // namespace swv
