// Command-line front end: inspect, synth, run, predict.
// Exit codes: 0 success, 1 pipeline error, 2 usage/config error.

#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "swv/pipeline.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Shear-wave velocity prediction from conventional well logs"};
    app.require_subcommand(1);

    std::string inspect_path;
    CLI::App* inspect = app.add_subcommand("inspect", "Summarize a LAS or CSV well file");
    inspect->add_option("path", inspect_path, "Well file to inspect")->required();

    swv::CliOptions synth_opt;
    std::uint64_t synth_seed = 0;
    CLI::App* synth = app.add_subcommand("synth", "Generate the two-well synthetic field");
    synth->add_option("--config", synth_opt.config_path, "Synth config JSON");
    synth->add_option("--output-dir", synth_opt.output_dir, "Directory for the LAS files");
    CLI::Option* synth_seed_flag =
        synth->add_option("--seed", synth_seed, "Override the config seed");
    synth->add_flag("--quiet", synth_opt.quiet, "Suppress the summary");

    swv::CliOptions run_opt;
    std::uint64_t run_seed = 0;
    CLI::App* run = app.add_subcommand("run", "Train and evaluate every selected method");
    run->add_option("--config", run_opt.config_path, "Run config JSON")->required();
    run->add_option("--output-dir", run_opt.output_dir, "Artifact directory override");
    CLI::Option* run_seed_flag = run->add_option("--seed", run_seed, "Override the config seed");
    run->add_flag("--quiet", run_opt.quiet, "Suppress the summary");

    std::string model_path;
    std::string input_path;
    std::string output_path;
    bool predict_quiet = false;
    CLI::App* predict = app.add_subcommand("predict", "Apply a saved model to a well file");
    predict->add_option("model", model_path, "Model JSON file")->required();
    predict->add_option("input", input_path, "LAS or CSV input well")->required();
    predict->add_option("output", output_path, "Prediction CSV to write")->required();
    predict->add_flag("--quiet", predict_quiet, "Suppress the summary");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;  // --help/--version exit 0, bad usage exits 2
    }

    if (*inspect) return swv::cmd_inspect(inspect_path, std::cout, std::cerr);
    if (*synth) {
        if (synth_seed_flag->count() > 0) synth_opt.seed = synth_seed;
        return swv::cmd_synth(synth_opt, std::cout, std::cerr);
    }
    if (*run) {
        if (run_seed_flag->count() > 0) run_opt.seed = run_seed;
        return swv::cmd_run(run_opt, std::cout, std::cerr);
    }
    if (*predict) {
        std::ostringstream sink;
        std::ostream& out = predict_quiet ? static_cast<std::ostream&>(sink) : std::cout;
        return swv::cmd_predict(model_path, input_path, output_path, out, std::cerr);
    }
    return 2;
}
