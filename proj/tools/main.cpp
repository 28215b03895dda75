// Command-line front end: one subcommand per scenario kind, flag overrides on
// top of an optional JSON config, CSV + gnuplot script per run.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cohsim/scenario.hpp"

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

class IoError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

std::string read_text_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open " + path.string());
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    if (!in.good() && !in.eof()) {
        throw IoError("read failure on " + path.string());
    }
    return buffer.str();
}

void write_text_file(const fs::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw IoError("cannot open " + path.string() + " for writing");
    }
    out << text;
    out.flush();
    if (!out.good()) {
        throw IoError("write failure on " + path.string());
    }
}

struct KindCommand {
    cohsim::ScenarioKind kind;
    std::string config_path;
    std::string out_dir = ".";
    json overrides = json::object();
};

void run_command(const KindCommand& cmd) {
    json config = json::object();
    if (!cmd.config_path.empty()) {
        try {
            config = json::parse(read_text_file(cmd.config_path));
        } catch (const json::parse_error& e) {
            throw cohsim::ScenarioParseError(e.what());
        }
        if (!config.is_object()) {
            throw cohsim::ScenarioValidationError("config must be a JSON object");
        }
    }
    const std::string kind_name = cohsim::to_string(cmd.kind);
    if (config.contains("kind") && config["kind"] != kind_name) {
        const std::string found =
            config["kind"].is_string() ? config["kind"].get<std::string>()
                                       : config["kind"].dump();
        throw cohsim::ScenarioValidationError("config kind \"" + found +
                                              "\" does not match subcommand \"" +
                                              kind_name + "\"");
    }
    config["kind"] = kind_name;
    for (const auto& [key, value] : cmd.overrides.items()) {
        config[key] = value;
    }

    const cohsim::Scenario scenario = cohsim::parse_scenario(config.dump());
    const cohsim::SweepTable table = cohsim::run_scenario(scenario);

    std::error_code ec;
    fs::create_directories(cmd.out_dir, ec);
    if (ec) {
        throw IoError("cannot create output directory " + cmd.out_dir);
    }
    const fs::path csv_path = fs::path(cmd.out_dir) / (kind_name + ".csv");
    const fs::path plot_path = fs::path(cmd.out_dir) / (kind_name + ".plot");
    write_text_file(csv_path, cohsim::emit_csv(table));
    write_text_file(plot_path, cohsim::emit_plot_script(table, scenario.kind));
    std::cout << "wrote " << csv_path.string() << " (" << table.rows.size()
              << " rows) and " << plot_path.string() << "\n";
}

void add_numeric_flag(CLI::App* cmd, KindCommand* state, const std::string& flag,
                      const std::string& key, const std::string& description) {
    cmd->add_option_function<double>(
        flag, [state, key](const double& v) { state->overrides[key] = v; }, description);
}

void add_count_flag(CLI::App* cmd, KindCommand* state, const std::string& flag,
                    const std::string& key, const std::string& description) {
    cmd->add_option_function<std::int64_t>(
        flag, [state, key](const std::int64_t& v) { state->overrides[key] = v; },
        description);
}

void add_seed_flag(CLI::App* cmd, KindCommand* state) {
    cmd->add_option_function<std::uint64_t>(
        "--seed", [state](const std::uint64_t& v) { state->overrides["seed"] = v; },
        "generator seed (fixed seed gives byte-identical output)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"coherent-field g2 sweeps on beam splitters and interferometers"};
    app.require_subcommand(1);

    std::vector<std::unique_ptr<KindCommand>> states;
    auto make_subcommand = [&](cohsim::ScenarioKind kind, const std::string& about) {
        auto state = std::make_unique<KindCommand>();
        state->kind = kind;
        CLI::App* cmd = app.add_subcommand(cohsim::to_string(kind), about);
        cmd->add_option("--config", state->config_path,
                        "JSON scenario file; flags override its keys");
        cmd->add_option("--out", state->out_dir, "output directory (default: .)");
        KindCommand* raw = state.get();
        cmd->callback([raw] { run_command(*raw); });
        states.push_back(std::move(state));
        return std::pair{cmd, raw};
    };

    {
        auto [cmd, st] = make_subcommand(cohsim::ScenarioKind::phi_sweep,
                                         "g2 vs relative phase for coherent inputs");
        add_numeric_flag(cmd, st, "--phi-min-rad", "phi_min_rad", "sweep start (rad)");
        add_numeric_flag(cmd, st, "--phi-max-rad", "phi_max_rad", "sweep end (rad)");
        add_numeric_flag(cmd, st, "--phi-step-rad", "phi_step_rad", "sweep step (rad)");
        add_numeric_flag(cmd, st, "--delta-rad", "delta_rad", "propagation phase (rad)");
    }
    {
        auto [cmd, st] = make_subcommand(
            cohsim::ScenarioKind::hom_dip,
            "ensemble-averaged dip vs delay for a Gaussian detuning spectrum");
        add_numeric_flag(cmd, st, "--bw-ghz", "bw_ghz", "spectral FWHM (GHz)");
        add_numeric_flag(cmd, st, "--step-ghz", "step_ghz", "detuning step (GHz)");
        add_numeric_flag(cmd, st, "--span-ghz", "span_ghz", "detuning half-span (GHz)");
        add_numeric_flag(cmd, st, "--center-offset-ghz", "center_offset_ghz",
                         "center-frequency offset (GHz)");
        add_numeric_flag(cmd, st, "--tau-min-ps", "tau_min_ps", "delay start (ps)");
        add_numeric_flag(cmd, st, "--tau-max-ps", "tau_max_ps", "delay end (ps)");
        add_numeric_flag(cmd, st, "--tau-step-ps", "tau_step_ps", "delay step (ps)");
        add_numeric_flag(cmd, st, "--phi-rad", "phi_rad", "input phase difference (rad)");
    }
    {
        auto [cmd, st] = make_subcommand(cohsim::ScenarioKind::phi_map,
                                         "g2 over a (delay, phase) grid");
        add_numeric_flag(cmd, st, "--bw-ghz", "bw_ghz", "spectral FWHM (GHz)");
        add_numeric_flag(cmd, st, "--step-ghz", "step_ghz", "detuning step (GHz)");
        add_numeric_flag(cmd, st, "--span-ghz", "span_ghz", "detuning half-span (GHz)");
        add_numeric_flag(cmd, st, "--tau-min-ps", "tau_min_ps", "delay start (ps)");
        add_numeric_flag(cmd, st, "--tau-max-ps", "tau_max_ps", "delay end (ps)");
        add_numeric_flag(cmd, st, "--tau-step-ps", "tau_step_ps", "delay step (ps)");
        add_numeric_flag(cmd, st, "--phi-min-rad", "phi_min_rad", "phase start (rad)");
        add_numeric_flag(cmd, st, "--phi-max-rad", "phi_max_rad", "phase end (rad)");
        add_numeric_flag(cmd, st, "--phi-step-rad", "phi_step_rad", "phase step (rad)");
    }
    {
        auto [cmd, st] = make_subcommand(
            cohsim::ScenarioKind::mzi_sweep,
            "interferometer output intensities and normalized g2 vs internal phase");
        add_numeric_flag(cmd, st, "--psi-min-rad", "psi_min_rad", "sweep start (rad)");
        add_numeric_flag(cmd, st, "--psi-max-rad", "psi_max_rad", "sweep end (rad)");
        add_numeric_flag(cmd, st, "--psi-step-rad", "psi_step_rad", "sweep step (rad)");
        add_numeric_flag(cmd, st, "--amplitude", "amplitude", "input amplitude E0");
    }
    {
        auto [cmd, st] = make_subcommand(
            cohsim::ScenarioKind::baseline,
            "Monte-Carlo incoherent baseline over a uniform propagation phase");
        add_count_flag(cmd, st, "--n-samples", "n_samples", "number of samples");
        add_numeric_flag(cmd, st, "--phi-rad", "phi_rad", "initial phase difference (rad)");
        add_seed_flag(cmd, st);
    }
    {
        auto [cmd, st] = make_subcommand(
            cohsim::ScenarioKind::hbt,
            "chaotic-light intensity correlation on a single split input");
        add_count_flag(cmd, st, "--n-samples", "n_samples", "number of samples");
        add_seed_flag(cmd, st);
    }
    {
        auto [cmd, st] = make_subcommand(
            cohsim::ScenarioKind::bunching_stream,
            "random-choice stream of fully bunched events");
        add_count_flag(cmd, st, "--n-events", "n_events", "number of events");
        cmd->add_option_function<std::string>(
            "--mode",
            [st](const std::string& v) { st->overrides["mode"] = v; },
            "choice encoding: phase-sign or psi-choice");
        add_seed_flag(cmd, st);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    } catch (const cohsim::ScenarioParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const cohsim::ScenarioValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
