#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace cohsim {

enum class ScenarioKind {
    phi_sweep,
    hom_dip,
    phi_map,
    mzi_sweep,
    baseline,
    hbt,
    bunching_stream,
};

std::string to_string(ScenarioKind kind);

/// Raised for malformed scenario text; the message carries the line/column
/// reported by the JSON parser.
class ScenarioParseError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Raised when a scenario names an unknown kind or key, or a value falls
/// outside its documented range; the message names the offending key.
class ScenarioValidationError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Validated sweep description. Grid parameters stay in the human-scale
/// units of the config schema (GHz, ps, rad); run_scenario converts to SI.
struct Scenario {
    ScenarioKind kind = ScenarioKind::phi_sweep;

    // spectral ensemble (hom-dip, phi-map)
    double bw_ghz = 100.0;
    double step_ghz = 2.0;
    double span_ghz = 200.0;
    double center_offset_ghz = 0.0;

    // delay grid, ps (hom-dip, phi-map)
    double tau_min_ps = 0.0;
    double tau_max_ps = 100.0;
    double tau_step_ps = 0.1;

    // phase grids, rad
    double phi_rad = 0.0;        // fixed phase (hom-dip, baseline)
    double phi_min_rad = 0.0;    // sweep (phi-sweep, phi-map)
    double phi_max_rad = 0.0;
    double phi_step_rad = 0.1;
    double delta_rad = 0.0;      // propagation phase (phi-sweep)

    // interferometer sweep (mzi-sweep)
    double psi_min_rad = 0.0;
    double psi_max_rad = 0.0;
    double psi_step_rad = 0.01;
    double amplitude = 1.0;

    // stochastic kinds
    std::int64_t n_samples = 0;
    std::uint64_t seed = 1;
    std::string mode = "phase-sign";  // bunching-stream only
};

/// Rectangular numeric table with named columns.
struct SweepTable {
    std::vector<std::string> column_names;
    std::vector<std::vector<double>> rows;
};

/// Canonical sweep defaults for the given kind.
Scenario default_scenario(ScenarioKind kind);

/// Parses and validates UTF-8 JSON scenario text. Missing keys take the
/// kind's defaults; unknown kinds or keys and out-of-range values throw
/// ScenarioValidationError, malformed JSON throws ScenarioParseError.
Scenario parse_scenario(const std::string& text);

/// Executes the sweep and returns the kind-specific table; no partial output.
SweepTable run_scenario(const Scenario& scenario);

/// RFC-4180-style CSV: header row, 12 significant digits, LF line endings.
/// Byte-deterministic for a given table.
std::string emit_csv(const SweepTable& table);

/// Self-contained gnuplot script plotting the emitted CSV, with a 0.5
/// reference line on correlation plots.
std::string emit_plot_script(const SweepTable& table, ScenarioKind kind);

}  // namespace cohsim
