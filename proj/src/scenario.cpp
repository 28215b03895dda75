#include "cohsim/scenario.hpp"

#include <cmath>
#include <cstdio>
#include <map>
#include <set>

#include <json.hpp>

#include "cohsim/correlator.hpp"
#include "cohsim/field.hpp"
#include "cohsim/hom.hpp"
#include "cohsim/mzi.hpp"

namespace cohsim {

namespace {

using nlohmann::json;

constexpr double kGhz = 1e9;
constexpr double kPs = 1e-12;
constexpr std::size_t kMaxGridPoints = 2'000'000;
constexpr std::int64_t kMaxSamples = 1'000'000'000;

const std::map<std::string, ScenarioKind>& kind_names() {
    static const std::map<std::string, ScenarioKind> names = {
        {"phi-sweep", ScenarioKind::phi_sweep},
        {"hom-dip", ScenarioKind::hom_dip},
        {"phi-map", ScenarioKind::phi_map},
        {"mzi-sweep", ScenarioKind::mzi_sweep},
        {"baseline", ScenarioKind::baseline},
        {"hbt", ScenarioKind::hbt},
        {"bunching-stream", ScenarioKind::bunching_stream},
    };
    return names;
}

const std::set<std::string>& allowed_keys(ScenarioKind kind) {
    static const std::map<ScenarioKind, std::set<std::string>> keys = {
        {ScenarioKind::phi_sweep,
         {"phi_min_rad", "phi_max_rad", "phi_step_rad", "delta_rad"}},
        {ScenarioKind::hom_dip,
         {"bw_ghz", "step_ghz", "span_ghz", "center_offset_ghz", "tau_min_ps",
          "tau_max_ps", "tau_step_ps", "phi_rad"}},
        {ScenarioKind::phi_map,
         {"bw_ghz", "step_ghz", "span_ghz", "tau_min_ps", "tau_max_ps", "tau_step_ps",
          "phi_min_rad", "phi_max_rad", "phi_step_rad"}},
        {ScenarioKind::mzi_sweep,
         {"psi_min_rad", "psi_max_rad", "psi_step_rad", "amplitude"}},
        {ScenarioKind::baseline, {"n_samples", "seed", "phi_rad"}},
        {ScenarioKind::hbt, {"n_samples", "seed"}},
        {ScenarioKind::bunching_stream, {"n_events", "seed", "mode"}},
    };
    return keys.at(kind);
}

double require_finite_number(const json& j, const std::string& key) {
    if (!j.is_number()) {
        throw ScenarioValidationError("scenario key \"" + key + "\" must be a number");
    }
    const double value = j.get<double>();
    if (!std::isfinite(value)) {
        throw ScenarioValidationError("scenario key \"" + key + "\" must be finite");
    }
    return value;
}

std::int64_t require_count(const json& j, const std::string& key) {
    if (!j.is_number_integer()) {
        throw ScenarioValidationError("scenario key \"" + key + "\" must be an integer");
    }
    const auto value = j.get<std::int64_t>();
    if (value < 1 || value > kMaxSamples) {
        throw ScenarioValidationError("scenario key \"" + key + "\" out of range [1, 1e9]");
    }
    return value;
}

std::uint64_t require_seed(const json& j, const std::string& key) {
    if (!j.is_number_integer() || (j.is_number_integer() && !j.is_number_unsigned() &&
                                   j.get<std::int64_t>() < 0)) {
        throw ScenarioValidationError("scenario key \"" + key +
                                      "\" must be a nonnegative integer");
    }
    return j.get<std::uint64_t>();
}

std::size_t grid_count(double lo, double hi, double step) {
    return static_cast<std::size_t>(std::floor((hi - lo) / step + 1e-6)) + 1;
}

std::vector<double> uniform_grid(double lo, double hi, double step) {
    const std::size_t count = grid_count(lo, hi, step);
    std::vector<double> values;
    values.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        values.push_back(lo + static_cast<double>(i) * step);
    }
    return values;
}

void check_grid(double lo, double hi, double step, const std::string& step_key) {
    if (!(step > 0.0)) {
        throw ScenarioValidationError("scenario key \"" + step_key +
                                      "\" must be positive");
    }
    if (hi < lo) {
        throw ScenarioValidationError("scenario key \"" + step_key +
                                      "\": grid maximum below minimum");
    }
    if (grid_count(lo, hi, step) > kMaxGridPoints) {
        throw ScenarioValidationError("scenario key \"" + step_key +
                                      "\": grid exceeds 2e6 points");
    }
}

void validate(const Scenario& s) {
    switch (s.kind) {
        case ScenarioKind::phi_sweep:
            check_grid(s.phi_min_rad, s.phi_max_rad, s.phi_step_rad, "phi_step_rad");
            break;
        case ScenarioKind::hom_dip:
        case ScenarioKind::phi_map:
            if (!(s.bw_ghz > 0.0)) {
                throw ScenarioValidationError("scenario key \"bw_ghz\" must be positive");
            }
            if (!(s.step_ghz > 0.0)) {
                throw ScenarioValidationError("scenario key \"step_ghz\" must be positive");
            }
            if (!(s.span_ghz >= s.step_ghz)) {
                throw ScenarioValidationError(
                    "scenario key \"span_ghz\" must be >= step_ghz");
            }
            check_grid(s.tau_min_ps, s.tau_max_ps, s.tau_step_ps, "tau_step_ps");
            if (s.kind == ScenarioKind::phi_map) {
                check_grid(s.phi_min_rad, s.phi_max_rad, s.phi_step_rad, "phi_step_rad");
                if (grid_count(s.tau_min_ps, s.tau_max_ps, s.tau_step_ps) *
                        grid_count(s.phi_min_rad, s.phi_max_rad, s.phi_step_rad) >
                    20'000'000ULL) {
                    throw ScenarioValidationError(
                        "scenario keys \"tau_step_ps\"/\"phi_step_rad\": map exceeds "
                        "2e7 entries");
                }
            }
            break;
        case ScenarioKind::mzi_sweep:
            check_grid(s.psi_min_rad, s.psi_max_rad, s.psi_step_rad, "psi_step_rad");
            if (!(s.amplitude > 0.0)) {
                throw ScenarioValidationError(
                    "scenario key \"amplitude\" must be positive");
            }
            break;
        case ScenarioKind::baseline:
        case ScenarioKind::hbt:
        case ScenarioKind::bunching_stream:
            // counts validated at key extraction
            break;
    }
    if (s.kind == ScenarioKind::bunching_stream && s.mode != "phase-sign" &&
        s.mode != "psi-choice") {
        throw ScenarioValidationError(
            "scenario key \"mode\" must be \"phase-sign\" or \"psi-choice\"");
    }
}

}  // namespace

std::string to_string(ScenarioKind kind) {
    for (const auto& [name, value] : kind_names()) {
        if (value == kind) {
            return name;
        }
    }
    return "unknown";
}

Scenario default_scenario(ScenarioKind kind) {
    Scenario s;
    s.kind = kind;
    switch (kind) {
        case ScenarioKind::phi_sweep:
            s.phi_min_rad = -kTwoPi;
            s.phi_max_rad = kTwoPi;
            s.phi_step_rad = kPi / 200.0;
            s.delta_rad = 0.0;
            break;
        case ScenarioKind::hom_dip:
            s.phi_rad = kPi / 2.0;
            break;
        case ScenarioKind::phi_map:
            s.tau_max_ps = 10.0;
            s.tau_step_ps = 1.0;
            s.phi_min_rad = -kTwoPi;
            s.phi_max_rad = kTwoPi;
            s.phi_step_rad = kPi / 200.0;
            break;
        case ScenarioKind::mzi_sweep:
            // +-2*pi span rounded to a whole number of 0.01 rad steps so the
            // grid lands on psi = 0 exactly
            s.psi_min_rad = -6.28;
            s.psi_max_rad = 6.28;
            s.psi_step_rad = 0.01;
            s.amplitude = 1.0;
            break;
        case ScenarioKind::baseline:
            s.n_samples = 100'000;
            s.phi_rad = 0.0;
            break;
        case ScenarioKind::hbt:
            s.n_samples = 1'000'000;
            break;
        case ScenarioKind::bunching_stream:
            s.n_samples = 100'000;
            s.mode = "phase-sign";
            break;
    }
    return s;
}

Scenario parse_scenario(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ScenarioParseError(e.what());
    }
    if (!j.is_object()) {
        throw ScenarioValidationError("scenario must be a JSON object");
    }
    if (!j.contains("kind")) {
        throw ScenarioValidationError("missing scenario key \"kind\"");
    }
    if (!j["kind"].is_string()) {
        throw ScenarioValidationError("scenario key \"kind\" must be a string");
    }
    const std::string kind_name = j["kind"].get<std::string>();
    const auto kind_it = kind_names().find(kind_name);
    if (kind_it == kind_names().end()) {
        throw ScenarioValidationError("unknown scenario kind \"" + kind_name + "\"");
    }

    Scenario s = default_scenario(kind_it->second);
    const auto& allowed = allowed_keys(s.kind);
    for (const auto& [key, value] : j.items()) {
        if (key == "kind") {
            continue;
        }
        if (key == "schema_version") {
            if (!value.is_number_integer() || value.get<std::int64_t>() != 1) {
                throw ScenarioValidationError("scenario key \"schema_version\" must be 1");
            }
            continue;
        }
        if (allowed.find(key) == allowed.end()) {
            throw ScenarioValidationError("unknown scenario key \"" + key +
                                          "\" for kind \"" + kind_name + "\"");
        }
        if (key == "n_samples" || key == "n_events") {
            s.n_samples = require_count(value, key);
        } else if (key == "seed") {
            s.seed = require_seed(value, key);
        } else if (key == "mode") {
            if (!value.is_string()) {
                throw ScenarioValidationError("scenario key \"mode\" must be a string");
            }
            s.mode = value.get<std::string>();
        } else {
            const double v = require_finite_number(value, key);
            if (key == "bw_ghz") s.bw_ghz = v;
            else if (key == "step_ghz") s.step_ghz = v;
            else if (key == "span_ghz") s.span_ghz = v;
            else if (key == "center_offset_ghz") s.center_offset_ghz = v;
            else if (key == "tau_min_ps") s.tau_min_ps = v;
            else if (key == "tau_max_ps") s.tau_max_ps = v;
            else if (key == "tau_step_ps") s.tau_step_ps = v;
            else if (key == "phi_rad") s.phi_rad = v;
            else if (key == "phi_min_rad") s.phi_min_rad = v;
            else if (key == "phi_max_rad") s.phi_max_rad = v;
            else if (key == "phi_step_rad") s.phi_step_rad = v;
            else if (key == "delta_rad") s.delta_rad = v;
            else if (key == "psi_min_rad") s.psi_min_rad = v;
            else if (key == "psi_max_rad") s.psi_max_rad = v;
            else if (key == "psi_step_rad") s.psi_step_rad = v;
            else if (key == "amplitude") s.amplitude = v;
        }
    }
    validate(s);
    return s;
}

SweepTable run_scenario(const Scenario& s) {
    validate(s);
    SweepTable table;
    switch (s.kind) {
        case ScenarioKind::phi_sweep: {
            table.column_names = {"phi_rad", "g2"};
            for (const double phi :
                 uniform_grid(s.phi_min_rad, s.phi_max_rad, s.phi_step_rad)) {
                table.rows.push_back({phi, g2_coherent({s.delta_rad, phi})});
            }
            break;
        }
        case ScenarioKind::hom_dip: {
            table.column_names = {"tau_ps", "g2", "g2_closed_form"};
            const SpectralEnsemble ensemble = gaussian_spectral_grid(
                s.bw_ghz * kGhz, s.step_ghz * kGhz, s.span_ghz * kGhz);
            std::vector<double> taus;
            for (const double tau_ps :
                 uniform_grid(s.tau_min_ps, s.tau_max_ps, s.tau_step_ps)) {
                taus.push_back(tau_ps * kPs);
            }
            const HomDipCurve curve =
                hom_dip_curve(ensemble, taus, s.phi_rad, s.center_offset_ghz * kGhz);
            for (std::size_t i = 0; i < taus.size(); ++i) {
                table.rows.push_back({taus[i] / kPs, curve.g2_values[i],
                                      hom_dip_closed_form(s.bw_ghz * kGhz, taus[i],
                                                          s.phi_rad,
                                                          s.center_offset_ghz * kGhz)});
            }
            break;
        }
        case ScenarioKind::phi_map: {
            table.column_names = {"tau_ps", "phi_rad", "g2"};
            const SpectralEnsemble ensemble = gaussian_spectral_grid(
                s.bw_ghz * kGhz, s.step_ghz * kGhz, s.span_ghz * kGhz);
            std::vector<double> taus;
            for (const double tau_ps :
                 uniform_grid(s.tau_min_ps, s.tau_max_ps, s.tau_step_ps)) {
                taus.push_back(tau_ps * kPs);
            }
            const std::vector<double> phis =
                uniform_grid(s.phi_min_rad, s.phi_max_rad, s.phi_step_rad);
            const auto map = g2_phi_map(ensemble, taus, phis);
            for (std::size_t i = 0; i < taus.size(); ++i) {
                for (std::size_t k = 0; k < phis.size(); ++k) {
                    table.rows.push_back({taus[i] / kPs, phis[k], map[i][k]});
                }
            }
            break;
        }
        case ScenarioKind::mzi_sweep: {
            table.column_names = {"psi_rad", "i3", "i4", "g2_normalized"};
            for (const double psi :
                 uniform_grid(s.psi_min_rad, s.psi_max_rad, s.psi_step_rad)) {
                const MziOutputs out = mzi_outputs({psi, 1, s.amplitude});
                table.rows.push_back({psi, out.i3, out.i4, mzi_g2_normalized(psi)});
            }
            break;
        }
        case ScenarioKind::baseline: {
            table.column_names = {"estimate", "n_samples", "seed"};
            table.rows.push_back({incoherent_baseline(s.n_samples, s.seed, s.phi_rad),
                                  static_cast<double>(s.n_samples),
                                  static_cast<double>(s.seed)});
            break;
        }
        case ScenarioKind::hbt: {
            table.column_names = {"estimate", "n_samples", "seed"};
            table.rows.push_back({hbt_chaotic_g2(s.n_samples, s.seed),
                                  static_cast<double>(s.n_samples),
                                  static_cast<double>(s.seed)});
            break;
        }
        case ScenarioKind::bunching_stream: {
            table.column_names = {"event_index", "choice", "port"};
            const BunchingMode mode = s.mode == "phase-sign" ? BunchingMode::phase_sign
                                                             : BunchingMode::psi_choice;
            const auto events = random_bunching_stream(s.n_samples, s.seed, mode);
            for (std::size_t i = 0; i < events.size(); ++i) {
                table.rows.push_back({static_cast<double>(i),
                                      static_cast<double>(events[i].choice),
                                      static_cast<double>(events[i].output_port)});
            }
            break;
        }
    }
    return table;
}

std::string emit_csv(const SweepTable& table) {
    std::string out;
    for (std::size_t i = 0; i < table.column_names.size(); ++i) {
        if (i > 0) {
            out += ',';
        }
        out += table.column_names[i];
    }
    out += '\n';
    char buffer[40];
    for (const auto& row : table.rows) {
        if (row.size() != table.column_names.size()) {
            throw std::logic_error("emit_csv: ragged table");
        }
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i > 0) {
                out += ',';
            }
            std::snprintf(buffer, sizeof(buffer), "%.12g", row[i]);
            out += buffer;
        }
        out += '\n';
    }
    return out;
}

std::string emit_plot_script(const SweepTable& table, ScenarioKind kind) {
    (void)table;
    const std::string name = to_string(kind);
    std::string script;
    script += "# gnuplot script; run:  gnuplot " + name + ".plot\n";
    script += "set datafile separator ','\n";
    script += "set terminal pngcairo size 900,600\n";
    script += "set output '" + name + ".png'\n";
    script += "set grid\n";
    switch (kind) {
        case ScenarioKind::phi_sweep:
            script += "set xlabel 'phi (rad)'\n";
            script += "set ylabel 'g^{(2)}'\n";
            script += "set yrange [-0.05:1.3]\n";
            script += "plot '" + name + ".csv' every ::1 using 1:2 with lines lw 2 "
                      "title 'g2', \\\n     0.5 with lines dashtype 2 lc rgb 'red' "
                      "title 'incoherent baseline'\n";
            break;
        case ScenarioKind::hom_dip:
            script += "set xlabel 'tau (ps)'\n";
            script += "set ylabel 'g^{(2)}'\n";
            script += "set yrange [-0.05:1.05]\n";
            script += "plot '" + name + ".csv' every ::1 using 1:2 with lines lw 2 "
                      "title 'ensemble average', \\\n     '" + name + ".csv' every ::1 "
                      "using 1:3 with lines dashtype 4 title 'closed form', \\\n     "
                      "0.5 with lines dashtype 2 lc rgb 'red' title 'incoherent baseline'\n";
            break;
        case ScenarioKind::phi_map:
            script += "set xlabel 'phi (rad)'\n";
            script += "set ylabel 'tau (ps)'\n";
            script += "set cblabel 'g^{(2)}'\n";
            script += "set view map\n";
            script += "splot '" + name + ".csv' every ::1 using 2:1:3 with points "
                      "pointtype 5 pointsize 0.6 palette notitle\n";
            break;
        case ScenarioKind::mzi_sweep:
            script += "set xlabel 'psi (rad)'\n";
            script += "set ylabel 'intensity (E0^2), g^{(2)}'\n";
            script += "plot '" + name + ".csv' every ::1 using 1:2 with lines dashtype 2 "
                      "title 'I3', \\\n     '" + name + ".csv' every ::1 using 1:3 with "
                      "lines dashtype 4 title 'I4', \\\n     '" + name + ".csv' every ::1 "
                      "using 1:4 with lines lw 2 lc rgb 'red' title 'g2 (normalized)', "
                      "\\\n     0.5 with lines dashtype 3 title 'incoherent baseline'\n";
            break;
        case ScenarioKind::baseline:
            script += "set xlabel 'run'\n";
            script += "set ylabel 'estimate'\n";
            script += "set xrange [-1:1]\n";
            script += "plot '" + name + ".csv' every ::1 using (0):1 with points "
                      "pointtype 7 pointsize 2 title 'estimate', \\\n     0.5 with lines "
                      "dashtype 2 lc rgb 'red' title 'incoherent baseline'\n";
            break;
        case ScenarioKind::hbt:
            script += "set xlabel 'run'\n";
            script += "set ylabel 'estimate'\n";
            script += "set xrange [-1:1]\n";
            script += "plot '" + name + ".csv' every ::1 using (0):1 with points "
                      "pointtype 7 pointsize 2 title 'estimate', \\\n     2.0 with lines "
                      "dashtype 2 title 'thermal expectation', \\\n     0.5 with lines "
                      "dashtype 3 lc rgb 'red' title 'incoherent baseline'\n";
            break;
        case ScenarioKind::bunching_stream:
            script += "set xlabel 'output port'\n";
            script += "set ylabel 'events'\n";
            script += "set boxwidth 0.6\n";
            script += "set style fill solid 0.4\n";
            script += "set xrange [2:5]\n";
            script += "set xtics (3, 4)\n";
            script += "plot '" + name + ".csv' every ::1 using 3:(1.0) smooth frequency "
                      "with boxes notitle\n";
            break;
    }
    return script;
}

}  // namespace cohsim
