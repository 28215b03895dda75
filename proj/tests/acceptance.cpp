// Acceptance suite: end-to-end checks of the library's headline behavior,
// one pass/fail line per criterion. Exits nonzero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "cohsim/correlator.hpp"
#include "cohsim/field.hpp"
#include "cohsim/hom.hpp"
#include "cohsim/mzi.hpp"
#include "cohsim/rng.hpp"
#include "cohsim/scenario.hpp"

using namespace cohsim;

namespace {

int failures = 0;

void require(bool condition, const std::string& message) {
    if (!condition) {
        throw std::runtime_error(message);
    }
}

std::string format_double(double v) {
    std::ostringstream out;
    out << v;
    return out.str();
}

void criterion(int number, const std::string& label, double time_limit_s,
               const std::function<void()>& body) {
    const auto start = std::chrono::steady_clock::now();
    try {
        body();
        const double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (time_limit_s > 0.0 && elapsed > time_limit_s) {
            std::printf("[FAIL] %2d. %s (%.3f s exceeds %.1f s budget)\n", number,
                        label.c_str(), elapsed, time_limit_s);
            ++failures;
            return;
        }
        std::printf("[PASS] %2d. %s (%.3f s)\n", number, label.c_str(), elapsed);
    } catch (const std::exception& e) {
        std::printf("[FAIL] %2d. %s: %s\n", number, label.c_str(), e.what());
        ++failures;
    }
}

constexpr double kGhz = 1e9;
constexpr double kPs = 1e-12;

// --- criterion bodies -------------------------------------------------------

void coherent_phi_sweep() {
    // pointwise agreement with (1/2)(1 + cos 2*phi) over [-2*pi, 2*pi]
    const SweepTable table = run_scenario(parse_scenario(R"({"kind":"phi-sweep"})"));
    require(table.rows.size() == 801, "unexpected sweep length");
    for (const auto& row : table.rows) {
        const double expected = 0.5 * (1.0 + std::cos(2.0 * row[0]));
        require(std::abs(row[1] - expected) < 1e-12,
                "sweep deviates from the closed form at phi = " + format_double(row[0]));
    }
    // zeros at +-pi/2 and +-3*pi/2, unity at 0 and +-pi
    for (const double phi : {kPi / 2, -kPi / 2, 3 * kPi / 2, -3 * kPi / 2}) {
        require(g2_coherent({0.0, phi}) < 1e-12,
                "missing zero at phi = " + format_double(phi));
    }
    for (const double phi : {0.0, kPi, -kPi}) {
        require(std::abs(g2_coherent({0.0, phi}) - 1.0) < 1e-12,
                "missing unity value at phi = " + format_double(phi));
    }
}

void incoherent_baseline_half() {
    for (const std::uint64_t seed : {1ULL, 2ULL, 3ULL}) {
        for (const double phi : {0.0, 1.2, -2.5}) {
            const double estimate = incoherent_baseline(100000, seed, phi);
            require(std::abs(estimate - 0.5) <= 0.01,
                    "baseline " + format_double(estimate) + " off 0.5 at phi = " +
                        format_double(phi) + ", seed " + std::to_string(seed));
        }
    }
}

void ensemble_dip() {
    const SpectralEnsemble ensemble =
        gaussian_spectral_grid(100 * kGhz, 2 * kGhz, 200 * kGhz);
    require(ensemble.detunings.size() == 201, "expected the 201-event grid");

    std::vector<double> taus;
    for (int i = 0; i <= 1000; ++i) {
        taus.push_back(0.1 * static_cast<double>(i) * kPs);
    }
    const HomDipCurve curve = hom_dip_curve(ensemble, taus, kPi / 2, 0.0);
    require(curve.g2_values.front() < 1e-12, "dip minimum not at zero");
    for (std::size_t i = 0; i < taus.size(); ++i) {
        if (taus[i] >= 50.0 * kPs) {
            require(curve.g2_values[i] >= 0.48,
                    "plateau below 0.48 at tau = " + format_double(taus[i] / kPs) + " ps");
        }
        const double oracle = hom_dip_closed_form(100 * kGhz, taus[i], kPi / 2, 0.0);
        require(std::abs(curve.g2_values[i] - oracle) < 5e-3,
                "discrete sum drifts from the closed form at tau = " +
                    format_double(taus[i] / kPs) + " ps");
    }
}

void per_event_traces() {
    const std::vector<double> detunings_ghz = {0.0, 40.0, 80.0, 120.0};
    const std::vector<double> periods_ps = {-1.0, 12.5, 6.25, 1000.0 / 240.0};
    for (std::size_t k = 0; k < detunings_ghz.size(); ++k) {
        const double delta = detunings_ghz[k] * kGhz;
        require(event_g2(delta, 0.0, kPi / 2, 0.0) < 1e-12,
                "trace does not start at zero for delta = " +
                    format_double(detunings_ghz[k]) + " GHz");
        if (delta == 0.0) {
            for (double tau_ps = 0.0; tau_ps <= 100.0; tau_ps += 0.25) {
                require(event_g2(0.0, tau_ps * kPs, kPi / 2, 0.0) < 1e-12,
                        "zero-detuning trace not flat");
            }
            continue;
        }
        const double period = 1.0 / (2.0 * delta);
        require(std::abs(period / kPs - periods_ps[k]) < 1e-3,
                "period formula mismatch at delta = " + format_double(detunings_ghz[k]));
        for (double tau_ps = 0.0; tau_ps <= 15.0; tau_ps += 0.2) {
            const double tau = tau_ps * kPs;
            require(std::abs(event_g2(delta, tau + period, kPi / 2, 0.0) -
                             event_g2(delta, tau, kPi / 2, 0.0)) < 1e-9,
                    "trace not periodic at delta = " + format_double(detunings_ghz[k]));
        }
        require(std::abs(event_g2(delta, period / 2.0, kPi / 2, 0.0) - 1.0) < 1e-9,
                "period is not fundamental at delta = " + format_double(detunings_ghz[k]));
    }
}

void zero_delay_phase_map() {
    std::vector<double> phis;
    for (double phi = -kTwoPi; phi <= kTwoPi + 1e-9; phi += kPi / 200.0) {
        phis.push_back(phi);
    }
    const std::vector<double> taus = {0.0, 3.0 * kPs};
    for (const double bw_ghz : {40.0, 100.0}) {
        const SpectralEnsemble ensemble =
            gaussian_spectral_grid(bw_ghz * kGhz, 2 * kGhz, 200 * kGhz);
        const auto map = g2_phi_map(ensemble, taus, phis);
        for (std::size_t j = 0; j < phis.size(); ++j) {
            const double c = std::cos(phis[j]);
            require(std::abs(map[0][j] - c * c) < 1e-12,
                    "zero-delay row deviates from cos^2 at phi = " +
                        format_double(phis[j]) + ", bw = " + format_double(bw_ghz));
        }
    }
    const SpectralEnsemble ensemble =
        gaussian_spectral_grid(100 * kGhz, 2 * kGhz, 200 * kGhz);
    const std::vector<double> origin = {0.0};
    const auto map = g2_phi_map(ensemble, origin, origin);
    require(std::abs(map[0][0] - 1.0) < 1e-12, "in-phase zero-delay value is not 1");
}

void interferometer_sweep() {
    const double e0 = 1.4;
    Rng rng(71);
    for (int i = 0; i < 2000; ++i) {
        const double psi = 2.0 * kTwoPi * (rng.uniform() - 0.5);
        const MziOutputs out = mzi_outputs({psi, 1, e0});
        const double sin_half = std::sin(psi / 2.0);
        const double cos_half = std::cos(psi / 2.0);
        require(std::abs(out.i3 - e0 * e0 * sin_half * sin_half) < 1e-12 * e0 * e0,
                "I3 deviates from E0^2 sin^2(psi/2)");
        require(std::abs(out.i4 - e0 * e0 * cos_half * cos_half) < 1e-12 * e0 * e0,
                "I4 deviates from E0^2 cos^2(psi/2)");
    }
    for (const double psi : {0.0, kTwoPi, -kTwoPi}) {
        const MziOutputs out = mzi_outputs({psi, 1, e0});
        require(out.i3 < 1e-12 && std::abs(out.i4 - e0 * e0) < 1e-12,
                "output not fully bunched into port 4 at psi = " + format_double(psi));
    }
    for (const double psi : {kPi, -kPi}) {
        const MziOutputs out = mzi_outputs({psi, 1, e0});
        require(out.i4 < 1e-12 && std::abs(out.i3 - e0 * e0) < 1e-12,
                "output not fully bunched into port 3 at psi = " + format_double(psi));
    }
    for (int n = -2; n <= 2; ++n) {
        require(mzi_g2_normalized(n * kPi) < 1e-12,
                "normalized correlation nonzero at psi = n*pi");
    }
    require(std::abs(mzi_g2_normalized(kPi / 2) - 1.0) < 1e-12,
            "normalized correlation peak is not 1");
}

void bunching_amplitude_routing() {
    const double root2 = std::sqrt(2.0);
    // +pi/2 on input 1 -> (sqrt(2) i E0, 0); -pi/2 -> (0, sqrt(2) E0)
    const PlaneWaveField plain{1.0, 3.0, 11.0, 0.0};
    PlaneWaveField carrier = plain;

    carrier.initial_phase = kPi / 2;
    FieldPair out = apply_two_port(
        bs_matrix(), {eval_plane_wave(carrier, 0.0, 0.0), eval_plane_wave(plain, 0.0, 0.0)});
    require(std::abs(out.port_a - Complex{0.0, root2}) < 1e-12,
            "port 3 amplitude is not sqrt(2) i E0");
    require(std::abs(out.port_b) < 1e-12, "port 4 amplitude is not 0");

    carrier.initial_phase = -kPi / 2;
    out = apply_two_port(
        bs_matrix(), {eval_plane_wave(carrier, 0.0, 0.0), eval_plane_wave(plain, 0.0, 0.0)});
    require(std::abs(out.port_a) < 1e-12, "port 3 amplitude is not 0");
    require(std::abs(out.port_b - Complex{root2, 0.0}) < 1e-12,
            "port 4 amplitude is not sqrt(2) E0");

    // same routing away from the origin: a common propagation phase multiplies both
    carrier.initial_phase = kPi / 2;
    const double r = 0.83;
    const double t = 0.21;
    const double common = plain.wavevector * r - plain.angular_frequency * t;
    const Complex rotation = std::polar(1.0, common);
    out = apply_two_port(
        bs_matrix(), {eval_plane_wave(carrier, r, t), eval_plane_wave(plain, r, t)});
    require(std::abs(out.port_a - rotation * Complex{0.0, root2}) < 1e-12,
            "global phase not preserved at a generic evaluation point");
    require(std::abs(out.port_b) < 1e-12, "dark port leaks at a generic point");
}

void property_suites() {
    Rng rng(2026);
    // unitarity and energy conservation
    for (int i = 0; i < 1000; ++i) {
        TwoPortMatrix m = phase_shifter(rng.uniform_angle());
        for (int depth = 0; depth < 3; ++depth) {
            m = compose(bs_matrix(), m);
            m = compose(phase_shifter(rng.uniform_angle()), m);
        }
        require(unitarity_defect(m) < 1e-10, "composed matrix lost unitarity");
        const FieldPair in{{10.0 * (rng.uniform() - 0.5), 10.0 * (rng.uniform() - 0.5)},
                           {10.0 * (rng.uniform() - 0.5), 10.0 * (rng.uniform() - 0.5)}};
        const FieldPair out = apply_two_port(m, in);
        const double before = intensity(in.port_a) + intensity(in.port_b);
        const double after = intensity(out.port_a) + intensity(out.port_b);
        require(std::abs(after - before) <= 1e-10 * std::max(1.0, before),
                "energy not conserved");
    }
    // field route vs closed form on equal amplitudes
    for (int i = 0; i < 1000; ++i) {
        const double e0 = 0.2 + 4.0 * rng.uniform();
        const double k1 = 60.0 * (rng.uniform() - 0.5);
        const double k2 = 60.0 * (rng.uniform() - 0.5);
        const double w1 = 80.0 * rng.uniform();
        const double w2 = 80.0 * rng.uniform();
        const double p1 = rng.uniform_angle();
        const double p2 = rng.uniform_angle();
        const double r = 8.0 * (rng.uniform() - 0.5);
        const double t = 6.0 * rng.uniform();
        const CorrelationSample s =
            g2_from_fields({e0, k1, w1, p1}, {e0, k2, w2, p2}, r, t);
        const double closed = g2_coherent({(k1 - k2) * r - (w1 - w2) * t, p1 - p2});
        require(std::abs(s.g2 - closed) < 1e-10, "field and analytic routes disagree");
    }
    // interferometer closed form vs composed matrices
    for (int i = 0; i < 1000; ++i) {
        const double psi = 8.0 * kTwoPi * (rng.uniform() - 0.5);
        const TwoPortMatrix composed =
            compose(bs_matrix(), compose(phase_shifter(psi), bs_matrix()));
        const TwoPortMatrix closed = mzi_transfer(psi);
        const double defect = std::max(
            {std::abs(closed.m11 - composed.m11), std::abs(closed.m12 - composed.m12),
             std::abs(closed.m21 - composed.m21), std::abs(closed.m22 - composed.m22)});
        require(defect < 1e-12, "transfer closed form drifts from the composition");
    }
}

void chaotic_light_correlation() {
    const double chaotic = hbt_chaotic_g2(1000000, 20260810);
    require(std::abs(chaotic - 2.0) <= 0.02,
            "chaotic estimate " + format_double(chaotic) + " off 2.0");
    const double coherent = hbt_coherent_g2(1000000);
    require(coherent == 1.0,
            "coherent reference " + format_double(coherent) + " is not exactly 1");
}

void bunching_stream_determinism() {
    const auto events = random_bunching_stream(100000, 77, BunchingMode::phase_sign);
    require(events.size() == 100000, "stream length mismatch");
    std::int64_t port3 = 0;
    for (const auto& event : events) {
        const double total = event.i3 + event.i4;
        require(event.coincidence_product < 1e-12 * total * total,
                "event not fully bunched");
        require(event.output_port == bunching_port(event.choice, PhaseCarrier::input1),
                "port is not determined by the choice bit");
        port3 += event.output_port == 3 ? 1 : 0;
    }
    const double fraction = static_cast<double>(port3) / 100000.0;
    require(std::abs(fraction - 0.5) <= 0.01,
            "port-3 fraction " + format_double(fraction) + " off 0.5");

    const std::string config = R"({"kind":"bunching-stream","n_events":100000,"seed":77})";
    const std::string first = emit_csv(run_scenario(parse_scenario(config)));
    const std::string second = emit_csv(run_scenario(parse_scenario(config)));
    require(first == second, "stream CSV is not byte-identical across runs");
}

}  // namespace

int main() {
    criterion(1, "coherent phi sweep: closed form, zeros and unity points", 1.0,
              coherent_phi_sweep);
    criterion(2, "incoherent baseline 0.5 across phases and seeds", 1.0,
              incoherent_baseline_half);
    criterion(3, "spectral-ensemble dip: zero start, 0.5 plateau, oracle agreement", 2.0,
              ensemble_dip);
    criterion(4, "per-event detuning traces: zero start and 1/(2 delta) periods", 0.0,
              per_event_traces);
    criterion(5, "zero-delay phase map equals cos^2, bandwidth independent", 0.0,
              zero_delay_phase_map);
    criterion(6, "interferometer sweep: intensities, bunching points, sin^2 psi", 1.0,
              interferometer_sweep);
    criterion(7, "quarter-cycle input phase routes the full amplitude, global phase exact",
              0.0, bunching_amplitude_routing);
    criterion(8, "property suites: unitarity, energy, dual-route g2, transfer form", 0.0,
              property_suites);
    criterion(9, "chaotic split input gives 2.0, coherent reference exactly 1", 5.0,
              chaotic_light_correlation);
    criterion(10, "bunching stream: full bunching, balance, determinism, stable bytes",
              0.0, bunching_stream_determinism);

    if (failures > 0) {
        std::printf("%d criterion(s) failed\n", failures);
        return 1;
    }
    std::printf("all criteria passed\n");
    return 0;
}
