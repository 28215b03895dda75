#include "cohsim/correlator.hpp"

#include <cmath>
#include <stdexcept>

#include "cohsim/rng.hpp"

namespace cohsim {

double g2_coherent(const RelativePhaseState& state) {
    const double total = state.delta + state.phi;
    return 0.5 * (1.0 + std::cos(2.0 * total));
}

CorrelationSample g2_from_fields(const PlaneWaveField& e1, const PlaneWaveField& e2,
                                 double r, double t) {
    if (!(e1.amplitude > 0.0) || !(e2.amplitude > 0.0)) {
        throw std::invalid_argument(
            "g2_from_fields: zero-amplitude input, mean intensity vanishes");
    }
    const FieldPair out = apply_two_port(
        bs_matrix(), {eval_plane_wave(e1, r, t), eval_plane_wave(e2, r, t)});

    CorrelationSample sample;
    sample.i3 = intensity(out.port_a);
    sample.i4 = intensity(out.port_b);
    sample.product = sample.i3 * sample.i4;
    const double mean_port =
        0.5 * (e1.amplitude * e1.amplitude + e2.amplitude * e2.amplitude);
    sample.g2 = sample.product / (mean_port * mean_port);
    return sample;
}

std::vector<AnticorrelationSolution> anticorrelation_phases(int n_max) {
    if (n_max < 1) {
        throw std::invalid_argument("anticorrelation_phases: n_max must be >= 1");
    }
    std::vector<AnticorrelationSolution> solutions;
    solutions.reserve(2 * static_cast<std::size_t>(n_max));
    for (int n = 1; n <= n_max; ++n) {
        const double magnitude = (n - 0.5) * kPi;
        solutions.push_back({n, +1, magnitude});
        solutions.push_back({n, -1, -magnitude});
    }
    return solutions;
}

double coincidence_time_average(std::span<const double> trace_a,
                                std::span<const double> trace_b, double window) {
    if (trace_a.size() != trace_b.size()) {
        throw std::invalid_argument("coincidence_time_average: trace lengths differ");
    }
    if (trace_a.size() < 2) {
        throw std::invalid_argument("coincidence_time_average: need at least 2 samples");
    }
    if (!(window > 0.0)) {
        throw std::invalid_argument("coincidence_time_average: window must be positive");
    }
    const std::size_t n = trace_a.size();
    double sum = 0.5 * (trace_a[0] * trace_b[0] + trace_a[n - 1] * trace_b[n - 1]);
    for (std::size_t i = 1; i + 1 < n; ++i) {
        sum += trace_a[i] * trace_b[i];
    }
    // step = window / (n - 1); the window cancels against the 1/window prefactor.
    return sum / static_cast<double>(n - 1);
}

double incoherent_baseline(std::int64_t n_samples, std::uint64_t seed, double phi) {
    if (n_samples < 1) {
        throw std::invalid_argument("incoherent_baseline: n_samples must be >= 1");
    }
    Rng rng(seed);
    double sum = 0.0;
    for (std::int64_t i = 0; i < n_samples; ++i) {
        sum += g2_coherent({rng.uniform_angle(), phi});
    }
    return sum / static_cast<double>(n_samples);
}

namespace {

// Running means keep the ratio exact for a constant input: the increments
// vanish identically, so numerator and denominator are the same double.
template <typename DrawAmplitude>
double hbt_split_g2(std::int64_t n_samples, DrawAmplitude&& draw) {
    const TwoPortMatrix bs = bs_matrix();
    double mean3 = 0.0;
    double mean4 = 0.0;
    double mean_product = 0.0;
    for (std::int64_t i = 0; i < n_samples; ++i) {
        const FieldPair out = apply_two_port(bs, {draw(), Complex{}});
        const double i3 = intensity(out.port_a);
        const double i4 = intensity(out.port_b);
        const double count = static_cast<double>(i + 1);
        mean3 += (i3 - mean3) / count;
        mean4 += (i4 - mean4) / count;
        mean_product += (i3 * i4 - mean_product) / count;
    }
    return mean_product / (mean3 * mean4);
}

}  // namespace

double hbt_chaotic_g2(std::int64_t n_samples, std::uint64_t seed) {
    if (n_samples < 1) {
        throw std::invalid_argument("hbt_chaotic_g2: n_samples must be >= 1");
    }
    Rng rng(seed);
    return hbt_split_g2(n_samples, [&rng] { return rng.circular_gaussian(); });
}

double hbt_coherent_g2(std::int64_t n_samples) {
    if (n_samples < 1) {
        throw std::invalid_argument("hbt_coherent_g2: n_samples must be >= 1");
    }
    return hbt_split_g2(n_samples, [] { return Complex{1.0, 0.0}; });
}

}  // namespace cohsim
