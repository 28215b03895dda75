#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "cohsim/field.hpp"

namespace cohsim {

/// Phase state entering the correlation formulas. `delta` collects the
/// propagation part (k1 - k2)*r - (w1 - w2)*t, `phi` the initial-phase
/// difference phi1 - phi2; only the sum delta + phi matters.
struct RelativePhaseState {
    double delta = 0.0;  ///< rad
    double phi = 0.0;    ///< rad
};

/// Intensities and normalized correlation of one coincidence evaluation.
struct CorrelationSample {
    double i3 = 0.0;
    double i4 = 0.0;
    double product = 0.0;  ///< i3 * i4
    double g2 = 0.0;       ///< product / (mean single-port intensity)^2
};

/// One solution of the anticorrelation condition, phase = sign*(n - 1/2)*pi.
struct AnticorrelationSolution {
    int n = 1;           ///< basis index, n >= 1
    int sign = +1;       ///< +1 or -1
    double phase = 0.0;  ///< rad
};

/// Normalized coincidence for two equal-amplitude coherent inputs:
/// (1/2)(1 + cos 2(delta + phi)), i.e. cos^2(delta + phi).
double g2_coherent(const RelativePhaseState& state);

/// Field-level route: evaluates both plane waves at (r, t), splits them on
/// the 50:50 beam splitter and normalizes the intensity product by the
/// square of the phase-averaged single-port mean (E01^2 + E02^2)/2.
/// Throws std::invalid_argument when either amplitude is not positive.
CorrelationSample g2_from_fields(const PlaneWaveField& e1, const PlaneWaveField& e2,
                                 double r, double t);

/// All 2*n_max anticorrelation phases, n = 1..n_max with both signs.
/// Throws std::invalid_argument when n_max < 1.
std::vector<AnticorrelationSolution> anticorrelation_phases(int n_max);

/// Trapezoidal estimate of (1/window) * integral of trace_a(t)*trace_b(t)
/// over [0, window]; traces must sample the window uniformly with equal
/// length >= 2. Converges at O(step^2).
double coincidence_time_average(std::span<const double> trace_a,
                                std::span<const double> trace_b, double window);

/// Monte-Carlo mean of g2_coherent over delta ~ U[0, 2*pi) with the seeded
/// generator; expectation 1/2 independent of phi. Sequential accumulation
/// in draw order.
double incoherent_baseline(std::int64_t n_samples, std::uint64_t seed, double phi);

/// Chaotic (circular-Gaussian) single input split on the beam splitter with
/// vacuum at the second port; returns <I3*I4> / (<I3><I4>), expectation 2.
double hbt_chaotic_g2(std::int64_t n_samples, std::uint64_t seed);

/// Same accumulation with a constant unit-amplitude input; returns 1 exactly.
double hbt_coherent_g2(std::int64_t n_samples);

}  // namespace cohsim
