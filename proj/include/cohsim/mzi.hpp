#pragma once

#include <cstdint>
#include <vector>

#include "cohsim/field.hpp"

namespace cohsim {

/// Interferometer setting: internal phase-shifter angle, driven input port
/// and input amplitude.
struct MziConfig {
    double psi = 0.0;        ///< rad
    int input_port = 1;      ///< 1 or 2
    double amplitude = 1.0;  ///< E0 > 0
};

struct MziOutputs {
    FieldPair fields;
    double i3 = 0.0;
    double i4 = 0.0;
};

/// Which input carries the +-pi/2 phase in the two-input bunching setup.
enum class PhaseCarrier { input1, input2 };

/// How the per-event random choice is realized.
enum class BunchingMode { phase_sign, psi_choice };

/// One fully bunched event: the drawn choice, the deterministic output port,
/// and the propagated intensities.
struct BunchingEvent {
    int choice = +1;      ///< +1 or -1
    int output_port = 3;  ///< 3 or 4
    double i3 = 0.0;
    double i4 = 0.0;
    double coincidence_product = 0.0;  ///< i3 * i4
};

/// Closed-form transfer of beam splitter / phase shifter / beam splitter:
/// (1/2)[[1 - e^{i psi}, i(1 + e^{i psi})], [i(1 + e^{i psi}), -(1 - e^{i psi})]].
TwoPortMatrix mzi_transfer(double psi);

/// Output fields and intensities. For input port 1 with amplitude E0,
/// I3 = E0^2 sin^2(psi/2) and I4 = E0^2 cos^2(psi/2).
MziOutputs mzi_outputs(const MziConfig& config);

/// Intensity product normalized to unit peak: sin^2(psi), zero at psi = n*pi.
double mzi_g2_normalized(double psi);

/// Deterministic routing of the bunched output on a single beam splitter.
/// Phase carried by input 1: +1 -> port 3, -1 -> port 4; carried by input 2
/// the mapping flips.
int bunching_port(int sign, PhaseCarrier carrier);

/// Stream of fully bunched events, one uniformly drawn choice per event.
/// phase_sign mode propagates (sign*i*E0, E0) through the beam splitter;
/// psi_choice mode drives the interferometer at psi = pi (choice +1) or
/// psi = 0 (choice -1), which lands on the same port for the same choice.
std::vector<BunchingEvent> random_bunching_stream(std::int64_t n_events,
                                                  std::uint64_t seed,
                                                  BunchingMode mode);

}  // namespace cohsim
