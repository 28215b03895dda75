#include "cohsim/mzi.hpp"

#include <cmath>
#include <stdexcept>

#include "cohsim/rng.hpp"

namespace cohsim {

TwoPortMatrix mzi_transfer(double psi) {
    const Complex e = std::polar(1.0, psi);
    const Complex diag = 0.5 * (1.0 - e);
    const Complex off = Complex{0.0, 0.5} * (1.0 + e);
    return {diag, off, off, -diag};
}

MziOutputs mzi_outputs(const MziConfig& config) {
    if (config.input_port != 1 && config.input_port != 2) {
        throw std::invalid_argument("mzi_outputs: input_port must be 1 or 2");
    }
    if (!(config.amplitude > 0.0)) {
        throw std::invalid_argument("mzi_outputs: amplitude must be positive");
    }
    const Complex e0{config.amplitude, 0.0};
    const FieldPair input =
        config.input_port == 1 ? FieldPair{e0, Complex{}} : FieldPair{Complex{}, e0};

    MziOutputs out;
    out.fields = apply_two_port(mzi_transfer(config.psi), input);
    out.i3 = intensity(out.fields.port_a);
    out.i4 = intensity(out.fields.port_b);
    return out;
}

double mzi_g2_normalized(double psi) {
    const double s = std::sin(psi);
    return s * s;
}

int bunching_port(int sign, PhaseCarrier carrier) {
    if (sign != +1 && sign != -1) {
        throw std::invalid_argument("bunching_port: sign must be +1 or -1");
    }
    if (carrier == PhaseCarrier::input1) {
        return sign > 0 ? 3 : 4;
    }
    return sign > 0 ? 4 : 3;
}

std::vector<BunchingEvent> random_bunching_stream(std::int64_t n_events,
                                                  std::uint64_t seed,
                                                  BunchingMode mode) {
    if (n_events < 1) {
        throw std::invalid_argument("random_bunching_stream: n_events must be >= 1");
    }
    const TwoPortMatrix bs = bs_matrix();
    Rng rng(seed);
    std::vector<BunchingEvent> events;
    events.reserve(static_cast<std::size_t>(n_events));
    for (std::int64_t i = 0; i < n_events; ++i) {
        BunchingEvent event;
        event.choice = rng.uniform_sign();
        if (mode == BunchingMode::phase_sign) {
            // sign*pi/2 phase on input 1: fields (sign*i*E0, E0), E0 = 1.
            const FieldPair out = apply_two_port(
                bs, {Complex{0.0, static_cast<double>(event.choice)}, Complex{1.0, 0.0}});
            event.i3 = intensity(out.port_a);
            event.i4 = intensity(out.port_b);
            event.output_port = bunching_port(event.choice, PhaseCarrier::input1);
        } else {
            const double psi = event.choice > 0 ? kPi : 0.0;
            const MziOutputs out = mzi_outputs({psi, 1, 1.0});
            event.i3 = out.i3;
            event.i4 = out.i4;
            event.output_port = event.i3 > event.i4 ? 3 : 4;
        }
        event.coincidence_product = event.i3 * event.i4;
        events.push_back(event);
    }
    return events;
}

}  // namespace cohsim
