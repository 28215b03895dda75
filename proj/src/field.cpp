#include "cohsim/field.hpp"

#include <cmath>

namespace cohsim {

Complex eval_plane_wave(const PlaneWaveField& field, double r, double t) {
    const double theta =
        field.wavevector * r - field.angular_frequency * t + field.initial_phase;
    return field.amplitude * Complex{std::cos(theta), std::sin(theta)};
}

TwoPortMatrix bs_matrix() {
    const double s = 1.0 / std::sqrt(2.0);
    return {{s, 0.0}, {0.0, s}, {0.0, s}, {s, 0.0}};
}

TwoPortMatrix phase_shifter(double psi) {
    return {{1.0, 0.0}, {}, {}, std::polar(1.0, psi)};
}

TwoPortMatrix compose(const TwoPortMatrix& second, const TwoPortMatrix& first) {
    return {
        second.m11 * first.m11 + second.m12 * first.m21,
        second.m11 * first.m12 + second.m12 * first.m22,
        second.m21 * first.m11 + second.m22 * first.m21,
        second.m21 * first.m12 + second.m22 * first.m22,
    };
}

FieldPair apply_two_port(const TwoPortMatrix& m, const FieldPair& input) {
    return {m.m11 * input.port_a + m.m12 * input.port_b,
            m.m21 * input.port_a + m.m22 * input.port_b};
}

double intensity(Complex a) { return std::norm(a); }

double unitarity_defect(const TwoPortMatrix& m) {
    const Complex a11 = std::conj(m.m11) * m.m11 + std::conj(m.m21) * m.m21;
    const Complex a12 = std::conj(m.m11) * m.m12 + std::conj(m.m21) * m.m22;
    const Complex a21 = std::conj(m.m12) * m.m11 + std::conj(m.m22) * m.m21;
    const Complex a22 = std::conj(m.m12) * m.m12 + std::conj(m.m22) * m.m22;
    return std::max({std::abs(a11 - 1.0), std::abs(a12), std::abs(a21),
                     std::abs(a22 - 1.0)});
}

}  // namespace cohsim
