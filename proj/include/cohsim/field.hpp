#pragma once

#include <complex>
#include <numbers>

namespace cohsim {

using Complex = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Traveling plane wave E0 * exp(i(k*r - w*t + phi0)).
struct PlaneWaveField {
    double amplitude = 1.0;          ///< E0 >= 0, field units
    double wavevector = 0.0;         ///< k, rad/m
    double angular_frequency = 0.0;  ///< w, rad/s
    double initial_phase = 0.0;      ///< phi0, rad
};

/// Complex amplitudes at the two ports of a splitter or interferometer.
struct FieldPair {
    Complex port_a{};
    Complex port_b{};
};

/// 2x2 complex transfer matrix, row-major entries.
struct TwoPortMatrix {
    Complex m11, m12, m21, m22;

    static TwoPortMatrix identity() { return {{1.0, 0.0}, {}, {}, {1.0, 0.0}}; }
};

/// Field amplitude of a plane wave at position r (m) and time t (s).
Complex eval_plane_wave(const PlaneWaveField& field, double r, double t);

/// Lossless 50:50 beam splitter, (1/sqrt(2)) [[1, i], [i, 1]].
TwoPortMatrix bs_matrix();

/// Single-arm phase shifter diag(1, exp(i*psi)).
TwoPortMatrix phase_shifter(double psi);

/// Matrix product second * first; `first` acts on the input first.
TwoPortMatrix compose(const TwoPortMatrix& second, const TwoPortMatrix& first);

/// Matrix-vector product on a port pair.
FieldPair apply_two_port(const TwoPortMatrix& m, const FieldPair& input);

/// |a|^2.
double intensity(Complex a);

/// Largest entry of |M^dagger M - I|; vanishes for unitary matrices.
double unitarity_defect(const TwoPortMatrix& m);

}  // namespace cohsim
