#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace cohsim {

/// Discrete detuning spectrum with normalized weights.
struct SpectralEnsemble {
    std::vector<double> detunings;  ///< Hz, strictly increasing
    std::vector<double> weights;    ///< nonnegative, sum to 1
    double bandwidth_fwhm = 0.0;    ///< Hz
};

/// Ensemble-averaged g2 along a delay grid.
struct HomDipCurve {
    std::vector<double> taus;  ///< s
    std::vector<double> g2_values;
    double phi = 0.0;            ///< rad
    double center_offset = 0.0;  ///< Hz
};

/// Standard deviation of a Gaussian with the given full width at half maximum.
double gaussian_sigma_from_fwhm(double fwhm);

/// Symmetric uniform grid of detunings k*step with |k*step| <= half_span,
/// weighted by a Gaussian of FWHM bw_fwhm and normalized to unit sum.
/// Throws std::invalid_argument on non-positive arguments or half_span < step.
SpectralEnsemble gaussian_spectral_grid(double bw_fwhm, double step, double half_span);

/// Monte-Carlo alternative to the deterministic grid: n detunings drawn from
/// the Gaussian line shape (sorted ascending), equal weights 1/n.
SpectralEnsemble sampled_spectral_ensemble(double bw_fwhm, int n_samples,
                                           std::uint64_t seed);

/// Per-event correlation (1/2)(1 + cos 2(phi - 2*pi*(delta + center_offset)*tau)).
/// The delay enters only through the frequency-difference phase, so the
/// oscillation period in tau is 1/(2*delta) for center_offset = 0.
double event_g2(double delta, double tau, double phi, double center_offset);

/// Weighted ensemble average of event_g2 on a delay grid.
/// Throws std::invalid_argument on an empty tau grid.
HomDipCurve hom_dip_curve(const SpectralEnsemble& ensemble, std::span<const double> taus,
                          double phi, double center_offset);

/// Continuous-Gaussian limit of the ensemble average:
/// (1/2)(1 + cos 2(phi - 2*pi*center_offset*tau) * exp(-8*pi^2*sigma^2*tau^2)).
double hom_dip_closed_form(double bw_fwhm, double tau, double phi, double center_offset);

/// Row i, column j = ensemble-averaged g2 at (taus[i], phis[j]).
/// Throws std::invalid_argument on empty grids.
std::vector<std::vector<double>> g2_phi_map(const SpectralEnsemble& ensemble,
                                            std::span<const double> taus,
                                            std::span<const double> phis);

}  // namespace cohsim
