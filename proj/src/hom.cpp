#include "cohsim/hom.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "cohsim/field.hpp"
#include "cohsim/rng.hpp"

namespace cohsim {

double gaussian_sigma_from_fwhm(double fwhm) {
    return fwhm / (2.0 * std::sqrt(2.0 * std::log(2.0)));
}

SpectralEnsemble gaussian_spectral_grid(double bw_fwhm, double step, double half_span) {
    if (!(bw_fwhm > 0.0)) {
        throw std::invalid_argument("gaussian_spectral_grid: bw_fwhm must be positive");
    }
    if (!(step > 0.0)) {
        throw std::invalid_argument("gaussian_spectral_grid: step must be positive");
    }
    if (!(half_span >= step)) {
        throw std::invalid_argument("gaussian_spectral_grid: half_span must be >= step");
    }

    // Grid built outward from zero so it is exactly symmetric.
    const auto n_side = static_cast<long>(std::floor(half_span / step + 1e-9));
    const double sigma = gaussian_sigma_from_fwhm(bw_fwhm);
    const double inv_two_sigma_sq = 1.0 / (2.0 * sigma * sigma);

    SpectralEnsemble ensemble;
    ensemble.bandwidth_fwhm = bw_fwhm;
    ensemble.detunings.reserve(2 * n_side + 1);
    ensemble.weights.reserve(2 * n_side + 1);
    double total = 0.0;
    for (long k = -n_side; k <= n_side; ++k) {
        const double delta = static_cast<double>(k) * step;
        const double weight = std::exp(-delta * delta * inv_two_sigma_sq);
        ensemble.detunings.push_back(delta);
        ensemble.weights.push_back(weight);
        total += weight;
    }
    for (double& w : ensemble.weights) {
        w /= total;
    }
    return ensemble;
}

SpectralEnsemble sampled_spectral_ensemble(double bw_fwhm, int n_samples,
                                           std::uint64_t seed) {
    if (!(bw_fwhm > 0.0)) {
        throw std::invalid_argument("sampled_spectral_ensemble: bw_fwhm must be positive");
    }
    if (n_samples < 1) {
        throw std::invalid_argument("sampled_spectral_ensemble: n_samples must be >= 1");
    }
    const double sigma = gaussian_sigma_from_fwhm(bw_fwhm);
    Rng rng(seed);
    SpectralEnsemble ensemble;
    ensemble.bandwidth_fwhm = bw_fwhm;
    ensemble.detunings.reserve(n_samples);
    for (int i = 0; i < n_samples; ++i) {
        ensemble.detunings.push_back(sigma * rng.gaussian_pair().first);
    }
    std::sort(ensemble.detunings.begin(), ensemble.detunings.end());
    ensemble.weights.assign(n_samples, 1.0 / static_cast<double>(n_samples));
    return ensemble;
}

double event_g2(double delta, double tau, double phi, double center_offset) {
    const double total = phi - kTwoPi * (delta + center_offset) * tau;
    return 0.5 * (1.0 + std::cos(2.0 * total));
}

HomDipCurve hom_dip_curve(const SpectralEnsemble& ensemble, std::span<const double> taus,
                          double phi, double center_offset) {
    if (taus.empty()) {
        throw std::invalid_argument("hom_dip_curve: empty tau grid");
    }
    HomDipCurve curve;
    curve.phi = phi;
    curve.center_offset = center_offset;
    curve.taus.assign(taus.begin(), taus.end());
    curve.g2_values.reserve(taus.size());
    for (const double tau : taus) {
        double sum = 0.0;
        for (std::size_t j = 0; j < ensemble.detunings.size(); ++j) {
            sum += ensemble.weights[j] *
                   event_g2(ensemble.detunings[j], tau, phi, center_offset);
        }
        curve.g2_values.push_back(sum);
    }
    return curve;
}

double hom_dip_closed_form(double bw_fwhm, double tau, double phi, double center_offset) {
    if (!(bw_fwhm > 0.0)) {
        throw std::invalid_argument("hom_dip_closed_form: bw_fwhm must be positive");
    }
    const double sigma = gaussian_sigma_from_fwhm(bw_fwhm);
    const double envelope = std::exp(-8.0 * kPi * kPi * sigma * sigma * tau * tau);
    const double beat = std::cos(2.0 * (phi - kTwoPi * center_offset * tau));
    return 0.5 * (1.0 + beat * envelope);
}

std::vector<std::vector<double>> g2_phi_map(const SpectralEnsemble& ensemble,
                                            std::span<const double> taus,
                                            std::span<const double> phis) {
    if (taus.empty() || phis.empty()) {
        throw std::invalid_argument("g2_phi_map: empty grid");
    }
    std::vector<std::vector<double>> map;
    map.reserve(taus.size());
    for (const double tau : taus) {
        std::vector<double> row;
        row.reserve(phis.size());
        for (const double phi : phis) {
            double sum = 0.0;
            for (std::size_t j = 0; j < ensemble.detunings.size(); ++j) {
                sum += ensemble.weights[j] * event_g2(ensemble.detunings[j], tau, phi, 0.0);
            }
            row.push_back(sum);
        }
        map.push_back(std::move(row));
    }
    return map;
}

}  // namespace cohsim
