#pragma once

#include <complex>
#include <string>

#include "homlab/numeric/rng.hpp"

namespace homlab::biphoton {

enum class Profile { gaussian, exponential_decay };

std::string to_string(Profile p);
Profile profile_from_string(const std::string& s);

/// Temporal amplitude h(tau) of a photon pair, normalized so that the
/// quadrature of |h|^2 over the full support is 1.
///
/// gaussian:           h(tau) = (2*pi*sigma^2)^(-1/4) * exp(-(tau-c)^2 / (4*sigma^2))
///                     width_ns = sigma, the standard deviation of |h|^2.
/// exponential_decay:  h(tau) = theta(tau-c) / sqrt(tau1) * exp(-(tau-c) / (2*tau1))
///                     width_ns = tau1, the 1/e amplitude time.
struct Wavefunction {
    Profile profile = Profile::gaussian;
    double width_ns = 1.0;
    double center_offset_ns = 0.0;

    void validate() const;

    /// h(tau) in 1/sqrt(ns). Rejects non-finite tau.
    std::complex<double> amplitude(double tau_ns) const;

    /// |h(tau)|^2 in 1/ns.
    double intensity(double tau_ns) const;

    /// Half-width of the support used by quadratures and samplers (>= 20 widths).
    double support_ns() const { return 20.0 * width_ns; }

    /// Draw a delay distributed as |h|^2.
    double sample_delay(RandomStream& rng) const;

    /// Gaussian wavefunction whose intensity |h|^2 has the given FWHM.
    static Wavefunction gaussian_from_intensity_fwhm(double fwhm_ns);

    /// Gaussian wavefunction whose intensity self-convolution |h|^2 (*) |h|^2
    /// has the given FWHM (the shape a coincidence histogram between two ideal
    /// detectors of twin sources would show).
    static Wavefunction gaussian_from_intensity_convolution_fwhm(double fwhm_ns);

    /// Gaussian wavefunction whose spectral amplitude has the given FWHM.
    static Wavefunction gaussian_from_spectral_fwhm_mhz(double fwhm_mhz);
};

/// h(tau) for the selected profile; thin free-function wrapper.
std::complex<double> temporal_amplitude(const Wavefunction& wf, double tau_ns);

/// |integral h1*(tau) h2(tau + dt) dtau|^2 by adaptive quadrature.
/// Dimensionless, in [0, 1]; symmetric under (wf1, wf2, dt) -> (wf2, wf1, -dt).
double overlap(const Wavefunction& wf1, const Wavefunction& wf2, double dt_ns);

}  // namespace homlab::biphoton
