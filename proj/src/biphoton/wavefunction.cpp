#include "homlab/biphoton/wavefunction.hpp"

#include <algorithm>
#include <cmath>

#include "homlab/numeric/quadrature.hpp"
#include "homlab/support/errors.hpp"

namespace homlab::biphoton {

namespace {
constexpr double kPi = 3.14159265358979323846;
// FWHM of a unit-sigma gaussian
constexpr double kFwhmPerSigma = 2.35482004503094938;
}  // namespace

std::string to_string(Profile p) {
    return p == Profile::gaussian ? "gaussian" : "exponential-decay";
}

Profile profile_from_string(const std::string& s) {
    if (s == "gaussian") return Profile::gaussian;
    if (s == "exponential-decay" || s == "exponential_decay") return Profile::exponential_decay;
    throw ConfigError("unknown wavefunction profile: " + s);
}

void Wavefunction::validate() const {
    if (!(width_ns > 0.0) || !std::isfinite(width_ns)) {
        throw ConfigError("wavefunction width must be finite and > 0");
    }
    if (!std::isfinite(center_offset_ns)) {
        throw ConfigError("wavefunction center offset must be finite");
    }
}

std::complex<double> Wavefunction::amplitude(double tau_ns) const {
    if (!std::isfinite(tau_ns)) throw DomainError("temporal amplitude: non-finite tau");
    const double t = tau_ns - center_offset_ns;
    switch (profile) {
        case Profile::gaussian: {
            const double s2 = width_ns * width_ns;
            const double norm = std::pow(2.0 * kPi * s2, -0.25);
            return {norm * std::exp(-t * t / (4.0 * s2)), 0.0};
        }
        case Profile::exponential_decay: {
            if (t < 0.0) return {0.0, 0.0};
            return {std::exp(-t / (2.0 * width_ns)) / std::sqrt(width_ns), 0.0};
        }
    }
    return {0.0, 0.0};
}

double Wavefunction::intensity(double tau_ns) const {
    return std::norm(amplitude(tau_ns));
}

double Wavefunction::sample_delay(RandomStream& rng) const {
    switch (profile) {
        case Profile::gaussian:
            return rng.gaussian(center_offset_ns, width_ns);
        case Profile::exponential_decay:
            return center_offset_ns + rng.exponential(width_ns);
    }
    return center_offset_ns;
}

Wavefunction Wavefunction::gaussian_from_intensity_fwhm(double fwhm_ns) {
    Wavefunction wf;
    wf.profile = Profile::gaussian;
    wf.width_ns = fwhm_ns / kFwhmPerSigma;
    wf.validate();
    return wf;
}

Wavefunction Wavefunction::gaussian_from_intensity_convolution_fwhm(double fwhm_ns) {
    // |h|^2 has sigma; the self-convolution has sigma*sqrt(2).
    Wavefunction wf;
    wf.profile = Profile::gaussian;
    wf.width_ns = fwhm_ns / (kFwhmPerSigma * std::sqrt(2.0));
    wf.validate();
    return wf;
}

Wavefunction Wavefunction::gaussian_from_spectral_fwhm_mhz(double fwhm_mhz) {
    // |h~(omega)| = exp(-sigma^2 omega^2) up to normalization, so the spectral
    // amplitude FWHM in angular frequency is sqrt(2 ln 2)/sigma * sqrt(2)...
    // worked out: sigma = kFwhmPerSigma / (2 pi f_fwhm * sqrt(2)) with f in GHz.
    Wavefunction wf;
    wf.profile = Profile::gaussian;
    const double f_ghz = fwhm_mhz * 1e-3;
    wf.width_ns = kFwhmPerSigma / (2.0 * kPi * f_ghz * std::sqrt(2.0));
    wf.validate();
    return wf;
}

std::complex<double> temporal_amplitude(const Wavefunction& wf, double tau_ns) {
    wf.validate();
    return wf.amplitude(tau_ns);
}

double overlap(const Wavefunction& wf1, const Wavefunction& wf2, double dt_ns) {
    wf1.validate();
    wf2.validate();
    if (!std::isfinite(dt_ns)) throw DomainError("overlap: non-finite dt");

    // Integration support: union of both wavepacket supports.
    const double lo = std::min(wf1.center_offset_ns - wf1.support_ns(),
                               wf2.center_offset_ns - dt_ns - wf2.support_ns());
    const double hi = std::max(wf1.center_offset_ns + wf1.support_ns(),
                               wf2.center_offset_ns - dt_ns + wf2.support_ns());
    auto integrand = [&](double tau) {
        return std::conj(wf1.amplitude(tau)) * wf2.amplitude(tau + dt_ns);
    };
    const std::complex<double> a = integrate_complex(integrand, lo, hi, 1e-13);
    double v = std::norm(a);
    return std::clamp(v, 0.0, 1.0);
}

}  // namespace homlab::biphoton
