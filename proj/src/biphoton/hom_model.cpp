#include "homlab/biphoton/hom_model.hpp"

#include <cmath>

#include "homlab/numeric/quadrature.hpp"
#include "homlab/support/errors.hpp"

namespace homlab::biphoton {

void BeamSplitter::validate() const {
    if (!(transmittance >= 0.0 && transmittance <= 1.0) ||
        !(reflectance >= 0.0 && reflectance <= 1.0)) {
        throw ConfigError("beam splitter T and R must lie in [0, 1]");
    }
    if (std::abs(transmittance + reflectance - 1.0) > 1e-12) {
        throw ConfigError("beam splitter must be lossless: T + R = 1");
    }
}

void HomModelParams::validate() const {
    wf1.validate();
    wf2.validate();
    bs.validate();
    if (!(heralded_g2 >= 0.0)) throw ConfigError("heralded g2 must be >= 0");
    if (!(indistinguishability >= 0.0 && indistinguishability <= 1.0)) {
        throw ConfigError("indistinguishability must lie in [0, 1]");
    }
}

double hom_curve(const HomModelParams& p, double dt_ns) {
    p.validate();
    const double t = p.bs.transmittance, r = p.bs.reflectance;
    const double ovl = overlap(p.wf1, p.wf2, dt_ns);
    return (t * t + r * r) - 2.0 * t * r * p.indistinguishability * ovl +
           t * r * p.heralded_g2;
}

double hom_baseline(const HomModelParams& p) {
    p.validate();
    const double t = p.bs.transmittance, r = p.bs.reflectance;
    return t * t + r * r + t * r * p.heralded_g2;
}

double visibility(double baseline, double minimum) {
    if (!(baseline > 0.0)) throw DomainError("visibility: baseline must be > 0");
    if (minimum < 0.0 || minimum > baseline) {
        throw DomainError("visibility: minimum must lie in [0, baseline]");
    }
    return (baseline - minimum) / baseline;
}

double model_visibility(const HomModelParams& p) {
    p.validate();
    const double t = p.bs.transmittance, r = p.bs.reflectance;
    return 2.0 * t * r * p.indistinguishability / (t * t + r * r + t * r * p.heralded_g2);
}

double dip_depth_factor(const Wavefunction& wf1, const Wavefunction& wf2,
                        double herald_jitter_rss_ns) {
    wf1.validate();
    wf2.validate();
    if (herald_jitter_rss_ns < 0.0 || !std::isfinite(herald_jitter_rss_ns)) {
        throw DomainError("dip depth factor: jitter must be finite and >= 0");
    }
    if (herald_jitter_rss_ns == 0.0) return overlap(wf1, wf2, 0.0);

    const double s = herald_jitter_rss_ns;
    const double span = 8.0 * s;
    auto integrand = [&](double d) {
        const double g = std::exp(-d * d / (2.0 * s * s)) / (s * std::sqrt(2.0 * 3.14159265358979323846));
        return g * overlap(wf1, wf2, d);
    };
    return integrate(integrand, -span, span, 1e-10);
}

}  // namespace homlab::biphoton
