#pragma once

#include "homlab/biphoton/wavefunction.hpp"

namespace homlab::biphoton {

/// Lossless beam splitter. Loss sits in the detector model, so T + R = 1.
struct BeamSplitter {
    double transmittance = 0.5;
    double reflectance = 0.5;

    void validate() const;
};

/// Parameters of the four-fold interference curve between two heralded
/// sources meeting at a beam splitter.
struct HomModelParams {
    Wavefunction wf1;
    Wavefunction wf2;
    BeamSplitter bs;
    double heralded_g2 = 0.0;         // averaged heralded auto-correlation, >= 0
    double indistinguishability = 1.0;  // scales the interference term, in [0, 1]

    void validate() const;
};

/// Four-fold coincidence curve vs herald time difference, relative units:
///   P(dt) = (T^2 + R^2) X - 2 T R I |integral h1* h2(.+dt)|^2 + T R g2 X
/// with X = (int |h1|^2)(int |h2|^2) = 1 for normalized wavefunctions.
double hom_curve(const HomModelParams& p, double dt_ns);

/// Baseline of the curve (dt -> infinity): (T^2 + R^2 + T R g2) X.
double hom_baseline(const HomModelParams& p);

/// Dip visibility (baseline - minimum) / baseline.
double visibility(double baseline, double minimum);

/// Closed-form visibility of the model curve at perfect overlap:
///   V = 2 T R I / (T^2 + R^2 + T R g2).
double model_visibility(const HomModelParams& p);

/// Attenuation of the dip caused by herald timing uncertainty: the expected
/// overlap of the two wavepackets when their center difference is gaussian
/// with the given rss sigma, E[overlap(delta)], delta ~ N(0, sigma^2).
double dip_depth_factor(const Wavefunction& wf1, const Wavefunction& wf2,
                        double herald_jitter_rss_ns);

}  // namespace homlab::biphoton
