#include "homlab/biphoton/purity.hpp"

#include <cmath>
#include <vector>

#include "homlab/support/errors.hpp"
#include "homlab/support/threads.hpp"

namespace homlab::biphoton {

namespace {

// Tr rho^2 / (Tr rho)^2 on a fixed grid. With A_ik = sqrt(w_k) h(t_i - tau_k)
// the smeared density matrix is rho = A A^T (times the grid step), so both
// traces reduce to the small matrix M = A^T A over jitter nodes:
//   Tr rho   = dt * Tr M
//   Tr rho^2 = dt^2 * ||M||_F^2
double purity_on_grid(const Wavefunction& wf, double sigma_j, int n_time, int n_jitter) {
    const double half = 10.0 * (wf.width_ns + sigma_j);
    const double lo = wf.center_offset_ns - half;
    const double dt = 2.0 * half / (n_time - 1);

    std::vector<double> tau(n_jitter), w(n_jitter);
    if (sigma_j == 0.0 || n_jitter == 1) {
        tau.assign(1, 0.0);
        w.assign(1, 1.0);
    } else {
        const double jhalf = 8.0 * sigma_j;
        const double dj = 2.0 * jhalf / (n_jitter - 1);
        for (int k = 0; k < n_jitter; ++k) {
            const double x = -jhalf + k * dj;
            tau[k] = x;
            w[k] = std::exp(-x * x / (2.0 * sigma_j * sigma_j));
        }
    }
    const int nj = static_cast<int>(tau.size());

    std::vector<double> a(static_cast<size_t>(n_time) * nj);
    #pragma omp parallel for num_threads(max_threads()) schedule(static)
    for (int i = 0; i < n_time; ++i) {
        const double t = lo + i * dt;
        for (int k = 0; k < nj; ++k) {
            a[static_cast<size_t>(i) * nj + k] =
                std::sqrt(w[k]) * std::real(wf.amplitude(t - tau[k]));
        }
    }

    std::vector<double> m(static_cast<size_t>(nj) * nj, 0.0);
    #pragma omp parallel for num_threads(max_threads()) schedule(static)
    for (int k = 0; k < nj; ++k) {
        for (int l = k; l < nj; ++l) {
            double s = 0.0;
            for (int i = 0; i < n_time; ++i) {
                s += a[static_cast<size_t>(i) * nj + k] * a[static_cast<size_t>(i) * nj + l];
            }
            m[static_cast<size_t>(k) * nj + l] = s;
            m[static_cast<size_t>(l) * nj + k] = s;
        }
    }

    double trace = 0.0, frob2 = 0.0;
    for (int k = 0; k < nj; ++k) trace += m[static_cast<size_t>(k) * nj + k];
    for (double v : m) frob2 += v * v;
    if (!(trace > 0.0)) throw NumericError("heralded purity: vanishing trace");
    return frob2 / (trace * trace);
}

}  // namespace

double heralded_purity(const Wavefunction& wf, double trigger_jitter_sigma_ns) {
    wf.validate();
    if (trigger_jitter_sigma_ns < 0.0 || !std::isfinite(trigger_jitter_sigma_ns)) {
        throw DomainError("heralded purity: jitter sigma must be finite and >= 0");
    }

    int n_time = 1024;
    int n_jitter = trigger_jitter_sigma_ns == 0.0 ? 1 : 129;
    double prev = purity_on_grid(wf, trigger_jitter_sigma_ns, n_time, n_jitter);
    for (int round = 0; round < 4; ++round) {
        n_time *= 2;
        if (n_jitter > 1) n_jitter = 2 * n_jitter - 1;
        const double cur = purity_on_grid(wf, trigger_jitter_sigma_ns, n_time, n_jitter);
        if (std::abs(cur - prev) < 1e-4) return cur;
        prev = cur;
    }
    throw NumericError("heralded purity: grid refinement did not converge to 1e-4");
}

}  // namespace homlab::biphoton
