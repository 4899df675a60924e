#pragma once

#include <cmath>
#include <complex>
#include <cstddef>

#include "homlab/support/errors.hpp"

namespace homlab {

namespace detail {

template <typename F>
double adaptive_simpson_rec(const F& f, double a, double b, double fa, double fm, double fb,
                            double whole, double tol, int depth) {
    double m = 0.5 * (a + b);
    double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    double flm = f(lm), frm = f(rm);
    double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    double delta = left + right - whole;
    if (depth <= 0 || std::abs(delta) <= 15.0 * tol) {
        return left + right + delta / 15.0;
    }
    return adaptive_simpson_rec(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
           adaptive_simpson_rec(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

}  // namespace detail

/// Adaptive Simpson quadrature of a real integrand over [a, b].
template <typename F>
double integrate(const F& f, double a, double b, double tol = 1e-12, int max_depth = 48) {
    if (!(b > a)) return 0.0;
    double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
    double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return detail::adaptive_simpson_rec(f, a, b, fa, fm, fb, whole, tol, max_depth);
}

/// Adaptive Simpson quadrature of a complex integrand (parts integrated independently).
template <typename F>
std::complex<double> integrate_complex(const F& f, double a, double b, double tol = 1e-12) {
    double re = integrate([&](double x) { return f(x).real(); }, a, b, tol);
    double im = integrate([&](double x) { return f(x).imag(); }, a, b, tol);
    return {re, im};
}

}  // namespace homlab
