#pragma once

#include <complex>

#include "burgess/arith.hpp"
#include "burgess/windows.hpp"

namespace burgess {

/// f(x) = w((x - shift) / scale).
struct WindowDilation {
    SmoothWindow window = SmoothWindow::bump();
    double scale = 1.0;
    double shift = 0.0;

    double operator()(double x) const { return window((x - shift) / scale); }
    double lo() const { return shift + scale * window.support_lo(); }
    double hi() const { return shift + scale * window.support_hi(); }
};

/// f-hat(xi) = integral of f(x) e(-x xi) dx.
std::complex<double> fourier_transform(const WindowDilation& f, double xi);

struct PoissonReport {
    i64 a = 0;
    i64 q = 1;
    double lhs = 0;             // sum over r = a (q) of f(r)
    std::complex<double> rhs;   // (1/q) sum_m f-hat(m/q) e(a m / q)
    double discrepancy = 0;     // |lhs - rhs|
    i64 lhs_terms = 0;
    i64 max_frequency = 0;      // largest |m| used
};

/// Both sides of Poisson summation in the class a mod q. The dual sum stops
/// once |f-hat(+-m/q)| / q stays below tail_tol for several consecutive m.
PoissonReport poisson_check(const WindowDilation& f, i64 a, i64 q, double tail_tol = 1e-12);

}  // namespace burgess
