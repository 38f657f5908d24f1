#pragma once

// Smooth compactly supported cutoffs.
//
//   W: bump on [1, 2], W(x) = exp(-1 / ((x - 1)(2 - x))).
//   V: plateau, 0 outside (2/3, 3), identically 1 on [1, 2], with smooth
//      transitions built from h(t) = exp(-1/t):  S(t) = h(t) / (h(t) + h(1 - t)).
//
// Derivatives are propagated exactly through truncated Taylor series, so
// window_eval(w, x, j) is the closed form's j-th derivative up to rounding.

#include <array>
#include <complex>

#include "burgess/quadrature.hpp"

namespace burgess {

enum class WindowKind { Bump, Plateau };

class SmoothWindow {
public:
    static constexpr int kMaxDerivative = 4;

    explicit SmoothWindow(WindowKind kind) : kind_(kind) {}
    static SmoothWindow bump() { return SmoothWindow(WindowKind::Bump); }
    static SmoothWindow plateau() { return SmoothWindow(WindowKind::Plateau); }

    WindowKind kind() const { return kind_; }
    double support_lo() const { return kind_ == WindowKind::Bump ? 1.0 : 2.0 / 3.0; }
    double support_hi() const { return kind_ == WindowKind::Bump ? 2.0 : 3.0; }

    double operator()(double x) const { return derivatives(x)[0]; }
    /// w(x), w'(x), ..., w''''(x).
    std::array<double, kMaxDerivative + 1> derivatives(double x) const;

private:
    WindowKind kind_;
};

/// w^{(j)}(x) for 0 <= j <= 4; throws std::invalid_argument otherwise.
double window_eval(const SmoothWindow& w, double x, int j);

/// Mellin transform: integral of w(x) x^{s-1} over the support.
std::complex<double> mellin(const SmoothWindow& w, std::complex<double> s, QuadratureOptions opts = {1e-12, 40, 1});

/// sup over the support of |x^j w^{(j)}(x)|, sampled on a uniform grid.
double measured_derivative_bound(const SmoothWindow& w, int j, int samples = 20000);

}  // namespace burgess
