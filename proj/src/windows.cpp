#include "burgess/windows.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "burgess/arith.hpp"

namespace burgess {

namespace {

constexpr int kOrder = SmoothWindow::kMaxDerivative;

// Truncated Taylor series a_0 + a_1 h + ... + a_4 h^4 about a point.
struct Jet {
    std::array<double, kOrder + 1> a{};

    static Jet constant(double c) {
        Jet j;
        j.a[0] = c;
        return j;
    }
    static Jet variable(double x) {
        Jet j;
        j.a[0] = x;
        j.a[1] = 1.0;
        return j;
    }

    Jet operator+(const Jet& o) const {
        Jet r;
        for (int i = 0; i <= kOrder; ++i) r.a[i] = a[i] + o.a[i];
        return r;
    }
    Jet operator-(const Jet& o) const {
        Jet r;
        for (int i = 0; i <= kOrder; ++i) r.a[i] = a[i] - o.a[i];
        return r;
    }
    Jet operator-() const { return constant(0.0) - *this; }
    Jet operator*(const Jet& o) const {
        Jet r;
        for (int i = 0; i <= kOrder; ++i) {
            for (int j = 0; i + j <= kOrder; ++j) r.a[i + j] += a[i] * o.a[j];
        }
        return r;
    }
    Jet operator*(double c) const {
        Jet r;
        for (int i = 0; i <= kOrder; ++i) r.a[i] = a[i] * c;
        return r;
    }
};

Jet operator-(double c, const Jet& j) { return Jet::constant(c) - j; }

Jet recip(const Jet& u) {
    Jet b;
    b.a[0] = 1.0 / u.a[0];
    for (int k = 1; k <= kOrder; ++k) {
        double s = 0;
        for (int j = 1; j <= k; ++j) s += u.a[j] * b.a[k - j];
        b.a[k] = -s * b.a[0];
    }
    return b;
}

Jet exp(const Jet& u) {
    Jet b;
    b.a[0] = std::exp(u.a[0]);
    for (int k = 1; k <= kOrder; ++k) {
        double s = 0;
        for (int j = 1; j <= k; ++j) s += j * u.a[j] * b.a[k - j];
        b.a[k] = s / k;
    }
    return b;
}

std::array<double, kOrder + 1> to_derivatives(const Jet& j) {
    std::array<double, kOrder + 1> d{};
    double fact = 1;
    for (int i = 0; i <= kOrder; ++i) {
        if (i > 0) fact *= i;
        d[i] = j.a[i] * fact;
    }
    return d;
}

// h(t) = exp(-1/t) for t > 0.
Jet h(const Jet& t) {
    if (t.a[0] <= 0) return Jet{};
    return exp(-recip(t));
}

// Smooth step: 0 at t <= 0, 1 at t >= 1.
Jet step(const Jet& t) {
    if (t.a[0] <= 0) return Jet{};
    if (t.a[0] >= 1) return Jet::constant(1.0);
    const Jet h1 = h(t);
    const Jet h2 = h(1.0 - t);
    return h1 * recip(h1 + h2);
}

}  // namespace

std::array<double, SmoothWindow::kMaxDerivative + 1> SmoothWindow::derivatives(double x) const {
    const Jet X = Jet::variable(x);
    if (kind_ == WindowKind::Bump) {
        if (x <= 1.0 || x >= 2.0) return {};
        const Jet q = (X - Jet::constant(1.0)) * (2.0 - X);
        return to_derivatives(exp(-recip(q)));
    }
    if (x <= 2.0 / 3.0 || x >= 3.0) return {};
    if (x >= 1.0 && x <= 2.0) return {1.0, 0.0, 0.0, 0.0, 0.0};
    if (x < 1.0) return to_derivatives(step(X * 3.0 - Jet::constant(2.0)));
    return to_derivatives(step(3.0 - X));
}

double window_eval(const SmoothWindow& w, double x, int j) {
    if (j < 0 || j > SmoothWindow::kMaxDerivative) {
        throw std::invalid_argument("window_eval: derivative order must lie in [0, 4]");
    }
    return w.derivatives(x)[static_cast<std::size_t>(j)];
}

std::complex<double> mellin(const SmoothWindow& w, std::complex<double> s, QuadratureOptions opts) {
    const double lo = w.support_lo(), hi = w.support_hi();
    // x^{it} winds |t| log(hi/lo) / (2 pi) times across the support.
    const double cycles = std::abs(s.imag()) * std::log(hi / lo) / kTwoPi;
    opts.min_panels = std::max(opts.min_panels, static_cast<int>(std::ceil(2 * cycles)) + 1);
    opts.noise = std::max(opts.noise, phase_noise(std::abs(s.imag()) * std::log(hi) / kTwoPi));
    const std::complex<double> sm1 = s - 1.0;
    auto f = [&](double x) -> std::complex<double> {
        const double v = w(x);
        if (v == 0.0) return {0.0, 0.0};
        return v * std::exp(sm1 * std::log(x));
    };
    std::vector<double> pts{lo, hi};
    if (w.kind() == WindowKind::Plateau) pts = {lo, 1.0, 2.0, hi};
    return integrate(f, pts, opts);
}

double measured_derivative_bound(const SmoothWindow& w, int j, int samples) {
    const double lo = w.support_lo(), hi = w.support_hi();
    double best = 0;
    for (int i = 1; i < samples; ++i) {
        const double x = lo + (hi - lo) * i / samples;
        best = std::max(best, std::abs(std::pow(x, j) * window_eval(w, x, j)));
    }
    return best;
}

}  // namespace burgess
