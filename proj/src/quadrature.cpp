#include "burgess/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "burgess/errors.hpp"
#include "burgess/summation.hpp"

namespace burgess {

namespace {

constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
// Gauss weights for the nodes kXgk[1], kXgk[3], kXgk[5], kXgk[7].
constexpr std::array<double, 4> kWg = {0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
                                       0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

using Integrand = std::function<std::complex<double>(double)>;

struct PanelResult {
    std::complex<double> value;
    double error;
    double abs_mass;  // integral of |f| by the Kronrod rule
};

PanelResult gk15(const Integrand& f, double a, double b) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    const std::complex<double> fc = f(c);
    std::complex<double> kronrod = fc * kWgk[7];
    std::complex<double> gauss = fc * kWg[3];
    double mass = std::abs(fc) * kWgk[7];
    for (int i = 0; i < 7; ++i) {
        const double dx = h * kXgk[static_cast<std::size_t>(i)];
        const std::complex<double> lo = f(c - dx), hi = f(c + dx);
        const std::complex<double> s = lo + hi;
        mass += (std::abs(lo) + std::abs(hi)) * kWgk[static_cast<std::size_t>(i)];
        kronrod += s * kWgk[static_cast<std::size_t>(i)];
        if (i % 2 == 1) gauss += s * kWg[static_cast<std::size_t>(i / 2)];
    }
    return {kronrod * h, std::abs((kronrod - gauss) * h), mass * std::abs(h)};
}

void adapt(const Integrand& f, double a, double b, double tol, double noise, int depth, int max_depth,
           ComplexSum& acc) {
    const PanelResult r = gk15(f, a, b);
    // Errors at the rounding level of the panel cannot be reduced by bisection.
    const double floor = (50.0 * std::numeric_limits<double>::epsilon() + noise) * r.abs_mass;
    if (r.error <= tol || r.error <= floor) {
        acc += r.value;
        return;
    }
    if (depth >= max_depth) {
        throw QuadratureNonConvergence("quadrature: no convergence on [" + std::to_string(a) + ", " +
                                       std::to_string(b) + "] at depth " + std::to_string(depth));
    }
    const double m = 0.5 * (a + b);
    adapt(f, a, m, 0.5 * tol, noise, depth + 1, max_depth, acc);
    adapt(f, m, b, 0.5 * tol, noise, depth + 1, max_depth, acc);
}

}  // namespace

double phase_noise(double max_cycles) {
    return 16.0 * std::numeric_limits<double>::epsilon() * 6.283185307179586 * (1.0 + std::abs(max_cycles));
}

std::complex<double> integrate(const Integrand& f, std::span<const double> breakpoints,
                               const QuadratureOptions& opts) {
    std::vector<double> pts(breakpoints.begin(), breakpoints.end());
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() < 2) return {0.0, 0.0};
    const double total = pts.back() - pts.front();
    if (!(total > 0)) return {0.0, 0.0};

    ComplexSum acc;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        const double a = pts[i], b = pts[i + 1];
        const int panels = std::max(1, opts.min_panels);
        const double width = (b - a) / panels;
        for (int k = 0; k < panels; ++k) {
            const double lo = a + k * width;
            const double hi = (k + 1 == panels) ? b : a + (k + 1) * width;
            adapt(f, lo, hi, opts.abs_tol * (hi - lo) / total, opts.noise, 0, opts.max_depth, acc);
        }
    }
    return acc.value();
}

double integrate_real(const std::function<double(double)>& f, std::span<const double> breakpoints,
                      const QuadratureOptions& opts) {
    return integrate([&](double x) { return std::complex<double>(f(x), 0.0); }, breakpoints, opts).real();
}

}  // namespace burgess
