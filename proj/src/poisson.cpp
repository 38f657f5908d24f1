#include "burgess/poisson.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "burgess/errors.hpp"
#include "burgess/summation.hpp"

namespace burgess {

std::complex<double> fourier_transform(const WindowDilation& f, double xi) {
    // f-hat(xi) = scale e(-shift xi) w-hat(scale xi)
    const SmoothWindow& w = f.window;
    const double eta = f.scale * xi;
    const double lo = w.support_lo(), hi = w.support_hi();
    QuadratureOptions opts{1e-15, 50, 1};
    opts.min_panels = static_cast<int>(std::ceil(2.0 * std::abs(eta) * (hi - lo))) + 2;
    opts.noise = phase_noise(std::abs(eta) * hi);
    auto g = [&](double u) -> std::complex<double> {
        const double v = w(u);
        if (v == 0.0) return {0.0, 0.0};
        return v * expo(-u * eta);
    };
    std::vector<double> pts{lo, hi};
    if (w.kind() == WindowKind::Plateau) pts = {lo, 1.0, 2.0, hi};
    return f.scale * expo(-f.shift * xi) * integrate(g, pts, opts);
}

PoissonReport poisson_check(const WindowDilation& f, i64 a, i64 q, double tail_tol) {
    if (q < 1) throw std::invalid_argument("poisson_check: q must be >= 1");
    if (!(f.scale > 0)) throw std::invalid_argument("poisson_check: scale must be positive");
    PoissonReport rep;
    rep.a = mod(a, q);
    rep.q = q;

    CompensatedSum lhs;
    const i64 first = static_cast<i64>(std::floor(f.lo()));
    const i64 last = static_cast<i64>(std::ceil(f.hi()));
    for (i64 r = first + mod(rep.a - first, q); r <= last; r += q) {
        lhs += f(static_cast<double>(r));
        ++rep.lhs_terms;
    }
    rep.lhs = lhs.value();

    const double qd = static_cast<double>(q);
    ComplexSum rhs;
    rhs += fourier_transform(f, 0.0) / qd;
    constexpr int kQuietRun = 5;
    constexpr i64 kMaxFrequency = 1'000'000;
    int quiet = 0;
    for (i64 m = 1; quiet < kQuietRun; ++m) {
        if (m > kMaxFrequency) throw QuadratureNonConvergence("poisson_check: dual sum did not decay");
        const std::complex<double> fp = fourier_transform(f, m / qd) * expo(rep.a * m, q);
        const std::complex<double> fm = fourier_transform(f, -m / qd) * expo(-rep.a * m, q);
        rhs += (fp + fm) / qd;
        rep.max_frequency = m;
        quiet = (std::abs(fp) + std::abs(fm)) / qd < tail_tol ? quiet + 1 : 0;
    }
    rep.rhs = rhs.value();
    rep.discrepancy = std::abs(rep.rhs - rep.lhs);
    return rep;
}

}  // namespace burgess
