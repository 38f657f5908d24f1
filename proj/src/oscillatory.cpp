#include "burgess/oscillatory.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "burgess/errors.hpp"
#include "burgess/windows.hpp"

namespace burgess {

void OscillatoryIntegralSpec::validate() const {
    if (!(R > 0) || l <= 0 || c <= 0 || M <= 0 || p <= 0 || !(n >= 0)) {
        throw ParameterDegeneracy("oscillatory spec: R, l, c, M, p must be positive and n non-negative");
    }
    if (r == 0 && n != 0) throw ParameterDegeneracy("oscillatory spec: r = 0 gives no finite stationary point");
}

double OscillatoryIntegralSpec::A() const {
    return 2.0 * std::sqrt(n * R * static_cast<double>(l)) /
           (static_cast<double>(c) * static_cast<double>(M) * std::sqrt(static_cast<double>(p)));
}

double OscillatoryIntegralSpec::B() const {
    return R * static_cast<double>(r) / (static_cast<double>(c) * static_cast<double>(p) * static_cast<double>(M));
}

std::optional<double> OscillatoryIntegralSpec::stationary_point() const {
    if (n <= 0 || r == 0) return std::nullopt;
    const double rr = static_cast<double>(r);
    return n * static_cast<double>(l) * static_cast<double>(p) / (R * rr * rr);
}

double OscillatoryIntegralSpec::phase(double y, int sign) const { return sign * A() * std::sqrt(y) - B() * y; }

double OscillatoryIntegralSpec::phase_second_derivative(double y, int sign) const {
    return -sign * A() / (4.0 * y * std::sqrt(y));
}

std::complex<double> oscillatory_integral(const OscillatoryIntegralSpec& spec, int sign, QuadratureOptions opts) {
    spec.validate();
    sign = sign >= 0 ? 1 : -1;
    const SmoothWindow V = SmoothWindow::plateau();
    const double lo = V.support_lo(), hi = V.support_hi();
    const double a = spec.A(), b = spec.B();

    std::vector<double> pts{lo, 1.0, 2.0, hi};
    if (auto y0 = spec.stationary_point(); y0 && *y0 > lo && *y0 < hi) pts.push_back(*y0);
    std::sort(pts.begin(), pts.end());

    // |phi'| <= A / (2 sqrt(lo)) + |B| bounds the number of cycles per unit length.
    const double rate = a / (2.0 * std::sqrt(lo)) + std::abs(b);
    const double cycles = rate * (hi - lo);
    opts.min_panels = std::max(opts.min_panels, static_cast<int>(std::ceil(2.0 * cycles / (pts.size() - 1))) + 2);

    opts.noise = std::max(opts.noise, phase_noise(a * std::sqrt(hi) + std::abs(b) * hi));
    auto f = [&](double y) -> std::complex<double> {
        const double v = V(y);
        if (v == 0.0) return {0.0, 0.0};
        return v * expo(sign * a * std::sqrt(y) - b * y);
    };
    return integrate(f, pts, opts);
}

std::complex<double> StationaryPhaseTerms::value() const { return amplitude * expo(phase) * weight; }

StationaryPhaseTerms stationary_phase_terms(const OscillatoryIntegralSpec& spec) {
    spec.validate();
    const auto y0 = spec.stationary_point();
    const SmoothWindow V = SmoothWindow::plateau();
    if (!y0 || !(*y0 > V.support_lo() && *y0 < V.support_hi())) {
        throw StationaryPointOutsideSupport("stationary_phase_estimate: y0 outside the window support");
    }
    StationaryPhaseTerms t;
    t.sign = spec.r > 0 ? 1 : -1;
    t.y0 = *y0;
    const double a = spec.A();
    t.amplitude = 2.0 / a;
    t.phase = spec.n * static_cast<double>(spec.l) /
              (static_cast<double>(spec.c) * static_cast<double>(spec.M) * static_cast<double>(spec.r));
    t.second_derivative = spec.phase_second_derivative(t.y0, t.sign);
    t.weight = V(t.y0) * expo(-t.sign / 8.0) * (0.5 * a) / std::sqrt(std::abs(t.second_derivative));
    return t;
}

std::complex<double> stationary_phase_estimate(const OscillatoryIntegralSpec& spec) {
    return stationary_phase_terms(spec).value();
}

}  // namespace burgess
