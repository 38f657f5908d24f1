#pragma once

#include <complex>
#include <functional>
#include <span>

namespace burgess {

struct QuadratureOptions {
    double abs_tol = 1e-12;
    int max_depth = 40;
    /// Minimum number of equal panels each breakpoint interval is cut into
    /// before adaptive refinement starts (oscillatory integrands need at least
    /// about one panel per cycle).
    int min_panels = 1;
    /// Relative accuracy of the integrand values themselves (e.g. a phase
    /// of size P cycles is only known to about P * 1e-16). Panels whose
    /// error estimate is below this level times the panel's L1 mass are
    /// accepted.
    double noise = 0.0;
};

/// Noise level of e(phi) when |phi| <= max_cycles.
double phase_noise(double max_cycles);

/// Adaptive Gauss-Kronrod (7/15) bisection on each interval between
/// consecutive breakpoints. The local tolerance is proportional to panel
/// length. Throws QuadratureNonConvergence past max_depth.
std::complex<double> integrate(const std::function<std::complex<double>(double)>& f,
                               std::span<const double> breakpoints, const QuadratureOptions& opts = {});

double integrate_real(const std::function<double(double)>& f, std::span<const double> breakpoints,
                      const QuadratureOptions& opts = {});

}  // namespace burgess
