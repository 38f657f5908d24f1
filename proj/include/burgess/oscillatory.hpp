#pragma once

// I_(+/-) = integral of V(y) e(phi(y)) dy with
//   phi(y) = +/- A sqrt(y) - B y,
//   A = 2 sqrt(n R l) / (c M sqrt(p)),  B = R r / (c p M).
// When sign(r) matches the chosen sign there is a stationary point at
// y0 = n l p / (R r^2) with phi(y0) = n l / (c M r).

#include <complex>
#include <optional>

#include "burgess/arith.hpp"
#include "burgess/quadrature.hpp"

namespace burgess {

struct OscillatoryIntegralSpec {
    double n = 1;
    double R = 1;  // R-tilde
    i64 l = 1;
    i64 c = 1;
    i64 M = 1;
    i64 p = 1;
    i64 r = 1;

    /// Throws ParameterDegeneracy unless R, l, c, M, p > 0, n >= 0 and
    /// (r != 0 or n == 0).
    void validate() const;
    double A() const;
    double B() const;
    /// y0 when n > 0 and r != 0.
    std::optional<double> stationary_point() const;
    double phase(double y, int sign) const;
    double phase_second_derivative(double y, int sign) const;
};

std::complex<double> oscillatory_integral(const OscillatoryIntegralSpec& spec, int sign,
                                          QuadratureOptions opts = {1e-11, 50, 1});

struct StationaryPhaseTerms {
    int sign = 1;
    double y0 = 0;
    double amplitude = 0;        // c M sqrt(p) / sqrt(n R l)
    double phase = 0;            // n l / (c M r), in cycles
    std::complex<double> weight;  // V(y0) e(-sign/8) (A/2) |phi''(y0)|^{-1/2}
    double second_derivative = 0;

    std::complex<double> value() const;
};

/// Leading-order stationary-phase data; the sign is that of r. Throws
/// StationaryPointOutsideSupport when y0 is absent or outside (2/3, 3).
StationaryPhaseTerms stationary_phase_terms(const OscillatoryIntegralSpec& spec);
std::complex<double> stationary_phase_estimate(const OscillatoryIntegralSpec& spec);

}  // namespace burgess
