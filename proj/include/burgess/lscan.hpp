#pragma once

// Twisted smooth sums S(N) = sum_n lambda(n) chi(n) W(n/N), central values
// L(1/2, chi) by two independent routes, and the exponent scan over primes.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "burgess/arith.hpp"
#include "burgess/coeffs.hpp"
#include "burgess/windows.hpp"

namespace burgess {

struct TwistedSumSpec {
    DirichletCharacter chi;
    double N = 1;
    CoefficientKind kind = CoefficientKind::Divisor;
    SmoothWindow window = SmoothWindow::bump();
};

/// Direct compensated accumulation. Throws NotPrimitive for the principal
/// character, TableTooSmall when the coefficients stop short of the window
/// support and std::invalid_argument when N > 4 M^{1.1} or the stream kind
/// does not match.
cplx twisted_sum(const TwistedSumSpec& spec, const CoefficientStream& coeffs);

enum class CentralValueMethod { HurwitzOracle, SmoothedSum };
std::string_view to_string(CentralValueMethod method);

struct CentralValueRecord {
    i64 M = 0;
    i64 chi = 0;
    cplx value;
    CentralValueMethod method = CentralValueMethod::HurwitzOracle;
};

/// L(1/2, chi) = M^{-1/2} sum_a chi(a) zeta(1/2, a/M).
CentralValueRecord central_value_oracle(const DirichletCharacter& chi);
/// sum_n chi(n) n^{-1/2} phi(n/X), with phi = 1 on [0, 2] falling to 0 at 3
/// along the edge of the plateau window, and X = max(M^{1 + delta}, 1024).
CentralValueRecord central_value_smoothed(const DirichletCharacter& chi, double delta = 1.0);

/// Hurwitz values zeta(1/2, a/M), a = 1..M-1, shared by all characters mod M.
std::vector<cplx> hurwitz_half_table(i64 M);
cplx central_value_from_table(const DirichletCharacter& chi, const std::vector<cplx>& table);

struct LinearFit {
    std::optional<double> slope;  // absent with fewer than two distinct abscissae
    double intercept = 0;
    double residual_rms = 0;
    std::size_t points = 0;
};

LinearFit fit_line(const std::vector<double>& x, const std::vector<double>& y);

/// Dyadic centres N_j = sqrt(M) 2^{j / per_octave} in [M^{1/2}, 4 M^{1.05}].
std::vector<double> dyadic_grid(i64 M, int per_octave = 2);

/// Primes near `count` log-spaced points of [lo, hi], ascending and distinct.
std::vector<i64> log_spaced_primes(i64 lo, i64 hi, int count);

struct ScanPoint {
    double N = 0;
    double value = 0;  // |S(N)| / sqrt(N)
};

struct CharacterScan {
    i64 chi = 0;
    double B = 0;  // max over the grid
    double argmax_N = 0;
    double abs_L = 0;
    std::vector<ScanPoint> points;
};

struct PrimeScan {
    i64 M = 0;
    std::vector<CharacterScan> characters;
    double B_max = 0;   // max over sampled characters
    double Lambda = 0;  // max |L(1/2, chi)|
    i64 Lambda_characters = 0;  // characters entering Lambda
};

struct BurgessScanReport {
    static constexpr double kBurgessS = 0.375;
    static constexpr double kBurgessL = 0.1875;
    static constexpr double kConvexityL = 0.25;
    static constexpr double kConvexityS = 0.5;

    CoefficientKind kind = CoefficientKind::Divisor;
    u64 seed = 0;
    int chars_per_M = 0;
    int per_octave = 2;
    std::vector<PrimeScan> primes;
    LinearFit S_fit;  // log B_max against log M
    LinearFit L_fit;  // log Lambda against log M

    bool L_gate() const { return L_fit.slope && *L_fit.slope <= kConvexityL; }
    bool S_gate() const { return S_fit.slope && *S_fit.slope <= kConvexityS; }
};

struct BurgessScanOptions {
    int chars_per_M = 3;
    CoefficientKind kind = CoefficientKind::Divisor;
    u64 seed = 0xB00B5;
    int threads = 1;
    int per_octave = 2;
    /// Lambda uses every primitive character up to this modulus and the
    /// sampled characters above it.
    i64 full_lambda_limit = 2000;
};

/// Characters scanned for M: the quadratic one plus seeded distinct random
/// nonprincipal indices.
std::vector<i64> sample_characters(i64 M, int count, u64 seed);

BurgessScanReport burgess_scan(const std::vector<i64>& primes, const BurgessScanOptions& opts,
                               const std::optional<TauTable>& tau = std::nullopt);

}  // namespace burgess
