#pragma once

// Kloosterman sums (classical and character-twisted), complete rational
// character sums over F_M and the empirical Weil-bound scanner.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "burgess/arith.hpp"

namespace burgess {

/// S_psi(a, b; c) = sum over units alpha mod c of psi(alpha) e((alpha a + alpha^-1 b) / c).
/// An absent twist means the classical (untwisted) sum.
struct KloostermanQuery {
    i64 a = 0;
    i64 b = 0;
    i64 c = 1;
    std::optional<DirichletCharacter> twist;
};

/// Direct enumeration over (Z/c)^x. Throws TwistModulusMismatch when the twist
/// modulus does not divide c.
cplx kloosterman(const KloostermanQuery& query);
cplx kloosterman(i64 a, i64 b, i64 c);

/// c0 + c1 x + c2 x^2 over Z, reduced modulo the ambient prime when evaluated.
struct QuadPoly {
    i64 c0 = 0;
    i64 c1 = 0;
    i64 c2 = 0;

    i64 eval(i64 x, i64 m) const;
    bool is_zero_mod(i64 m) const;
};

/// Factorisation data of Q1/Q2 over F_M: each place is a monic irreducible
/// factor (linear or quadratic) with its exponent in Q1/Q2.
struct RationalPlace {
    i64 b = 0;        // linear: x - b; quadratic: x^2 + b x + c
    i64 c = 0;
    int degree = 1;
    int exponent = 0;
};

/// The data (chi, Q1, Q2, excluded points) of sum_x chi(Q1(x) / Q2(x)) over F_M.
class RationalCharSumSpec {
public:
    /// Throws DenominatorZeroEverywhere when Q2 vanishes identically mod M and
    /// std::invalid_argument when more than four points would be excluded.
    RationalCharSumSpec(DirichletCharacter chi, QuadPoly numerator, QuadPoly denominator,
                        std::vector<i64> extra_excluded = {});

    const DirichletCharacter& chi() const { return chi_; }
    i64 modulus() const { return chi_.modulus(); }
    const QuadPoly& numerator() const { return num_; }
    const QuadPoly& denominator() const { return den_; }
    /// Zeros of Q2 together with the caller-supplied points; sorted, distinct.
    const std::vector<i64>& excluded() const { return excluded_; }
    /// True iff Q1/Q2 is a constant times an (ord chi)-th power of a rational function.
    bool degenerate() const { return degenerate_; }
    /// Zeros and poles of the reduced rational function Q1/Q2.
    const std::vector<RationalPlace>& places() const { return places_; }
    std::string summary() const;

private:
    DirichletCharacter chi_;
    QuadPoly num_;
    QuadPoly den_;
    std::vector<i64> excluded_;
    std::vector<RationalPlace> places_;
    bool degenerate_ = false;
};

/// sum over x in F_M minus the excluded points of chi(Q1(x) Q2(x)^-1).
cplx rational_char_sum(const RationalCharSumSpec& spec);

struct WeilScanRecord {
    i64 M = 0;
    std::string spec;
    double abs_sum = 0.0;
    double ratio = 0.0;  // |sum| / sqrt(M)
    bool degenerate = false;
};

WeilScanRecord weil_record(const RationalCharSumSpec& spec);

/// Per-prime aggregate of a Weil scan; `records` holds the accepted
/// (non-degenerate) trials in trial order.
struct WeilScanSummary {
    i64 M = 0;
    double ratio_max = 0.0;
    double ratio_median = 0.0;
    i64 degenerate_count = 0;
    std::vector<WeilScanRecord> records;
};

/// Samples `trials_per_M` random non-degenerate (chi, Q1, Q2) per prime M.
/// Degenerate draws are redrawn and counted. Deterministic in `seed`,
/// independent of `threads`.
std::vector<WeilScanSummary> weil_scan(std::span<const i64> Ms, int trials_per_M, u64 seed,
                                       int threads = 1);

}  // namespace burgess
