#pragma once

// Exact checks of the character-sum manipulations behind the off-diagonal
// analysis, each comparing a brute-force enumeration with a closed form.
//
// Notation: psi runs over characters mod p, chi is a character mod M, and
//   frak_c = sum_psi (1 - psi(-1)) g_psi psibar(m)
//            sum_{a mod cpM} chibar(a) S_psi(n p l, a; cpM) e(a r / (cpM)).

#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "burgess/arith.hpp"

namespace burgess {

enum class IdentityTag { Factorization, CpEval, PsiEval, Reciprocity, CGaussTwist, CdaggerBsum, DiagonalDegen };

std::string_view to_string(IdentityTag tag);
IdentityTag parse_identity_tag(std::string_view name);

/// Parameter tuple; each tag reads the subset it needs.
struct IdentityCase {
    IdentityTag tag = IdentityTag::Factorization;
    i64 p = 0;
    i64 M = 0;
    i64 c = 1;
    i64 c1 = 1;
    i64 c2 = 1;
    i64 m = 1;
    i64 n = 1;
    i64 l = 1;
    i64 l1 = 1;
    i64 l2 = 1;
    i64 r = 1;
    i64 r1 = 1;
    i64 r2 = 1;
    i64 chi = 1;   // character index mod M
    int sign = 1;  // the +/- of psibar(+/- m) in the cp-part

    /// l1 c2 r2 - l2 c1 r1 + c1 c2 n
    i64 F() const;
};

struct VerificationReport {
    IdentityTag tag = IdentityTag::Factorization;
    IdentityCase params;
    cplx lhs;
    cplx rhs;
    double abs_err = 0;
    double rel_err = 0;
    bool pass = false;
    i64 lhs_terms = 0;
    i64 rhs_terms = 0;
};

inline constexpr double kVerifyTolerance = 1e-8;
inline constexpr i64 kTermBudget = 1'000'000;

/// frak_c against (mod-cp part) x (mod-M part) via CRT. Throws
/// ParameterDegeneracy unless p, M are distinct primes with gcd(M, cp) = 1.
VerificationReport verify_factorization(const IdentityCase& k);
/// Opened mod-cp sum over (psi, b, a) against cp sum_psi g_psi psibar(-/+ m r) e(-(rM)^-1 n p l / (cp)).
VerificationReport verify_cp_eval(const IdentityCase& k);
/// frak_c against frak_c_minus - frak_c_plus.
VerificationReport verify_psi_eval(const IdentityCase& k);
/// e(-(rM)^-1 n l / c) e(n l / (c M r)) = e(c^-1 n l / (r M)), in exact
/// rational arithmetic mod 1. Throws NotCoprime.
VerificationReport verify_reciprocity(i64 c, i64 r, i64 M, i64 n, i64 l);
VerificationReport verify_reciprocity(const IdentityCase& k);
/// sum_a chibar(a) S(cbar n l, cbar a; M) e(a r cbar / M) against
/// g_chibar chibar(c) sum_alpha chi(alpha^-1 + r) e(alpha cbar n l / M).
VerificationReport verify_c_gauss_twist(const IdentityCase& k);
/// Triple sum over (b, a1, a2) against M times the single x-sum, its
/// rational-function form and, when M | F, the further reduced form. Cases on
/// the degenerate diagonal are tagged DiagonalDegen and additionally checked
/// against M (M - 2).
VerificationReport verify_cdagger_bsum(const IdentityCase& k);

/// Dispatch on k.tag.
VerificationReport verify(const IdentityCase& k);

/// True iff r1 = r2, c1 l2 = c2 l1 (mod M) and M | F.
bool cdagger_on_diagonal(const IdentityCase& k);

/// The x-sum of the b-evaluated form as chi(Q1/Q2) with quadratic Q1, Q2:
///   Q1 = x (r1 c2bar l2 x + c1bar l1 - r1 G),  Q2 = (c2bar l2 x - G)(r2 x + 1),
/// where G = (c1 c2 r1 r2)^-1 F mod M.
struct CdaggerQuadratics {
    i64 M;
    i64 q1[3];
    i64 q2[3];
};
CdaggerQuadratics cdagger_quadratics(const IdentityCase& k);

/// Closed form M sum_x chi(...) chibar(...) of the b-evaluated sum.
cplx cdagger_closed_form(const IdentityCase& k);

/// Random admissible tuple for the tag.
IdentityCase random_case(IdentityTag tag, std::mt19937_64& rng);

/// `count` seeded tuples for one tag, verified in parallel, reported in
/// tuple order.
std::vector<VerificationReport> run_suite(IdentityTag tag, int count, u64 seed, int threads = 1);
/// The six suites (factorization, cp-eval, psi-eval, reciprocity, Gauss
/// twist, b-sum) concatenated in that order.
std::vector<VerificationReport> run_all_suites(int count, u64 seed, int threads = 1);

struct OffdiagTailReport {
    double bound = 0;
    double x1 = 0;    // Bessel argument bound at c = 1
    double head = 0;  // sum over c <= c_max
    double tail = 0;  // analytic remainder for c > c_max
};

/// Upper bound for sum_c |J_{k-1}(4 pi sqrt(n l r) / (c p M))| with n, l, r at
/// the ends of their ranges (n <= 4 N L, l <= 2 L, r <= 3 N), using
/// |J_nu(x)| <= min(1, (x/2)^nu / nu!).
OffdiagTailReport offdiag_tail_report(double p, i64 M, i64 L, i64 N, i64 c_max, int k);
double offdiag_tail(double p, i64 M, i64 L, i64 N, i64 c_max = 1000, int k = 11);

}  // namespace burgess
