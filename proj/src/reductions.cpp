#include "burgess/reductions.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

#include "burgess/bessel.hpp"
#include "burgess/errors.hpp"
#include "burgess/expsums.hpp"
#include "burgess/parallel.hpp"
#include "burgess/summation.hpp"

namespace burgess {

namespace {

constexpr std::array<std::string_view, 7> kTagNames = {"FACTORIZATION", "CP-EVAL",       "PSI-EVAL",      "RECIPROCITY",
                                                       "C-GAUSS-TWIST", "CDAGGER-BSUM", "DIAGONAL-DEGEN"};

constexpr double kPi = 3.14159265358979323846;

void finish(VerificationReport& rep) {
    rep.abs_err = std::abs(rep.lhs - rep.rhs);
    const double scale = std::abs(rep.rhs);
    rep.rel_err = scale > 0 ? rep.abs_err / scale : rep.abs_err;
    rep.pass = scale < 1.0 ? rep.abs_err <= kVerifyTolerance : rep.rel_err <= kVerifyTolerance;
}

void require_prime(i64 q, const char* what) {
    if (!is_prime(q)) throw ParameterDegeneracy(std::string(what) + " = " + std::to_string(q) + " is not prime");
}

void check_frak_c_case(const IdentityCase& k) {
    require_prime(k.p, "p");
    require_prime(k.M, "M");
    if (k.p == k.M) throw ParameterDegeneracy("p and M must be distinct");
    if (k.c < 1) throw ParameterDegeneracy("c must be positive");
    if (gcd(k.M, k.c * k.p) != 1) throw ParameterDegeneracy("gcd(M, cp) must be 1");
}

// ----- brute-force side: enumeration over the full moduli -----

// frak_c summed literally: every psi mod p with its (1 - psi(-1)) weight, every
// a mod cpM, and each twisted Kloosterman sum enumerated over units mod cpM.
cplx brute_frak_c(const IdentityCase& k, i64& terms) {
    const i64 q = k.c * k.p * k.M;
    const i64 units = q;  // upper bound on phi(q)
    if ((k.p - 1) * q * units > kTermBudget * 4) {
        throw ParameterDegeneracy("brute-force term budget exceeded for cpM = " + std::to_string(q));
    }
    const auto gp = MultiplicativeGroupTable::build(k.p);
    const auto gM = MultiplicativeGroupTable::build(k.M);
    const DirichletCharacter chi(gM, k.chi);
    const RootsOfUnity eq(q);

    std::vector<i64> unit, inverse;
    for (i64 a = 1; a < q; ++a) {
        if (gcd(a, q) == 1) {
            unit.push_back(a);
            inverse.push_back(inv_mod(a, q));
        }
    }
    const i64 A = mod(k.n * k.p % q * k.l, q);
    ComplexSum total;
    terms = 0;
    for (i64 j = 0; j < k.p - 1; ++j) {
        const DirichletCharacter psi(gp, j);
        const cplx weight = (1.0 - psi(-1)) * gauss_sum(psi).value * std::conj(psi(k.m));
        if (std::abs(weight) == 0.0) {
            terms += q * static_cast<i64>(unit.size());
            continue;
        }
        ComplexSum outer;
        for (i64 a = 0; a < q; ++a) {
            const cplx ca = std::conj(chi(a));
            terms += static_cast<i64>(unit.size());
            if (std::abs(ca) == 0.0) continue;
            ComplexSum kl;
            for (std::size_t u = 0; u < unit.size(); ++u) {
                const i64 phase = (mul_mod(unit[u], A, q) + mul_mod(inverse[u], a, q)) % q;
                kl += psi(unit[u]) * eq.at_reduced(phase);
            }
            outer += ca * kl.value() * eq.at_reduced(mul_mod(a, mod(k.r, q), q));
        }
        total += weight * outer.value();
    }
    return total.value();
}

// ----- closed-form side -----

// sum_{a mod M} chibar(a) S(cbar n l, (cp)^-1 a; M) e(a r (cp)^-1 / M)
cplx mod_M_part(const IdentityCase& k, const DirichletCharacter& chi, i64& terms) {
    const i64 M = k.M;
    const i64 cbar = inv_mod(k.c, M);
    const i64 cpbar = inv_mod(k.c * k.p, M);
    const i64 first = mul_mod(cbar, mod(k.n * k.l, M), M);
    ComplexSum acc;
    for (i64 a = 1; a < M; ++a) {
        acc += std::conj(chi(a)) * kloosterman(first, mul_mod(cpbar, a, M), M) *
               expo(mul_mod(mul_mod(a, mod(k.r, M), M), cpbar, M), M);
        terms += M;
    }
    return acc.value();
}

}  // namespace

std::string_view to_string(IdentityTag tag) { return kTagNames[static_cast<std::size_t>(tag)]; }

IdentityTag parse_identity_tag(std::string_view name) {
    for (std::size_t i = 0; i < kTagNames.size(); ++i) {
        if (kTagNames[i] == name) return static_cast<IdentityTag>(i);
    }
    throw UsageError("unknown identity tag '" + std::string(name) + "'");
}

i64 IdentityCase::F() const { return l1 * c2 * r2 - l2 * c1 * r1 + c1 * c2 * n; }

VerificationReport verify_factorization(const IdentityCase& k) {
    check_frak_c_case(k);
    VerificationReport rep;
    rep.tag = IdentityTag::Factorization;
    rep.params = k;
    rep.lhs = brute_frak_c(k, rep.lhs_terms);

    const i64 cp = k.c * k.p;
    const auto gp = MultiplicativeGroupTable::build(k.p);
    const auto gM = MultiplicativeGroupTable::build(k.M);
    const DirichletCharacter chi(gM, k.chi);
    const i64 Mbar = inv_mod(k.M, cp);
    const i64 first = mul_mod(Mbar, mod(k.n * k.p * k.l, cp), cp);

    const cplx Y = mod_M_part(k, chi, rep.rhs_terms);
    ComplexSum total;
    for (i64 j = 0; j < k.p - 1; ++j) {
        const DirichletCharacter psi(gp, j);
        const cplx weight = (1.0 - psi(-1)) * gauss_sum(psi).value * std::conj(psi(k.m));
        ComplexSum X;
        for (i64 a = 0; a < cp; ++a) {
            X += kloosterman(KloostermanQuery{first, mul_mod(Mbar, a, cp), cp, psi}) *
                 expo(mul_mod(mul_mod(a, mod(k.r, cp), cp), Mbar, cp), cp);
            rep.rhs_terms += cp;
        }
        total += weight * X.value();
    }
    rep.rhs = total.value() * Y;
    finish(rep);
    return rep;
}

VerificationReport verify_cp_eval(const IdentityCase& k) {
    check_frak_c_case(k);
    VerificationReport rep;
    rep.tag = IdentityTag::CpEval;
    rep.params = k;
    const i64 cp = k.c * k.p;
    const int s = k.sign >= 0 ? 1 : -1;
    const auto gp = MultiplicativeGroupTable::build(k.p);
    const i64 Mbar = inv_mod(k.M, cp);
    const i64 npl = mod(k.n * k.p % cp * k.l, cp);

    // Opened sum over (psi, b, a).
    ComplexSum lhs;
    for (i64 j = 0; j < k.p - 1; ++j) {
        const DirichletCharacter psi(gp, j);
        const cplx g = gauss_sum(psi).value * std::conj(psi(s * k.m));
        ComplexSum over_b;
        for (i64 b = 1; b < cp; ++b) {
            if (gcd(b, cp) != 1) continue;
            const i64 bM_inv = inv_mod(mul_mod(b, k.M, cp), cp);
            ComplexSum over_a;
            for (i64 a = 0; a < cp; ++a) {
                over_a += expo(mod(mul_mod(bM_inv, a, cp) + mul_mod(mul_mod(a, mod(k.r, cp), cp), Mbar, cp), cp), cp);
            }
            rep.lhs_terms += cp;
            over_b += psi(b) * expo(mul_mod(mul_mod(b, Mbar, cp), npl, cp), cp) * over_a.value();
        }
        lhs += g * over_b.value();
    }
    rep.lhs = lhs.value();

    if (gcd(k.r, cp) == 1) {
        const i64 rM_inv = inv_mod(mul_mod(mod(k.r, cp), k.M, cp), cp);
        ComplexSum rhs;
        for (i64 j = 0; j < k.p - 1; ++j) {
            const DirichletCharacter psi(gp, j);
            rhs += gauss_sum(psi).value * std::conj(psi(-s * k.m * mod(k.r, k.p)));
            ++rep.rhs_terms;
        }
        rep.rhs = static_cast<double>(cp) * rhs.value() * expo(-mul_mod(rM_inv, npl, cp), cp);
    } else {
        rep.rhs = 0.0;
    }
    finish(rep);
    return rep;
}

VerificationReport verify_psi_eval(const IdentityCase& k) {
    check_frak_c_case(k);
    if (gcd(k.r, k.c * k.p) != 1) throw ParameterDegeneracy("psi-eval requires gcd(r, cp) = 1");
    VerificationReport rep;
    rep.tag = IdentityTag::PsiEval;
    rep.params = k;
    rep.lhs = brute_frak_c(k, rep.lhs_terms);

    const DirichletCharacter chi(MultiplicativeGroupTable::build(k.M), k.chi);
    const cplx Y = mod_M_part(k, chi, rep.rhs_terms);
    const i64 rM_inv = k.c == 1 ? 0 : inv_mod(mul_mod(mod(k.r, k.c), k.M, k.c), k.c);
    const cplx common = static_cast<double>(k.c * k.p * (k.p - 1)) *
                        expo(-mul_mod(rM_inv, mod(k.n * k.l, k.c), k.c), k.c) * Y;
    const i64 mr = mod(k.m * mod(k.r, k.p), k.p);
    const cplx c_minus = common * expo(-mr, k.p);
    const cplx c_plus = common * expo(mr, k.p);
    rep.rhs = c_minus - c_plus;
    finish(rep);
    return rep;
}

VerificationReport verify_reciprocity(i64 c, i64 r, i64 M, i64 n, i64 l) {
    if (c < 1 || M < 1 || r == 0) throw NotCoprime("reciprocity: c, M must be positive and r nonzero");
    if (gcd(c, r) != 1 || gcd(c, M) != 1 || gcd(r, M) != 1) {
        throw NotCoprime("reciprocity: c, r, M must be pairwise coprime");
    }
    VerificationReport rep;
    rep.tag = IdentityTag::Reciprocity;
    rep.params.tag = IdentityTag::Reciprocity;
    rep.params.c = c;
    rep.params.r = r;
    rep.params.M = M;
    rep.params.n = n;
    rep.params.l = l;
    rep.params.p = 0;

    // Everything over the common denominator D = c |r| M; with s = sign(r),
    // 1/(rM) = s/(|r|M).
    const i64 s = r > 0 ? 1 : -1;
    const i64 rM = (r > 0 ? r : -r) * M;
    const i64 D = c * rM;
    const i64 nl = mod(static_cast<i64>(static_cast<__int128>(n) * l % D), D);
    // -(rM)^-1 n l / c  ->  -(rM)^-1 n l |r| M / D
    const i64 rM_inv_c = c == 1 ? 0 : inv_mod(mod(s * rM, c), c);
    const i64 lhs1 = mod(-mul_mod(mul_mod(rM_inv_c, nl, D), rM, D), D);
    // n l / (c M r) = s n l / D
    const i64 lhs2 = mod(s * nl, D);
    const i64 lhs_num = (lhs1 + lhs2) % D;
    // c^-1 n l / (rM) with c^-1 mod |r|M: s c^-1 n l c / D
    const i64 c_inv = rM == 1 ? 0 : inv_mod(c, rM);
    const i64 rhs_num = mod(s * mul_mod(mul_mod(c_inv, nl, D), c, D), D);

    rep.lhs = expo(lhs_num, D);
    rep.rhs = expo(rhs_num, D);
    rep.lhs_terms = 2;
    rep.rhs_terms = 1;
    rep.pass = lhs_num == rhs_num;
    rep.abs_err = rep.pass ? 0.0 : std::abs(rep.lhs - rep.rhs);
    rep.rel_err = rep.abs_err;
    return rep;
}

VerificationReport verify_reciprocity(const IdentityCase& k) {
    return verify_reciprocity(k.c, k.r, k.M, k.n, k.l);
}

VerificationReport verify_c_gauss_twist(const IdentityCase& k) {
    require_prime(k.M, "M");
    const i64 M = k.M;
    if (gcd(k.c, M) != 1) throw ParameterDegeneracy("Gauss twist requires gcd(c, M) = 1");
    const DirichletCharacter chi(MultiplicativeGroupTable::build(M), k.chi);
    if (!chi.is_primitive()) throw NotPrimitive("Gauss twist requires a primitive character");

    VerificationReport rep;
    rep.tag = IdentityTag::CGaussTwist;
    rep.params = k;
    const RootsOfUnity e(M);
    const i64 cbar = inv_mod(k.c, M);
    const i64 nl = mod(mod(k.n, M) * mod(k.l, M), M);
    const i64 first = mul_mod(cbar, nl, M);
    const i64 rr = mod(k.r, M);

    // Left: each Kloosterman sum enumerated over alpha.
    ComplexSum lhs;
    for (i64 a = 1; a < M; ++a) {
        ComplexSum kl;
        const i64 second = mul_mod(cbar, a, M);
        for (i64 alpha = 1; alpha < M; ++alpha) {
            const i64 alpha_inv = inv_mod(alpha, M);
            kl += e.at_reduced((mul_mod(alpha, first, M) + mul_mod(alpha_inv, second, M)) % M);
        }
        rep.lhs_terms += M - 1;
        lhs += std::conj(chi(a)) * kl.value() * e.at_reduced(mul_mod(mul_mod(a, rr, M), cbar, M));
    }
    rep.lhs = lhs.value();

    const DirichletCharacter chibar = chi.conj();
    ComplexSum inner;
    for (i64 alpha = 1; alpha < M; ++alpha) {
        inner += chi(inv_mod(alpha, M) + rr) * expo(mul_mod(alpha, first, M), M);
        ++rep.rhs_terms;
    }
    rep.rhs = gauss_sum(chibar).value * chibar(k.c) * inner.value();
    finish(rep);
    return rep;
}

bool cdagger_on_diagonal(const IdentityCase& k) {
    const i64 M = k.M;
    return mod(k.r1 - k.r2, M) == 0 && mod(k.c1 * k.l2 - k.c2 * k.l1, M) == 0 && mod(k.F(), M) == 0;
}

namespace {

void check_cdagger_case(const IdentityCase& k) {
    require_prime(k.M, "M");
    const i64 M = k.M;
    for (i64 v : {k.c1, k.c2, k.r1, k.r2, k.l1, k.l2}) {
        if (gcd(v, M) != 1) throw ParameterDegeneracy("b-sum requires c1 c2 r1 r2 l1 l2 coprime to M");
    }
}

i64 cdagger_G(const IdentityCase& k) {
    const i64 M = k.M;
    const i64 prod = mul_mod(mul_mod(mod(k.c1, M), mod(k.c2, M), M), mul_mod(mod(k.r1, M), mod(k.r2, M), M), M);
    return mul_mod(inv_mod(prod, M), mod(k.F(), M), M);
}

}  // namespace

CdaggerQuadratics cdagger_quadratics(const IdentityCase& k) {
    check_cdagger_case(k);
    const i64 M = k.M;
    const i64 G = cdagger_G(k);
    const i64 u = mul_mod(inv_mod(k.c2, M), mod(k.l2, M), M);  // c2bar l2
    const i64 v = mul_mod(inv_mod(k.c1, M), mod(k.l1, M), M);  // c1bar l1
    const i64 r1 = mod(k.r1, M), r2 = mod(k.r2, M);
    CdaggerQuadratics q{M, {0, mod(v - mul_mod(r1, G, M), M), mul_mod(r1, u, M)}, {}};
    // (u x - G)(r2 x + 1) = -G + (u - G r2) x + u r2 x^2
    q.q2[0] = mod(-G, M);
    q.q2[1] = mod(u - mul_mod(G, r2, M), M);
    q.q2[2] = mul_mod(u, r2, M);
    return q;
}

cplx cdagger_closed_form(const IdentityCase& k) {
    check_cdagger_case(k);
    const i64 M = k.M;
    const DirichletCharacter chi(MultiplicativeGroupTable::build(M), k.chi);
    const i64 G = cdagger_G(k);
    const i64 u = mul_mod(inv_mod(k.c2, M), mod(k.l2, M), M);
    const i64 v = mul_mod(inv_mod(k.c1, M), mod(k.l1, M), M);
    ComplexSum acc;
    for (i64 x = 1; x < M; ++x) {
        const i64 d = mod(mul_mod(x, u, M) - G, M);
        if (d == 0) continue;
        acc += chi(mul_mod(v, inv_mod(d, M), M) + k.r1) * std::conj(chi(inv_mod(x, M) + k.r2));
    }
    return static_cast<double>(M) * acc.value();
}

VerificationReport verify_cdagger_bsum(const IdentityCase& k) {
    check_cdagger_case(k);
    const i64 M = k.M;
    if (M * M * M > kTermBudget) throw ParameterDegeneracy("b-sum brute force limited to M^3 <= 10^6");
    const DirichletCharacter chi(MultiplicativeGroupTable::build(M), k.chi);
    const RootsOfUnity e(M);

    VerificationReport rep;
    const bool diagonal = cdagger_on_diagonal(k);
    rep.tag = diagonal ? IdentityTag::DiagonalDegen : IdentityTag::CdaggerBsum;
    rep.params = k;
    rep.params.tag = rep.tag;

    // Triple sum over b, a1, a2 taken literally.
    const i64 c1bar = inv_mod(k.c1, M), c2bar = inv_mod(k.c2, M);
    const i64 r1bar = inv_mod(k.r1, M), r2bar = inv_mod(k.r2, M);
    const i64 t1 = mul_mod(c1bar, mod(k.l1, M), M);
    const i64 t2 = mul_mod(c2bar, mod(k.l2, M), M);
    const i64 shift =
        mod(mul_mod(t1, r1bar, M) - mul_mod(t2, r2bar, M) + mul_mod(mul_mod(r1bar, r2bar, M), mod(k.n, M), M), M);
    ComplexSum lhs;
    for (i64 b = 0; b < M; ++b) {
        for (i64 a1 = 1; a1 < M; ++a1) {
            const cplx x1 = chi(inv_mod(a1, M) + k.r1);
            for (i64 a2 = 1; a2 < M; ++a2) {
                const cplx x2 = std::conj(chi(inv_mod(a2, M) + k.r2));
                const i64 phase = mul_mod(b, mod(mul_mod(a1, t1, M) - mul_mod(a2, t2, M) + shift, M), M);
                lhs += x1 * x2 * e.at_reduced(phase);
                ++rep.lhs_terms;
            }
        }
    }
    rep.lhs = lhs.value();
    rep.rhs = cdagger_closed_form(k);
    rep.rhs_terms = M - 1;
    finish(rep);

    // The same x-sum as chi(Q1 / Q2).
    const CdaggerQuadratics q = cdagger_quadratics(k);
    const RationalCharSumSpec spec(chi, QuadPoly{q.q1[0], q.q1[1], q.q1[2]}, QuadPoly{q.q2[0], q.q2[1], q.q2[2]},
                                   {0});
    const cplx weil_form = static_cast<double>(M) * rational_char_sum(spec);
    bool ok = std::abs(weil_form - rep.rhs) <= kVerifyTolerance * std::max(1.0, std::abs(rep.rhs));

    if (mod(k.F(), M) == 0) {
        const i64 w = mul_mod(mul_mod(c1bar, mod(k.l1, M), M), mul_mod(mod(k.c2, M), inv_mod(k.l2, M), M), M);
        ComplexSum reduced;
        for (i64 x = 1; x < M; ++x) {
            const i64 xb = inv_mod(x, M);
            reduced += chi(mul_mod(w, xb, M) + k.r1) * std::conj(chi(xb + k.r2));
        }
        const cplx value = static_cast<double>(M) * reduced.value();
        ok = ok && std::abs(value - rep.rhs) <= kVerifyTolerance * std::max(1.0, std::abs(rep.rhs));
    }
    if (diagonal) {
        ok = ok && std::abs(rep.rhs - static_cast<double>(M * (M - 2))) <= kVerifyTolerance * M * M;
    }
    rep.pass = rep.pass && ok;
    return rep;
}

VerificationReport verify(const IdentityCase& k) {
    switch (k.tag) {
        case IdentityTag::Factorization: return verify_factorization(k);
        case IdentityTag::CpEval: return verify_cp_eval(k);
        case IdentityTag::PsiEval: return verify_psi_eval(k);
        case IdentityTag::Reciprocity: return verify_reciprocity(k);
        case IdentityTag::CGaussTwist: return verify_c_gauss_twist(k);
        case IdentityTag::CdaggerBsum:
        case IdentityTag::DiagonalDegen: return verify_cdagger_bsum(k);
    }
    throw std::logic_error("verify: unknown tag");
}

namespace {

i64 pick(std::mt19937_64& rng, std::initializer_list<i64> values) {
    const auto i = uniform_int(rng, 0, static_cast<i64>(values.size()) - 1);
    return *(values.begin() + i);
}

i64 random_coprime(std::mt19937_64& rng, i64 lo, i64 hi, i64 to) {
    for (;;) {
        const i64 v = uniform_int(rng, lo, hi);
        if (gcd(v, to) == 1) return v;
    }
}

// Tuples whose literal frak_c enumeration fits the term budget:
// (p - 1) (cpM)^2 <= 10^6.
IdentityCase frak_c_case(IdentityTag tag, std::mt19937_64& rng) {
    IdentityCase k;
    k.tag = tag;
    for (;;) {
        k.p = pick(rng, {3, 5, 7});
        k.M = pick(rng, {5, 7, 11, 13, 17, 19, 23});
        if (k.M == k.p) continue;
        const double cap = 1000.0 / std::sqrt(static_cast<double>(k.p - 1));
        const i64 c_max = static_cast<i64>(cap / static_cast<double>(k.p * k.M));
        if (c_max < 1) continue;
        k.c = random_coprime(rng, 1, c_max, k.M);
        break;
    }
    const i64 cp = k.c * k.p;
    k.m = uniform_int(rng, 1, 3 * k.p);
    k.n = uniform_int(rng, 1, 60);
    k.l = uniform_int(rng, 1, 40);
    k.chi = uniform_int(rng, 0, k.M - 2);
    k.sign = uniform_int(rng, 0, 1) ? 1 : -1;
    if (tag == IdentityTag::Factorization && uniform_int(rng, 0, 3) == 0) {
        k.r = uniform_int(rng, -3 * cp, 3 * cp);  // may share factors with cp
    } else {
        k.r = random_coprime(rng, 1, 3 * cp, cp) * (uniform_int(rng, 0, 1) ? 1 : -1);
    }
    return k;
}

}  // namespace

IdentityCase random_case(IdentityTag tag, std::mt19937_64& rng) {
    switch (tag) {
        case IdentityTag::Factorization:
        case IdentityTag::PsiEval:
            return frak_c_case(tag, rng);
        case IdentityTag::CpEval: {
            IdentityCase k;
            k.tag = tag;
            k.p = pick(rng, {3, 5, 7, 11, 13});
            do {
                k.M = pick(rng, {5, 7, 11, 13, 17, 19, 23, 29, 31});
            } while (k.M == k.p);
            k.c = random_coprime(rng, 1, 500 / k.p, k.M);
            const i64 cp = k.c * k.p;
            k.m = uniform_int(rng, 1, 3 * k.p);
            k.n = uniform_int(rng, 1, 60);
            k.l = uniform_int(rng, 1, 40);
            k.r = random_coprime(rng, 1, 3 * cp, cp) * (uniform_int(rng, 0, 1) ? 1 : -1);
            k.sign = uniform_int(rng, 0, 1) ? 1 : -1;
            k.chi = 0;
            return k;
        }
        case IdentityTag::Reciprocity: {
            IdentityCase k;
            k.tag = tag;
            k.p = 0;
            for (;;) {
                k.M = next_prime(uniform_int(rng, 2, 1000));
                k.c = uniform_int(rng, 1, 1000);
                const i64 r = uniform_int(rng, 1, 1000);
                if (k.c * r * k.M > 1'000'000) continue;
                if (gcd(k.c, r) != 1 || gcd(k.c, k.M) != 1 || gcd(r, k.M) != 1) continue;
                k.r = uniform_int(rng, 0, 1) ? r : -r;
                break;
            }
            k.n = uniform_int(rng, 0, 100000);
            k.l = uniform_int(rng, 1, 1000);
            return k;
        }
        case IdentityTag::CGaussTwist: {
            IdentityCase k;
            k.tag = tag;
            k.M = next_prime(uniform_int(rng, 3, 101));
            k.c = random_coprime(rng, 1, 50, k.M);
            k.n = uniform_int(rng, 0, 200);
            k.l = uniform_int(rng, 1, 50);
            k.r = uniform_int(rng, -2 * k.M, 2 * k.M);
            k.chi = uniform_int(rng, 1, k.M - 2);
            k.p = 0;
            return k;
        }
        case IdentityTag::CdaggerBsum:
        case IdentityTag::DiagonalDegen: {
            IdentityCase k;
            k.tag = tag;
            k.p = 0;
            k.M = pick(rng, {7, 11, 13});
            const i64 M = k.M;
            k.chi = uniform_int(rng, 1, M - 2);
            k.l1 = random_coprime(rng, 1, 30, M);
            k.l2 = random_coprime(rng, 1, 30, M);
            k.c1 = random_coprime(rng, 1, 30, M);
            k.c2 = random_coprime(rng, 1, 30, M);
            k.r1 = random_coprime(rng, 1, 30, M) * (uniform_int(rng, 0, 1) ? 1 : -1);
            k.r2 = random_coprime(rng, 1, 30, M) * (uniform_int(rng, 0, 1) ? 1 : -1);
            k.n = uniform_int(rng, -200, 200);
            const i64 mode = tag == IdentityTag::DiagonalDegen ? 0 : uniform_int(rng, 0, 5);
            if (mode == 0) {
                k.l2 = k.l1;
                k.c2 = k.c1;
                k.r2 = k.r1;
            }
            if (mode <= 2) {
                // Force M | F by choosing n in the right class.
                const i64 base = k.l1 * k.c2 * k.r2 - k.l2 * k.c1 * k.r1;
                const i64 cc = mod(k.c1 * k.c2, M);
                const i64 n0 = mul_mod(mod(-base, M), inv_mod(cc, M), M);
                k.n = n0 + M * uniform_int(rng, -3, 3);
            }
            return k;
        }
    }
    throw std::logic_error("random_case: unknown tag");
}

std::vector<VerificationReport> run_suite(IdentityTag tag, int count, u64 seed, int threads) {
    if (count < 0) throw std::invalid_argument("run_suite: count must be non-negative");
    std::vector<VerificationReport> out(static_cast<std::size_t>(count));
    const u64 stream_base = (static_cast<u64>(tag) + 1) << 32;
    parallel_for(out.size(), threads, [&](std::size_t i) {
        auto rng = stream_rng(seed, stream_base + i);
        out[i] = verify(random_case(tag, rng));
    });
    return out;
}

std::vector<VerificationReport> run_all_suites(int count, u64 seed, int threads) {
    std::vector<VerificationReport> all;
    for (IdentityTag tag : {IdentityTag::Factorization, IdentityTag::CpEval, IdentityTag::PsiEval,
                            IdentityTag::Reciprocity, IdentityTag::CGaussTwist, IdentityTag::CdaggerBsum}) {
        auto part = run_suite(tag, count, seed, threads);
        all.insert(all.end(), part.begin(), part.end());
    }
    return all;
}

OffdiagTailReport offdiag_tail_report(double p, i64 M, i64 L, i64 N, i64 c_max, int k) {
    if (!(p > 0) || M < 1 || L < 1 || N < 1 || c_max < 1) {
        throw std::invalid_argument("offdiag_tail: parameters must be positive");
    }
    const BesselOrder order(k);
    const int nu = order.order();
    const double Nd = static_cast<double>(N), Ld = static_cast<double>(L), Md = static_cast<double>(M);
    const double worst = (2.0 * Nd * 2.0 * Ld) * (2.0 * Ld) * (3.0 * Nd);  // n l r
    OffdiagTailReport rep;
    rep.x1 = 4.0 * kPi * std::sqrt(worst) / (p * Md);
    CompensatedSum head;
    for (i64 c = 1; c <= c_max; ++c) {
        head += std::min(1.0, bessel_leading_term(nu, rep.x1 / static_cast<double>(c)));
    }
    rep.head = head.value();
    // sum_{c > C} (x1 / (2c))^nu / nu!  <=  (x1/2)^nu / nu! * C^{1-nu} / (nu - 1)
    rep.tail = bessel_leading_term(nu, rep.x1) / ((nu - 1) * std::pow(static_cast<double>(c_max), nu - 1));
    rep.bound = rep.head + rep.tail;
    return rep;
}

double offdiag_tail(double p, i64 M, i64 L, i64 N, i64 c_max, int k) {
    return offdiag_tail_report(p, M, L, N, c_max, k).bound;
}

}  // namespace burgess
