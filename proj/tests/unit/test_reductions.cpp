#include <gtest/gtest.h>

#include <cmath>

#include "burgess/errors.hpp"
#include "burgess/expsums.hpp"
#include "burgess/parallel.hpp"
#include "burgess/reductions.hpp"

using namespace burgess;

namespace {

IdentityCase frak_case(IdentityTag tag, i64 p, i64 c, i64 M, i64 m, i64 n, i64 l, i64 r, i64 chi) {
    IdentityCase k;
    k.tag = tag;
    k.p = p;
    k.c = c;
    k.M = M;
    k.m = m;
    k.n = n;
    k.l = l;
    k.r = r;
    k.chi = chi;
    return k;
}

IdentityCase bsum_case(i64 M, i64 l1, i64 l2, i64 c1, i64 c2, i64 r1, i64 r2, i64 n, i64 chi) {
    IdentityCase k;
    k.tag = IdentityTag::CdaggerBsum;
    k.M = M;
    k.l1 = l1;
    k.l2 = l2;
    k.c1 = c1;
    k.c2 = c2;
    k.r1 = r1;
    k.r2 = r2;
    k.n = n;
    k.chi = chi;
    return k;
}

}  // namespace

TEST(Tags, RoundTrip) {
    for (auto t : {IdentityTag::Factorization, IdentityTag::CpEval, IdentityTag::PsiEval, IdentityTag::Reciprocity,
                   IdentityTag::CGaussTwist, IdentityTag::CdaggerBsum, IdentityTag::DiagonalDegen}) {
        EXPECT_EQ(parse_identity_tag(to_string(t)), t);
    }
    EXPECT_THROW(parse_identity_tag("NOPE"), UsageError);
}

TEST(Factorization, Examples) {
    const auto rep = verify_factorization(frak_case(IdentityTag::Factorization, 3, 1, 5, 1, 1, 1, 1, 2));
    EXPECT_TRUE(rep.pass);
    EXPECT_LE(rep.abs_err, 1e-10);
    EXPECT_GT(std::abs(rep.lhs), 1.0);

    for (i64 r : {3, 6, -9, 0}) {
        const auto z = verify_factorization(frak_case(IdentityTag::Factorization, 3, 1, 5, 1, 1, 1, r, 2));
        EXPECT_TRUE(z.pass);
        EXPECT_LT(std::abs(z.lhs), 1e-10);
        EXPECT_LT(std::abs(z.rhs), 1e-10);
    }
    EXPECT_THROW(verify_factorization(frak_case(IdentityTag::Factorization, 3, 5, 5, 1, 1, 1, 1, 1)),
                 ParameterDegeneracy);
    EXPECT_THROW(verify_factorization(frak_case(IdentityTag::Factorization, 5, 1, 5, 1, 1, 1, 1, 1)),
                 ParameterDegeneracy);
    EXPECT_THROW(verify_factorization(frak_case(IdentityTag::Factorization, 4, 1, 5, 1, 1, 1, 1, 1)),
                 ParameterDegeneracy);
}

TEST(Factorization, ConjugationWithSign) {
    // conj(frak_c(chi, n)) = -chi(-1) frak_c(chibar, -n).
    for (i64 chi_index : {1, 2, 3}) {
        const auto k = frak_case(IdentityTag::Factorization, 3, 2, 5, 1, 4, 3, 5, chi_index);
        auto kc = k;
        kc.chi = mod(-chi_index, 4);
        kc.n = -k.n;
        const double parity = build_character(5, chi_index).parity();
        const auto a = verify_factorization(k);
        const auto b = verify_factorization(kc);
        ASSERT_TRUE(a.pass && b.pass);
        EXPECT_LT(std::abs(std::conj(a.lhs) + parity * b.lhs), 1e-8 * std::max(1.0, std::abs(a.lhs)));
    }
}

TEST(CpEval, Examples) {
    auto k = frak_case(IdentityTag::CpEval, 3, 2, 5, 1, 2, 1, 1, 0);
    const auto rep = verify_cp_eval(k);
    EXPECT_TRUE(rep.pass);
    EXPECT_GT(std::abs(rep.rhs), 1.0);
    EXPECT_LE(rep.lhs_terms, 6 * 6 * 2);

    auto shifted = k;
    shifted.r += 6;
    const auto rep2 = verify_cp_eval(shifted);
    EXPECT_TRUE(rep2.pass);
    EXPECT_LT(std::abs(rep2.lhs - rep.lhs), 1e-10);
    EXPECT_LT(std::abs(rep2.rhs - rep.rhs), 1e-10);

    k.r = 3;
    const auto zero = verify_cp_eval(k);
    EXPECT_TRUE(zero.pass);
    EXPECT_EQ(zero.rhs, cplx(0, 0));
    EXPECT_LT(std::abs(zero.lhs), 1e-10);

    k.r = 1;
    k.sign = -1;
    EXPECT_TRUE(verify_cp_eval(k).pass);
}

TEST(PsiEval, Examples) {
    const auto rep = verify_psi_eval(frak_case(IdentityTag::PsiEval, 3, 2, 5, 1, 1, 2, 1, 1));
    EXPECT_TRUE(rep.pass);
    EXPECT_GT(std::abs(rep.lhs), 1.0);
    EXPECT_LE(rep.lhs_terms, 2 * 30 * 30 * 3);

    const auto zero = verify_psi_eval(frak_case(IdentityTag::PsiEval, 3, 2, 5, 3, 1, 2, 1, 1));
    EXPECT_TRUE(zero.pass);
    EXPECT_LT(std::abs(zero.lhs), 1e-10);
    EXPECT_LT(std::abs(zero.rhs), 1e-10);
    EXPECT_THROW(verify_psi_eval(frak_case(IdentityTag::PsiEval, 3, 2, 5, 1, 1, 2, 3, 1)), ParameterDegeneracy);
}

TEST(PsiEval, OppositeOrientationFails) {
    // With the signs of the two terms exchanged the identity breaks on the first nonzero tuple.
    auto rng = stream_rng(11, 0);
    int compared = 0;
    for (int t = 0; t < 50 && compared < 5; ++t) {
        const auto rep = verify_psi_eval(random_case(IdentityTag::PsiEval, rng));
        ASSERT_TRUE(rep.pass);
        if (std::abs(rep.rhs) < 1.0) continue;
        EXPECT_GT(std::abs(rep.lhs - (-rep.rhs)), 1e-3 * std::abs(rep.rhs));
        ++compared;
    }
    EXPECT_EQ(compared, 5);
}

TEST(Reciprocity, Examples) {
    const auto rep = verify_reciprocity(3, 4, 5, 1, 1);
    EXPECT_TRUE(rep.pass);
    EXPECT_EQ(rep.abs_err, 0.0);
    EXPECT_LT(std::abs(rep.lhs - expo(7, 20)), 1e-15);

    const auto one = verify_reciprocity(3, 4, 5, 60, 7);
    EXPECT_TRUE(one.pass);
    EXPECT_LT(std::abs(one.lhs - cplx(1, 0)), 1e-15);

    EXPECT_TRUE(verify_reciprocity(7, -9, 11, 123, 45).pass);
    EXPECT_TRUE(verify_reciprocity(1, 1, 2, 5, 1).pass);
    EXPECT_THROW(verify_reciprocity(6, 4, 5, 1, 1), NotCoprime);
    EXPECT_THROW(verify_reciprocity(3, 0, 5, 1, 1), NotCoprime);
}

TEST(Reciprocity, ExactSuiteAndConjugation) {
    auto rng = stream_rng(12, 0);
    for (int t = 0; t < 1000; ++t) {
        const auto k = random_case(IdentityTag::Reciprocity, rng);
        ASSERT_LE(k.c * std::abs(k.r) * k.M, 1'000'000);
        const auto a = verify_reciprocity(k);
        EXPECT_TRUE(a.pass);
        EXPECT_EQ(a.abs_err, 0.0);
        const auto b = verify_reciprocity(k.c, k.r, k.M, -k.n, k.l);
        EXPECT_LT(std::abs(std::conj(a.lhs) - b.lhs), 1e-12);
    }
}

TEST(GaussTwist, Examples) {
    IdentityCase k;
    k.tag = IdentityTag::CGaussTwist;
    k.M = 5;
    k.c = 2;
    k.n = 1;
    k.l = 1;
    k.r = 1;
    k.chi = 2;
    EXPECT_TRUE(verify_c_gauss_twist(k).pass);

    k.r = 0;
    k.n = 0;
    const auto z = verify_c_gauss_twist(k);
    EXPECT_TRUE(z.pass);
    EXPECT_LT(std::abs(z.lhs), 1e-12);

    k.chi = 0;
    EXPECT_THROW(verify_c_gauss_twist(k), NotPrimitive);
}

TEST(GaussTwist, Conjugation) {
    // conj(lhs(chi, n, r)) = chi(-1) lhs(chibar, -n, r).
    auto rng = stream_rng(13, 0);
    for (int t = 0; t < 30; ++t) {
        const auto k = random_case(IdentityTag::CGaussTwist, rng);
        auto kc = k;
        kc.chi = mod(-k.chi, k.M - 1);
        kc.n = -k.n;
        const double parity = build_character(k.M, k.chi).parity();
        const auto a = verify_c_gauss_twist(k);
        const auto b = verify_c_gauss_twist(kc);
        ASSERT_TRUE(a.pass && b.pass);
        EXPECT_LT(std::abs(parity * std::conj(a.lhs) - b.lhs), 1e-8 * std::max(1.0, std::abs(a.lhs)));
    }
}

TEST(Bsum, DiagonalExample) {
    const auto k = bsum_case(5, 1, 1, 1, 1, 1, 1, 0, 2);
    EXPECT_EQ(k.F(), 0);
    EXPECT_TRUE(cdagger_on_diagonal(k));
    const auto rep = verify_cdagger_bsum(k);
    EXPECT_TRUE(rep.pass);
    EXPECT_EQ(rep.tag, IdentityTag::DiagonalDegen);
    EXPECT_NEAR(rep.rhs.real(), 15.0, 1e-9);
    EXPECT_EQ(rep.lhs_terms, 5 * 4 * 4);
}

TEST(Bsum, DiagonalQuadraticsAreDegenerate) {
    auto rng = stream_rng(14, 0);
    for (int t = 0; t < 40; ++t) {
        const auto k = random_case(IdentityTag::DiagonalDegen, rng);
        ASSERT_TRUE(cdagger_on_diagonal(k));
        const auto q = cdagger_quadratics(k);
        const RationalCharSumSpec spec(build_character(k.M, k.chi), {q.q1[0], q.q1[1], q.q1[2]},
                                       {q.q2[0], q.q2[1], q.q2[2]}, {0});
        EXPECT_TRUE(spec.degenerate());
        EXPECT_NEAR(std::abs(cdagger_closed_form(k)), static_cast<double>(k.M * (k.M - 2)), 1e-8);
    }
}

TEST(Bsum, OffDiagonalWeilRegime) {
    auto rng = stream_rng(15, 0);
    int checked = 0;
    for (int t = 0; t < 200; ++t) {
        const auto k = random_case(IdentityTag::CdaggerBsum, rng);
        if (cdagger_on_diagonal(k)) continue;
        const auto rep = verify_cdagger_bsum(k);
        EXPECT_TRUE(rep.pass);
        EXPECT_EQ(rep.tag, IdentityTag::CdaggerBsum);
        EXPECT_LE(std::abs(rep.rhs), 4.0 * std::pow(static_cast<double>(k.M), 1.5));
        ++checked;
    }
    EXPECT_GT(checked, 100);
}

TEST(Bsum, ConjugationAndValidation) {
    const auto k = bsum_case(11, 2, 3, 4, 5, 6, -7, 9, 3);
    auto kc = k;
    kc.chi = mod(-k.chi, 10);
    const auto a = verify_cdagger_bsum(k);
    const auto b = verify_cdagger_bsum(kc);
    ASSERT_TRUE(a.pass && b.pass);
    EXPECT_LT(std::abs(std::conj(a.lhs) - b.lhs), 1e-8 * std::max(1.0, std::abs(a.lhs)));
    EXPECT_THROW(verify_cdagger_bsum(bsum_case(11, 11, 3, 4, 5, 6, 7, 9, 3)), ParameterDegeneracy);
    EXPECT_THROW(verify_cdagger_bsum(bsum_case(101, 1, 3, 4, 5, 6, 7, 9, 3)), ParameterDegeneracy);
}

TEST(Suites, AllPassAndThreadIndependent) {
    const auto one = run_all_suites(20, 7, 1);
    const auto many = run_all_suites(20, 7, 4);
    ASSERT_EQ(one.size(), 120u);
    ASSERT_EQ(many.size(), 120u);
    for (std::size_t i = 0; i < one.size(); ++i) {
        EXPECT_TRUE(one[i].pass) << to_string(one[i].tag) << " #" << i;
        EXPECT_EQ(one[i].tag, many[i].tag);
        EXPECT_EQ(one[i].lhs, many[i].lhs);
        EXPECT_EQ(one[i].rhs, many[i].rhs);
    }
}

TEST(OffdiagTail, MonotoneInKAndP) {
    const double base = offdiag_tail(8.0, 10007, 4, 10007);
    EXPECT_GT(offdiag_tail(0.08, 10007, 4, 10007), 1e-3);
    EXPECT_LT(offdiag_tail(8000.0, 10007, 4, 10007), 1e-12);
    EXPECT_LT(offdiag_tail(2000.0, 10007, 4, 10007, 1000, 15), offdiag_tail(2000.0, 10007, 4, 10007, 1000, 11));
    EXPECT_LT(offdiag_tail(16.0, 10007, 4, 10007), base);
    const auto rep = offdiag_tail_report(8.0, 10007, 4, 10007, 1000, 11);
    EXPECT_DOUBLE_EQ(rep.bound, rep.head + rep.tail);
    EXPECT_NEAR(rep.x1, 4 * 3.14159265358979323846 * std::sqrt(24.0 * 10007.0 * 10007.0 * 16.0) / (8.0 * 10007.0),
                1e-9);
    EXPECT_THROW(offdiag_tail(0.0, 10007, 4, 10007), std::invalid_argument);
    EXPECT_THROW(offdiag_tail(8.0, 10007, 4, 10007, 1000, 13), std::invalid_argument);
}
