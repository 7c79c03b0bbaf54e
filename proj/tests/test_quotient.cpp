#include <gtest/gtest.h>

#include "oracle.hpp"
#include "torusclass/invariants.hpp"

using namespace torusclass;

namespace {

RingPresentation raw_ring(int ell, int w_degree, const std::vector<std::pair<Monomial, long long>>& terms,
                          const std::string& w = "z")
{
    auto g = RingPresentation::generators_for("x", w, w_degree);
    GradedPoly f(g);
    for (const auto& [m, c] : terms) f.add_term(m, c);
    return RingPresentation(ell, f);
}

}  // namespace

TEST(Canonicalize, DropsTermsKilledByTruncation)
{
    RingPresentation raw = raw_ring(3, 8, {{{0, 2}, 1}, {{4, 1}, 1}});
    EXPECT_FALSE(raw.is_canonical());
    RingPresentation c = canonicalize(raw);
    EXPECT_EQ(to_string(c.relation()), "z^2");
    EXPECT_EQ(to_string(c), "Z[x,z]/<x^4, z^2>");
}

TEST(Canonicalize, KeepsReducedRelations)
{
    RingPresentation r = raw_ring(5, 6, {{{0, 2}, 1}, {{3, 1}, 1}});
    EXPECT_EQ(canonicalize(r), r);
    RingPresentation a = raw_ring(1, 2, {{{0, 2}, 1}, {{1, 1}, 3}}, "y");
    EXPECT_EQ(to_string(canonicalize(a).relation()), "3*x*y + y^2");
}

TEST(Canonicalize, RejectsNonMonicRelation)
{
    EXPECT_THROW(raw_ring(2, 4, {{{0, 2}, 2}}), std::invalid_argument);
    EXPECT_THROW(raw_ring(2, 4, {{{0, 2}, 1}, {{1, 0}, 1}}), std::invalid_argument);  // inhomogeneous
}

TEST(NormalForm, Examples)
{
    RingPresentation a = cohomology({Family::A, 1, 3, 1, 1});
    GradedPoly y = a.w(), x = a.x();
    EXPECT_EQ(to_string(normal_form(y * y, a).poly), "-3*x*y");
    EXPECT_TRUE(normal_form(pow(x, 2), a).poly.is_zero());
    RingPresentation b = cohomology({Family::B, 3, 2, 1, 3});
    EXPECT_TRUE(normal_form(b.w() * b.w(), b).poly.is_zero());
    EXPECT_TRUE(normal_form(pow(b.x(), 4), b).poly.is_zero());
}

TEST(NormalForm, MatchesDenseOracle)
{
    // Every monomial x^a y^b with a <= 3, b <= 6 in the ring of A(2,rho,k1,k2).
    for (long long rho : {-2LL, 0LL, 3LL})
        for (int k1 = 1; k1 <= 2; ++k1)
            for (int k2 = 1; k2 <= 2; ++k2) {
                RingPresentation ring = cohomology({Family::A, 2, rho, k1, k2});
                oracle::DenseRing dense = oracle::projective_bundle_ring(2, rho, k1, k2);
                for (int a = 0; a <= 3; ++a)
                    for (int b = 0; b <= 6; ++b) {
                        GradedPoly m = GradedPoly::monomial(ring.generators_ptr(),
                                                            {static_cast<unsigned>(a), static_cast<unsigned>(b)}, 1);
                        auto expected = dense.mul(dense.pow(dense.lin(1, 0), a), dense.pow(dense.lin(0, 1), b));
                        EXPECT_EQ(to_string(normal_form(m, ring).poly), dense.text(expected))
                            << "rho=" << rho << " k1=" << k1 << " k2=" << k2 << " a=" << a << " b=" << b;
                    }
            }
}

TEST(NormalForm, RejectsForeignGenerators)
{
    RingPresentation ring = cohomology({Family::B, 2, 1, 2, 0});
    GradedPoly foreign = GradedPoly::generator(make_generators({{"u", 2}, {"v", 4}}), 0);
    EXPECT_THROW(normal_form(foreign, ring), std::invalid_argument);
}

TEST(RingEqual, Examples)
{
    RingPresentation a = cohomology({Family::A, 1, 3, 1, 1});
    EXPECT_TRUE(ring_equal(a.w() * a.w(), Integer(-3) * a.x() * a.w(), a));
    RingPresentation b = cohomology({Family::B, 3, 2, 2, 0});
    EXPECT_FALSE(ring_equal(b.x(), b.w(), b));
    EXPECT_TRUE(ring_equal(b.zero(), pow(b.x(), 4), b));
}

TEST(AdditiveRank, Examples)
{
    for (int ell = 1; ell <= 4; ++ell)
        for (int k = 1; k <= 4; ++k) {
            EXPECT_EQ(additive_rank(cohomology({Family::B, ell, 2, k, 0})), 2 * (ell + 1));
            EXPECT_EQ(additive_rank(cohomology({Family::A, ell, 1, k, 2})), (ell + 1) * (k + 2));
        }
    RingPresentation degenerate = raw_ring(1, 2, {{{0, 1}, 1}, {{1, 0}, 2}}, "w");
    EXPECT_EQ(additive_rank(degenerate), 2);
}

TEST(AdditiveRank, EqualsBasisSize)
{
    RingPresentation r = cohomology({Family::A, 3, 2, 2, 1});
    std::size_t n = 0;
    for (const auto& [deg, monos] : normal_basis(r)) n += monos.size();
    EXPECT_EQ(static_cast<int>(n), additive_rank(r));
    EXPECT_EQ(r.top_degree(), 2 * (3 + 3 - 1));
}

TEST(EvaluateHom, IdentityAndSigns)
{
    RingPresentation ring = cohomology({Family::B, 3, 2, 2, 0});
    GradedPoly p = pow(ring.x(), 2) + ring.x() * ring.w();
    EXPECT_EQ(evaluate_hom({ring.x(), ring.w()}, p, ring), normal_form(p, ring));
    EXPECT_EQ(to_string(evaluate_hom({-ring.x(), ring.w()}, pow(ring.x(), 2), ring).poly), "x^2");
}

TEST(EvaluateHom, TranslationOfTheSecondGenerator)
{
    // phi(x1) = x2, phi(w1) = a x2^k + w2 applied to w1 (w1 + rho1^k x1^k):
    // a(a + rho1^k) x^(2k) + (2a - rho2^k + rho1^k) x^k w in the target.
    const int ell = 5, k = 2;
    for (long long rho1 : {1LL, 3LL})
        for (long long rho2 : {1LL, -3LL})
            for (long long a : {-5LL, 0LL, 4LL}) {
                RingPresentation src = cohomology({Family::B, ell, rho1, k, 0});
                RingPresentation dst = cohomology({Family::B, ell, rho2, k, 0});
                GradedPoly img_w = Integer(a) * pow(dst.x(), k) + dst.w();
                NormalElement out = evaluate_hom({dst.x(), img_w}, src.relation(), dst);
                long long r1k = rho1 * rho1, r2k = rho2 * rho2;
                GradedPoly expected = Integer(a * (a + r1k)) * pow(dst.x(), 2 * k) +
                                      Integer(2 * a - r2k + r1k) * pow(dst.x(), k) * dst.w();
                EXPECT_EQ(out, normal_form(expected, dst)) << rho1 << " " << rho2 << " " << a;
            }
}

TEST(EvaluateHom, RejectsDegreeMismatch)
{
    RingPresentation ring = cohomology({Family::B, 3, 1, 2, 0});
    EXPECT_THROW(evaluate_hom({ring.x(), ring.x()}, ring.w(), ring), std::invalid_argument);
}

TEST(Mod2, ReductionKeepsShape)
{
    RingPresentation ring = cohomology({Family::A, 2, 3, 1, 1});
    RingPresentation r2 = reduce_mod2(ring);
    EXPECT_EQ(r2.domain(), CoeffDomain::Mod2);
    EXPECT_EQ(to_string(r2), "F2[x,y]/<x^3, x*y + y^2>");
}
