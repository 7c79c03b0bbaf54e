#include <gtest/gtest.h>

#include "oracle.hpp"
#include "torusclass/intpoly.hpp"

using namespace torusclass;

namespace {

GeneratorsPtr xy() { return make_generators({{"x", 2}, {"y", 2}}); }
GeneratorsPtr xonly() { return make_generators({{"x", 2}}); }

GradedPoly x_series(const oracle::Series& s, const GeneratorsPtr& g, unsigned step = 1)
{
    GradedPoly p(g);
    for (std::size_t i = 0; i < s.size(); ++i) {
        Monomial m(g->size(), 0);
        m[0] = static_cast<unsigned>(i * step);
        p.add_term(m, s[i]);
    }
    return p;
}

}  // namespace

TEST(Add, Mod2SelfCancels)
{
    auto g = xonly();
    GradedPoly p = GradedPoly::constant(g, 1, CoeffDomain::Mod2) + GradedPoly::generator(g, 0, CoeffDomain::Mod2);
    EXPECT_TRUE((p + p).is_zero());
}

TEST(Add, ZeroIsIdentity)
{
    auto g = xonly();
    GradedPoly p = GradedPoly::constant(g, 1) + GradedPoly::generator(g, 0);
    EXPECT_EQ(p + GradedPoly(g), p);
    EXPECT_EQ(to_string(p), "1 + x");
}

TEST(Add, CollectsLikeTerms)
{
    auto g = xonly();
    GradedPoly x2 = GradedPoly::monomial(g, {2}, 1);
    EXPECT_EQ(to_string(x2 + Integer(4) * x2), "5*x^2");
}

TEST(Add, RejectsDifferentGenerators)
{
    GradedPoly p = GradedPoly::generator(xy(), 0);
    GradedPoly q = GradedPoly::generator(make_generators({{"x", 2}, {"z", 4}}), 0);
    EXPECT_THROW(p + q, std::invalid_argument);
    EXPECT_THROW(p * q, std::invalid_argument);
}

TEST(Add, RejectsDifferentDomains)
{
    auto g = xonly();
    EXPECT_THROW(GradedPoly::generator(g, 0) + GradedPoly::generator(g, 0, CoeffDomain::Mod2), std::invalid_argument);
}

TEST(Mul, SquareOfOnePlusX)
{
    auto g = xonly();
    GradedPoly p = GradedPoly::constant(g, 1) + GradedPoly::generator(g, 0);
    EXPECT_EQ(to_string(p * p), "1 + 2*x + x^2");
}

TEST(Mul, ShiftedLinearFactor)
{
    auto g = xy();
    GradedPoly x = GradedPoly::generator(g, 0), y = GradedPoly::generator(g, 1);
    EXPECT_EQ(to_string(y * (y + Integer(3) * x)), "3*x*y + y^2");
}

TEST(Mul, MatchesConvolutionOracle)
{
    // (1+x^2)^4 (1+4x^2)
    auto g = xonly();
    GradedPoly x2 = GradedPoly::monomial(g, {2}, 1), one = GradedPoly::constant(g, 1);
    GradedPoly product = pow(one + x2, 4) * (one + Integer(4) * x2);
    oracle::Series expected = oracle::convolve(oracle::linear_power(1, 1, 4), {1, 4});
    EXPECT_EQ(product, x_series(expected, g, 2));
    EXPECT_EQ(to_string(product), oracle::series_text(expected, "x", 2));
}

TEST(Pow, ZeroExponentIsOne)
{
    auto g = xonly();
    GradedPoly p = GradedPoly::constant(g, 1) + GradedPoly::generator(g, 0);
    EXPECT_EQ(to_string(pow(p, 0)), "1");
}

TEST(Pow, FrobeniusMod2)
{
    auto g = xonly();
    GradedPoly p = GradedPoly::constant(g, 1, CoeffDomain::Mod2) + GradedPoly::generator(g, 0, CoeffDomain::Mod2);
    EXPECT_EQ(to_string(pow(p, 2)), "1 + x^2");
}

TEST(Pow, BinomialOracle)
{
    auto g = xonly();
    GradedPoly p = GradedPoly::constant(g, 1) + Integer(2) * GradedPoly::generator(g, 0);
    EXPECT_EQ(pow(p, 3), x_series(oracle::linear_power(1, 2, 3), g));
    for (int e = 0; e <= 9; ++e)
        for (int c = -3; c <= 3; ++c) {
            GradedPoly q = GradedPoly::constant(g, 1) + Integer(c) * GradedPoly::generator(g, 0);
            EXPECT_EQ(pow(q, e), x_series(oracle::linear_power(1, c, e), g)) << "c=" << c << " e=" << e;
        }
}

TEST(ReduceMod2, Examples)
{
    auto g = xonly();
    EXPECT_EQ(to_string(reduce_mod2(x_series({1, 2, 1}, g))), "1 + x^2");
    EXPECT_TRUE(reduce_mod2(GradedPoly(g)).is_zero());
    EXPECT_EQ(to_string(reduce_mod2(x_series(oracle::linear_power(1, 2, 3), g))), "1");
    EXPECT_EQ(to_string(reduce_mod2(x_series({-1, -3}, g))), "1 + x");
    EXPECT_THROW(reduce_mod2(reduce_mod2(GradedPoly::generator(g, 0))), std::invalid_argument);
}

TEST(GradedComponent, Examples)
{
    auto g = xonly();
    GradedPoly p = x_series({1, 8, 22}, g, 2);
    EXPECT_EQ(to_string(graded_component(p, 4)), "8*x^2");
    EXPECT_EQ(to_string(graded_component(p, 0)), "1");
    EXPECT_TRUE(graded_component(p, 2).is_zero());
    // (1+x^2)^4 (1+4x^2): p1 coefficient is (l+1) + k1 rho^2 = 4 + 4.
    GradedPoly one = GradedPoly::constant(g, 1), x2 = GradedPoly::monomial(g, {2}, 1);
    EXPECT_EQ(to_string(graded_component(pow(one + x2, 4) * (one + Integer(4) * x2), 4)), "8*x^2");
}

TEST(Generators, RejectOddOrNonPositiveDegrees)
{
    EXPECT_THROW(make_generators({{"x", 3}}), std::invalid_argument);
    EXPECT_THROW(make_generators({{"x", 0}}), std::invalid_argument);
    EXPECT_NO_THROW(make_generators({{"z", 8}}));
}

TEST(Degrees, UseGeneratorDegrees)
{
    auto g = make_generators({{"x", 2}, {"z", 8}});
    GradedPoly p = GradedPoly::monomial(g, {1, 2}, 3);
    EXPECT_EQ(p.max_degree(), 18);
    EXPECT_TRUE(p.is_homogeneous());
    EXPECT_FALSE((p + GradedPoly::constant(g, 1)).is_homogeneous());
    EXPECT_EQ(GradedPoly(g).max_degree(), -1);
}

TEST(TextForm, GradedLexOrderAndSigns)
{
    auto g = xy();
    GradedPoly x = GradedPoly::generator(g, 0), y = GradedPoly::generator(g, 1);
    GradedPoly p = pow(y, 3) + Integer(6) * x * y * y + Integer(9) * x * x * y;
    EXPECT_EQ(to_string(p), "9*x^2*y + 6*x*y^2 + y^3");
    EXPECT_EQ(to_string(-x + y - GradedPoly::constant(g, 2)), "-2 - x + y");
    EXPECT_EQ(to_string(GradedPoly(g)), "0");
}

TEST(Substitute, ComposesPolynomials)
{
    auto g = xy();
    GradedPoly x = GradedPoly::generator(g, 0), y = GradedPoly::generator(g, 1);
    GradedPoly p = x * y + y;
    GradedPoly r = substitute(p, {x + y, x - y});
    EXPECT_EQ(r, (x + y) * (x - y) + (x - y));
}

TEST(Mod2, CoefficientsStayBinary)
{
    auto g = xonly();
    GradedPoly p = GradedPoly::monomial(g, {1}, 7, CoeffDomain::Mod2);
    EXPECT_EQ(p.coefficient({1}), 1);
    EXPECT_TRUE(GradedPoly::monomial(g, {1}, -4, CoeffDomain::Mod2).is_zero());
}
