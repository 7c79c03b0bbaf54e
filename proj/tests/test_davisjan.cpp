#include <gtest/gtest.h>

#include "torusclass/davisjan.hpp"
#include "torusclass/isosearch.hpp"

using namespace torusclass;

namespace {

ManifoldDescriptor A(int l, long long rho, int k1, int k2) { return {Family::A, l, rho, k1, k2}; }
ManifoldDescriptor B(int l, long long rho, int k1, int k2) { return {Family::B, l, rho, k1, k2}; }

std::vector<std::string> texts(const std::vector<GradedPoly>& polys)
{
    std::vector<std::string> out;
    for (const auto& p : polys) out.push_back(to_string(p));
    return out;
}

CharMatrix hirzebruch(long long rho)
{
    CharMatrix m;
    m.blocks.sizes = {1, 1};
    m.rows = {{1, 0, 1, 0}, {0, 1, rho, 1}};
    m.column_blocks = {0, 1, 0, 1};
    return m;
}

}  // namespace

TEST(FaceRing, ProjectiveLine)
{
    FaceRingPresentation fr = face_ring(SimplexBlocks{{1}});
    EXPECT_EQ(fr.generators->size(), 2u);
    EXPECT_EQ(texts(fr.monomial_ideal), (std::vector<std::string>{"v1*v2"}));
    EXPECT_TRUE(fr.linear_ideal.empty());
}

TEST(FaceRing, TwoBlocks)
{
    FaceRingPresentation fr = face_ring(SimplexBlocks{{2, 1}});
    EXPECT_EQ(fr.generators->size(), 5u);
    EXPECT_EQ(texts(fr.monomial_ideal), (std::vector<std::string>{"v1*v2*v3", "v4*v5"}));
}

TEST(FaceRing, ProductBlocksFollowColumnAssignment)
{
    CharMatrix m = char_matrix_for(A(2, 1, 2, 1));
    FaceRingPresentation fr = face_ring(m);
    // v1, v2 | w1, w2 | v_(l+1), w_(k1+k2)
    EXPECT_EQ(texts(fr.monomial_ideal), (std::vector<std::string>{"v1*v2*v5", "v3*v4*v6"}));
}

TEST(FaceRing, RejectsEmptyBlocks)
{
    EXPECT_THROW(face_ring(SimplexBlocks{{}}), std::invalid_argument);
    EXPECT_THROW(face_ring(SimplexBlocks{{1, 0}}), std::invalid_argument);
}

TEST(LinearIdeal, Examples)
{
    EXPECT_EQ(texts(linear_ideal(hirzebruch(3))), (std::vector<std::string>{"v1 + v3", "v2 + 3*v3 + v4"}));
    CharMatrix cp1{{{1, 1}}, SimplexBlocks{{1}}, {}};
    EXPECT_EQ(texts(linear_ideal(cp1)), (std::vector<std::string>{"v1 + v2"}));
}

TEST(LinearIdeal, ZeroRowGivesZeroForm)
{
    CharMatrix m{{{1, 0, 1, 0}, {0, 0, 0, 0}}, SimplexBlocks{{1, 1}}, {0, 1, 0, 1}};
    auto forms = linear_ideal(m);
    ASSERT_EQ(forms.size(), 2u);
    EXPECT_TRUE(forms[1].is_zero());
    EXPECT_THROW(eliminate(face_ring(m), forms), elimination_error);
}

TEST(CharMatrixFor, Examples)
{
    for (long long rho : {-2LL, 0LL, 3LL}) {
        CharMatrix m = char_matrix_for(A(1, rho, 1, 1));
        EXPECT_EQ(m.rows, (std::vector<std::vector<long long>>{{1, 0, 1, 0}, {0, 1, rho, 1}}));
    }
    CharMatrix a = char_matrix_for(A(2, 0, 1, 1));
    EXPECT_EQ(a.rows, (std::vector<std::vector<long long>>{{1, 0, 0, 1, 0}, {0, 1, 0, 1, 0}, {0, 0, 1, 0, 1}}));
    EXPECT_EQ(char_matrix_for(B(2, 5, 1, 0)).rows, char_matrix_for(A(2, 5, 1, 1)).rows);
    EXPECT_THROW(char_matrix_for(B(2, 5, 1, 1)), descriptor_error);
    EXPECT_THROW(char_matrix_for(B(2, 5, 2, 0)), descriptor_error);
}

TEST(CharMatrixFor, ShapeIsNByNPlusTwo)
{
    CharMatrix m = char_matrix_for(A(3, 2, 2, 3));
    EXPECT_EQ(m.rows.size(), 7u);
    for (const auto& row : m.rows) EXPECT_EQ(row.size(), 9u);
    EXPECT_EQ(m.blocks.sizes, (std::vector<int>{3, 4}));
    EXPECT_NO_THROW(m.validate());
}

TEST(Eliminate, ProjectiveLine)
{
    CharMatrix cp1{{{1, 1}}, SimplexBlocks{{1}}, {}};
    Elimination e = eliminate_facets(face_ring(cp1), linear_ideal(cp1));
    EXPECT_EQ(to_string(e.ring), "Z[x,w]/<x^2, w>");
    EXPECT_EQ(additive_rank(e.ring), 2);
    EXPECT_EQ(texts(e.images), (std::vector<std::string>{"-x", "x"}));
}

TEST(Eliminate, HirzebruchSurface)
{
    Elimination e = eliminate_facets(face_ring(hirzebruch(3)), linear_ideal(hirzebruch(3)));
    EXPECT_EQ(to_string(e.ring), "Z[x,y]/<x^2, 3*x*y + y^2>");
    EXPECT_EQ(e.survivors, (std::vector<int>{2, 3}));
    EXPECT_EQ(texts(e.images), (std::vector<std::string>{"-x", "-3*x - y", "x", "y"}));
}

TEST(Eliminate, MatchesClosedFormOnSmallGrid)
{
    for (int l = 1; l <= 2; ++l)
        for (long long rho = -2; rho <= 2; ++rho)
            for (int k1 = 1; k1 <= 2; ++k1)
                for (int k2 = 1; k2 <= 2; ++k2) {
                    auto d = A(l, rho, k1, k2);
                    CharMatrix m = char_matrix_for(d);
                    Elimination e = eliminate_facets(face_ring(m), linear_ideal(m));
                    EXPECT_EQ(e.ring, cohomology(d)) << render(d);
                    DjClasses c = dj_characteristic_classes(e);
                    EXPECT_EQ(c.pontrjagin, pontrjagin(d)) << render(d);
                    EXPECT_EQ(c.stiefel_whitney, stiefel_whitney(d)) << render(d);
                }
}

TEST(Eliminate, SurvivorChoiceGivesIsomorphicRings)
{
    for (long long rho = -3; rho <= 3; ++rho)
        for (int k1 = 1; k1 <= 2; ++k1) {
            CharMatrix m = char_matrix_for(A(2, rho, k1, 1));
            FaceRingPresentation fr = face_ring(m);
            auto forms = linear_ideal(m);
            RingPresentation standard = eliminate_facets(fr, forms).ring;
            // First facet of each block survives instead of the last.
            RingPresentation other = eliminate_facets(fr, forms, std::vector<int>{0, 2}).ring;
            EXPECT_EQ(find_iso(standard, other, SearchConfig{64}).outcome, IsoOutcome::Found) << rho << " " << k1;
        }
}

TEST(Eliminate, Errors)
{
    CharMatrix bad{{{2, 3, 0, 0}, {0, 0, 2, 3}}, SimplexBlocks{{1, 1}}, {}};
    EXPECT_THROW(eliminate(face_ring(bad), linear_ideal(bad)), elimination_error);

    CharMatrix three{{{1, 0, 0, 1, 0, 0}, {0, 1, 0, 0, 1, 0}, {0, 0, 1, 0, 0, 1}}, SimplexBlocks{{1, 1, 1}}, {0, 1, 2, 0, 1, 2}};
    EXPECT_THROW(eliminate(face_ring(three), linear_ideal(three)), elimination_error);

    CharMatrix h = hirzebruch(1);
    EXPECT_THROW(eliminate_facets(face_ring(h), linear_ideal(h), std::vector<int>{1, 3}), elimination_error);
    EXPECT_THROW(eliminate_facets(face_ring(h), linear_ideal(h), std::vector<int>{0}), elimination_error);
}

TEST(Eliminate, RejectsMismatchedColumnCount)
{
    CharMatrix m{{{1, 0, 1}, {0, 1, 1}}, SimplexBlocks{{1, 1}}, {}};
    EXPECT_THROW(face_ring(m), std::invalid_argument);
}

TEST(CharacteristicClasses, ProjectiveLineAndPlane)
{
    CharMatrix cp1{{{1, 1}}, SimplexBlocks{{1}}, {}};
    DjClasses c1 = dj_characteristic_classes(cp1);
    EXPECT_EQ(to_string(c1.pontrjagin.poly), "1");
    EXPECT_EQ(to_string(c1.stiefel_whitney.poly), "1");

    CharMatrix cp2{{{1, 0, 1}, {0, 1, 1}}, SimplexBlocks{{2}}, {}};
    DjClasses c2 = dj_characteristic_classes(cp2);
    EXPECT_EQ(to_string(c2.pontrjagin.poly), "1 + 3*x^2");
    EXPECT_EQ(to_string(c2.stiefel_whitney.poly), "1 + x + x^2");
}

TEST(CharacteristicClasses, SphereBundleThroughProjectiveMatrix)
{
    DjClasses c = dj_characteristic_classes(char_matrix_for(B(3, 2, 1, 0)));
    EXPECT_EQ(c.pontrjagin, pontrjagin(A(3, 2, 1, 1)));
    EXPECT_EQ(c.stiefel_whitney, stiefel_whitney(A(3, 2, 1, 1)));
}

TEST(CharacteristicClasses, HirzebruchClosedForm)
{
    // p reduces to 1 for every rho; w = 1 + rho*x mod 2.
    for (long long rho = -3; rho <= 3; ++rho) {
        DjClasses c = dj_characteristic_classes(hirzebruch(rho));
        EXPECT_EQ(c.pontrjagin, pontrjagin(A(1, rho, 1, 1))) << rho;
        EXPECT_EQ(to_string(c.pontrjagin.poly), "1") << rho;
        EXPECT_EQ(to_string(c.stiefel_whitney.poly), rho % 2 ? "1 + x" : "1") << rho;
    }
}
