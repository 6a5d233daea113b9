#include <gtest/gtest.h>

#include "bsoc/render.hpp"

using namespace bsoc;

TEST(Render, WeightLabels)
{
    auto R = RootDatum::named("B2");
    EXPECT_EQ(weight_label(*R, R->simple_root(1)), "a1");
    EXPECT_EQ(weight_label(*R, -(R->simple_root(1) + 2 * R->simple_root(2))), "-a1-2a2");
    EXPECT_EQ(weight_label(*R, LatticeVector::zero(2)), "0");
    auto A = RootDatum::named("A2");
    EXPECT_EQ(weight_label(*A, A->fundamental_weight(1)), "w1");
    EXPECT_EQ(weight_label(*A, LatticeVector({-1, 1})), "-w1+w2");
}

TEST(Render, Factored)
{
    for (auto F : {FormalGroupLaw::additive(), FormalGroupLaw::multiplicative()}) {
        FormalGroupAlgebra S(RootDatum::named("A2"), F, 6);
        const bool additive = F.kind() == FglKind::additive;
        const auto a1 = S.datum().simple_root(1), a2 = S.datum().simple_root(2);
        EXPECT_EQ(render_series(S, S.zero()), "0");
        EXPECT_EQ(render_series(S, S.one().scaled(Coefficient(Rational(-2)))), "-2");
        EXPECT_EQ(render_series(S, S.x(-a1)), "x(-a1)");
        EXPECT_EQ(render_series(S, S.x(-a1) * S.x(a1 + a2)), "x(-a1)*x(a1+a2)");
        EXPECT_EQ(render_series(S, -(S.x(a1) * S.x(a2))), additive ? "x(-a1)*x(a2)" : "-x(a1)*x(a2)");
    }
    FormalGroupAlgebra S(RootDatum::named("A2"), FormalGroupLaw::additive(), 6);
    // Additive law: -x(a) renders as x(-a).
    EXPECT_EQ(render_series(S, -S.x(S.datum().simple_root(2))), "x(-a2)");
}

TEST(Render, RawFallbackIsExact)
{
    FormalGroupAlgebra S(RootDatum::named("A2"), FormalGroupLaw::additive(), 4);
    Series s = S.variable(0) * S.variable(0) + S.variable(1) * S.variable(1);
    EXPECT_FALSE(factor_series(S, s).has_value());
    EXPECT_EQ(render_series(S, s), "[" + s.str() + "]");
}
