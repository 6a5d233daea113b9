#include <gtest/gtest.h>

#include <memory>

#include "bsoc/errors.hpp"
#include "bsoc/flagpush.hpp"

using namespace bsoc;

namespace {

std::shared_ptr<FormalGroupAlgebra> make(const char *type, FormalGroupLaw F, int p = 8)
{
    return std::make_shared<FormalGroupAlgebra>(RootDatum::named(type), std::move(F), p);
}

WFunction constant(const FlagVariety &G, const Series &c)
{
    return WFunction{std::vector<LocalizedElement>(G.size(), LocalizedElement{c, {}})};
}

} // namespace

TEST(Weyl, Enumeration)
{
    EXPECT_EQ(enumerate_weyl(*RootDatum::named("A1")).size(), 2u);
    EXPECT_EQ(enumerate_weyl(*RootDatum::named("A2")).size(), 6u);
    EXPECT_EQ(enumerate_weyl(*RootDatum::named("B2")).size(), 8u);
    EXPECT_EQ(enumerate_weyl(*RootDatum::named("A3")).size(), 24u);
    EXPECT_EQ(enumerate_weyl(*RootDatum::named("G2")).size(), 12u);
    EXPECT_THROW(enumerate_weyl(*RootDatum::named("A3"), 10), ConfigError);
}

TEST(Flag, PointClass)
{
    auto S = make("A2", FormalGroupLaw::multiplicative());
    FlagVariety G(S);
    const auto &R = S->datum();
    const auto a1 = R.simple_root(1), a2 = R.simple_root(2);
    EXPECT_EQ(G.x_pi(), S->x(-a1) * S->x(-a2) * S->x(-a1 - a2));
    WFunction pt = G.pt_e();
    EXPECT_EQ(pt.values[0].num, G.x_pi());
    for (std::size_t k = 1; k < G.size(); ++k)
        EXPECT_TRUE(pt.values[k].num.is_zero());
}

TEST(Flag, A1FundamentalClass)
{
    for (auto F : {FormalGroupLaw::additive(), FormalGroupLaw::multiplicative()}) {
        auto S = make("A1", F);
        FlagVariety G(S);
        WFunction c = G.bott_samelson_class({1});
        EXPECT_TRUE(c.integral());
        EXPECT_TRUE(agree(c, constant(G, S->one())));
        EXPECT_TRUE(agree(G.pushforward_eta({1}, Subset{}), c));
        EXPECT_TRUE(agree(G.bott_class_direct({1}), c));
    }
}

TEST(Flag, PushPullOfOne)
{
    // A_i(1) is 0 for the additive law and beta for the multiplicative law.
    for (auto F : {FormalGroupLaw::additive(), FormalGroupLaw::multiplicative()}) {
        auto S = make("A2", F);
        FlagVariety G(S);
        Series expect = F.kind() == FglKind::additive ? S->zero() : S->constant(Coefficient::beta_power(1));
        for (int i = 1; i <= 2; ++i) {
            WFunction r = G.push_pull(i, constant(G, S->one()));
            EXPECT_TRUE(r.integral());
            EXPECT_TRUE(agree(r, constant(G, expect)));
            // A_i A_i keeps integral values integral.
            EXPECT_TRUE(G.push_pull(i, r).integral());
        }
    }
}

TEST(Flag, SupportOfBottSamelsonClass)
{
    auto S = make("A2", FormalGroupLaw::additive());
    FlagVariety G(S);
    const auto &R = S->datum();
    WFunction c = G.bott_samelson_class({1, 2});
    for (std::size_t k = 0; k < G.size(); ++k) {
        const auto &w = G.elements()[k];
        bool in_support = w.is_identity() || w == R.weyl_from_word({1}) || w == R.weyl_from_word({2}) ||
                          w == R.weyl_from_word({1, 2});
        EXPECT_EQ(!c.values[k].num.is_zero(), in_support) << k;
    }
}

TEST(Flag, FullSubsetIsSingleTerm)
{
    auto S = make("A2", FormalGroupLaw::multiplicative());
    FlagVariety G(S);
    std::vector<int> I{1, 2};
    BottSamelson X(S, I);
    WFunction f = G.pushforward_eta(I, Subset::full(2));
    Series expect = exact_divide(X.a_coeff(Subset::full(2), Subset{}) * G.x_pi(), X.x_IL(Subset{}));
    EXPECT_TRUE(agree(f.values[0].num, expect));
    for (std::size_t k = 1; k < G.size(); ++k)
        EXPECT_TRUE(f.values[k].num.is_zero());
}

TEST(Flag, TripleAgreement)
{
    for (const char *type : {"A2", "B2"})
        for (auto F : {FormalGroupLaw::additive(), FormalGroupLaw::multiplicative()}) {
            auto S = make(type, F);
            FlagVariety G(S);
            for (std::vector<int> I : {std::vector<int>{1, 2}, std::vector<int>{2, 1, 2}, std::vector<int>{1, 1}}) {
                const int l = static_cast<int>(I.size());
                for (std::uint32_t b = 0; b < (1u << l); ++b) {
                    Subset L{b};
                    auto sub = subsequence(I, L.complement(l));
                    WFunction p = G.pushforward_eta(I, L);
                    EXPECT_TRUE(p.integral());
                    EXPECT_TRUE(agree(p, G.bott_class_direct(sub))) << type << " " << b;
                    EXPECT_TRUE(agree(p, G.bott_samelson_class(sub))) << type << " " << b;
                    EXPECT_TRUE(agree(p, G.pushforward_via_lemma(I, L))) << type << " " << b;
                }
            }
        }
}

TEST(Flag, Chevalley)
{
    auto S = make("A2", FormalGroupLaw::multiplicative());
    FlagVariety G(S);
    EXPECT_TRUE(G.chevalley_check({1, 2}, S->variable(0)).ok);
    EXPECT_TRUE(G.chevalley_check({2, 1, 2}, S->variable(1)).ok);
    auto c = G.chevalley_expand({1, 2}, S->one());
    EXPECT_EQ(c[0], S->one());
    for (std::size_t b = 1; b < c.size(); ++b)
        EXPECT_TRUE(c[b].is_zero());
    auto A1 = make("A1", FormalGroupLaw::additive());
    FlagVariety P1(A1);
    EXPECT_TRUE(P1.chevalley_check({1}, A1->variable(0)).ok);
}

TEST(Flag, LocalizedArithmetic)
{
    auto S = make("A2", FormalGroupLaw::multiplicative());
    FlagVariety G(S);
    const auto a1 = S->datum().simple_root(1);
    // x_{-a1} / x_{a1} is the flip unit; no denominator survives.
    LocalizedElement e = G.fraction(S->one(), {-a1}, {a1});
    EXPECT_TRUE(e.integral());
    EXPECT_TRUE(agree(e.num * S->x(a1), S->x(-a1)));
    // 1/x_{-a1} keeps a positive-root denominator.
    LocalizedElement f = G.fraction(S->one(), {}, {-a1});
    ASSERT_EQ(f.den.size(), 1u);
    EXPECT_EQ(f.den[0], a1);
    LocalizedElement g = G.mul(f, G.integral(S->x(-a1)));
    EXPECT_TRUE(g.integral());
    EXPECT_TRUE(agree(g.num, S->one()));
}
