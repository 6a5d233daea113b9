#include <gtest/gtest.h>

#include <memory>

#include "bsoc/demazure.hpp"
#include "bsoc/randgen.hpp"
#include "oracle/poly_oracle.hpp"

using namespace bsoc;

namespace {

std::shared_ptr<FormalGroupAlgebra> make(const char *type, FormalGroupLaw F, int p = 8)
{
    return std::make_shared<FormalGroupAlgebra>(RootDatum::named(type), std::move(F), p);
}

} // namespace

TEST(Demazure, KillsConstants)
{
    auto S = make("A2", FormalGroupLaw::multiplicative());
    for (const auto &r : S->datum().roots())
        EXPECT_TRUE(demazure(*S, r, S->constant(Coefficient::beta_power(1))).is_zero());
}

TEST(Demazure, AdditiveA2Values)
{
    auto S = make("A2", FormalGroupLaw::additive());
    const auto &R = S->datum();
    const auto a1 = R.simple_root(1), a2 = R.simple_root(2);
    Series d11 = demazure(*S, a1, S->x(a1));
    Series d12 = demazure(*S, a1, S->x(a2));
    EXPECT_EQ(d11, S->constant(Coefficient(2)).truncated(7));
    EXPECT_EQ(d12, S->constant(Coefficient(-1)).truncated(7));

    // Same values from the polynomial model.
    oracle::Lattice lat{R.cartan()};
    auto x1 = oracle::Poly::linear(a1.coords), x2 = oracle::Poly::linear(a2.coords);
    EXPECT_EQ(oracle::divide_linear(x1 - lat.act({1}, x1), x1), oracle::Poly::constant(2, 2));
    EXPECT_EQ(oracle::divide_linear(x2 - lat.act({1}, x2), x1), oracle::Poly::constant(2, -1));
}

TEST(Demazure, AdditiveMatchesDividedDifference)
{
    auto S = make("B2", FormalGroupLaw::additive());
    const auto &R = S->datum();
    oracle::Lattice lat{R.cartan()};
    RandomSource rng(21);
    for (int t = 0; t < 20; ++t) {
        Series p = rng.series(*S, 5);
        const int i = rng.uniform(1, 2);
        const auto a = R.simple_root(i);
        auto op = oracle::from_series(p);
        auto expect = oracle::divide_linear(op - lat.act({i}, op), oracle::Poly::linear(a.coords));
        Series got = demazure(*S, a, p);
        EXPECT_EQ(oracle::from_series(got), expect.upto(got.precision()));
    }
}

TEST(Demazure, InvariantsAreKilled)
{
    auto S = make("A2", FormalGroupLaw::multiplicative());
    const auto &R = S->datum();
    for (const auto &a : R.positive_roots()) {
        Series p = S->x(a) * S->x(-a);
        ASSERT_EQ(S->act(R.reflection(a), p), p);
        EXPECT_TRUE(demazure(*S, a, p).is_zero());
    }
}

TEST(Demazure, Identities)
{
    for (auto F : {FormalGroupLaw::additive(), FormalGroupLaw::multiplicative()}) {
        auto S = make("A2", F, 7);
        const auto &R = S->datum();
        RandomSource rng(13);
        const bool beta = F.kind() == FglKind::multiplicative;
        for (int t = 0; t < 15; ++t) {
            const auto a = rng.root(R);
            Series p = rng.series(*S, 4, 5, beta), q = rng.series(*S, 4, 5, beta);
            // s_a Delta_a(p) = -Delta_{-a}(p)
            EXPECT_EQ(S->act(R.reflection(a), demazure(*S, a, p)), -demazure(*S, -a, p));
            // Twisted Leibniz rule.
            Series dp = demazure(*S, a, p), dq = demazure(*S, a, q);
            EXPECT_TRUE(agree(demazure(*S, a, p * q), dp * q + p * dq - dp * dq * S->x(a)));
        }
    }
}

TEST(Theta, EmptySubsetIsWeylAction)
{
    auto S = make("A3", FormalGroupLaw::multiplicative());
    const auto &R = S->datum();
    RandomSource rng(1);
    Series u = rng.series(*S, 3, 5, true);
    std::vector<int> I{1, 3, 2, 1};
    EXPECT_EQ(theta_apply(*S, I, Subset{}, u), S->act(R.weyl_from_word(I), u));
}

TEST(Theta, BaseCaseAndComposition)
{
    auto S = make("A2", FormalGroupLaw::multiplicative());
    const auto &R = S->datum();
    const auto a1 = R.simple_root(1), a2 = R.simple_root(2);
    Series u = S->x(LatticeVector({1, 0}));
    EXPECT_EQ(theta_apply(*S, {1}, Subset::of({1}), u), demazure(*S, -a1, u));
    Series w = S->x(-a2);
    EXPECT_EQ(theta_apply(*S, {1, 2}, Subset::of({2}), w),
              S->act(R.simple_reflection(1), demazure(*S, -a2, w)));
    EXPECT_EQ(theta_apply(*S, {1, 2}, Subset::of({1, 2}), w), demazure(*S, -a1, demazure(*S, -a2, w)));
}

TEST(DivLemma, RandomCases)
{
    for (auto F : {FormalGroupLaw::additive(), FormalGroupLaw::multiplicative()}) {
        auto S = make("A2", F, 7);
        const auto &R = S->datum();
        RandomSource rng(17);
        for (int t = 0; t < 10; ++t) {
            WeylElement v = rng.weyl(R), w = rng.weyl(R);
            const auto a = rng.root(R);
            Series p = rng.series(*S, 4, 5, F.kind() == FglKind::multiplicative);
            Series q = div_lemma_quotient(*S, v, w, a, p);
            Series lhs = S->act(v * R.reflection(a) * w, p) - S->act(v * w, p);
            EXPECT_TRUE(agree(q * S->x(v.apply(a)), lhs));
        }
        // v = s_a, a simple: divisible by x_{-a}.
        const auto a1 = R.simple_root(1);
        Series p = rng.series(*S, 4, 5);
        EXPECT_NO_THROW(div_lemma_quotient(*S, R.simple_reflection(1), R.identity(), a1, p));
        // v = w = e is the Demazure operator up to sign.
        EXPECT_EQ(div_lemma_quotient(*S, R.identity(), R.identity(), a1, p), -demazure(*S, a1, p));
    }
}
