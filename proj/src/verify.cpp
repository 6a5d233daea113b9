#include "bsoc/verify.hpp"

#include <functional>
#include <sstream>

#include "bsoc/bscomb.hpp"
#include "bsoc/demazure.hpp"
#include "bsoc/errors.hpp"
#include "bsoc/flagpush.hpp"
#include "bsoc/randgen.hpp"
#include "bsoc/render.hpp"

namespace bsoc {

std::string to_string(CheckStatus s)
{
    switch (s) {
    case CheckStatus::pass:
        return "pass";
    case CheckStatus::fail:
        return "FAIL";
    case CheckStatus::precision:
        return "PRECISION";
    }
    return "?";
}

namespace {

std::string seq_str(const std::vector<int> &I)
{
    std::ostringstream os;
    os << "(";
    for (std::size_t k = 0; k < I.size(); ++k)
        os << (k ? "," : "") << I[k];
    os << ")";
    return os.str();
}

// Runs `body` once per case; body returns an empty string on success or a
// description of the failure.
CheckResult run_check(const std::string &name, int cases, const std::function<std::string(int)> &body)
{
    CheckResult r{name, CheckStatus::pass, 0, ""};
    for (int c = 0; c < cases; ++c) {
        ++r.cases;
        try {
            std::string why = body(c);
            if (!why.empty()) {
                r.status = CheckStatus::fail;
                r.detail = why;
                return r;
            }
        } catch (const PrecisionExhausted &e) {
            r.status = CheckStatus::precision;
            r.detail = e.what();
            return r;
        } catch (const MathError &e) {
            r.status = CheckStatus::fail;
            r.detail = e.what();
            return r;
        }
    }
    return r;
}

std::vector<std::vector<int>> default_sequences(int rank)
{
    std::vector<std::vector<int>> out{{}};
    for (int a = 1; a <= rank; ++a) {
        out.push_back({a});
        for (int b = 1; b <= rank; ++b)
            out.push_back({a, b});
    }
    out.push_back({1, 2, 1});
    if (rank >= 2)
        out.push_back({2, 1, 2});
    if (rank >= 3)
        out.push_back({1, 2, 3});
    return out;
}

} // namespace

std::vector<CheckResult> run_property_suite(std::shared_ptr<const FormalGroupAlgebra> S, const VerifyOptions &opt)
{
    const RootDatum &R = S->datum();
    const FormalGroupLaw &F = S->law();
    const bool beta = F.kind() == FglKind::multiplicative;
    const int n = opt.random_cases;
    RandomSource rng(opt.seed);
    auto seqs = opt.sequences.empty() ? default_sequences(R.rank()) : opt.sequences;
    for (const auto &I : seqs)
        for (int i : I)
            if (i < 1 || i > R.rank())
                throw ConfigError("sequence index out of range");
    auto rand_series = [&](int deg) { return rng.series(*S, deg, 5, beta); };
    auto aug = [&](int deg) { return rng.augmented_series(*S, deg, 5, beta); };
    auto seq_for = [&](int c) { return seqs[static_cast<std::size_t>(c) % seqs.size()]; };

    std::vector<CheckResult> out;

    out.push_back(run_check("fga: formal sum commutative and associative", n, [&](int) -> std::string {
        Series a = aug(3), b = aug(3), c = aug(3);
        if (!agree(formal_sum(F, a, b), formal_sum(F, b, a)))
            return "F(a,b) != F(b,a) for a = " + a.str();
        if (!agree(formal_sum(F, formal_sum(F, a, b), c), formal_sum(F, a, formal_sum(F, b, c))))
            return "associativity fails for a = " + a.str();
        return "";
    }));
    out.push_back(run_check("fga: x_{l+m} = F(x_l, x_m), x_0 = 0", n, [&](int) -> std::string {
        if (!S->x(LatticeVector::zero(R.rank())).is_zero())
            return "x_0 != 0";
        LatticeVector l = rng.weight(R.rank()), m = rng.weight(R.rank());
        if (!agree(S->x(l + m), S->sum(S->x(l), S->x(m))))
            return "well-definedness fails";
        return "";
    }));
    out.push_back(run_check("fga: formal inverse is an involution", n, [&](int) -> std::string {
        Series a = aug(3);
        if (!agree(S->inverse(S->inverse(a)), a))
            return "inverse(inverse(a)) != a for a = " + a.str();
        return "";
    }));
    out.push_back(run_check("fga: Weyl action is a ring morphism", n, [&](int) -> std::string {
        Series a = rand_series(3), b = rand_series(3);
        WeylElement w = rng.weyl(R);
        if (!agree(S->act(w, a * b), S->act(w, a) * S->act(w, b)) ||
            !agree(S->act(w, a + b), S->act(w, a) + S->act(w, b)))
            return "morphism property fails";
        WeylElement r = R.reflection(rng.root(R));
        if (!agree(S->act(r, S->act(r, a)), a))
            return "reflection not involutive";
        return "";
    }));
    out.push_back(run_check("fga: exact division round trip", n, [&](int) -> std::string {
        Series q = rand_series(3);
        Series d = S->x(rng.root(R)) * S->x(rng.root(R));
        if (!agree(exact_divide(q * d, d), q))
            return "(q d)/d != q";
        return "";
    }));
    out.push_back(run_check("demazure: s_a D_a(p) = -D_{-a}(p)", n, [&](int) -> std::string {
        LatticeVector a = rng.root(R);
        Series p = rand_series(4);
        if (!agree(S->act(R.reflection(a), demazure(*S, a, p)), -demazure(*S, -a, p)))
            return "fails for root " + weight_label(R, a) + ", p = " + p.str();
        return "";
    }));
    out.push_back(run_check("demazure: twisted Leibniz rule", n, [&](int) -> std::string {
        LatticeVector a = rng.root(R);
        Series p = rand_series(3), q = rand_series(3);
        Series dp = demazure(*S, a, p), dq = demazure(*S, a, q);
        if (!agree(demazure(*S, a, p * q), dp * q + p * dq - dp * dq * S->x(a)))
            return "fails for root " + weight_label(R, a);
        return "";
    }));
    out.push_back(run_check("demazure: D_a kills s_a-invariants", n, [&](int) -> std::string {
        LatticeVector a = rng.root(R);
        Series p = rand_series(3);
        Series inv = p + S->act(R.reflection(a), p);
        if (!demazure(*S, a, inv).is_zero())
            return "D_a(p + s_a p) != 0 for root " + weight_label(R, a);
        return "";
    }));
    out.push_back(run_check("demazure: divisibility lemma", n, [&](int) -> std::string {
        WeylElement v = rng.weyl(R), w = rng.weyl(R);
        LatticeVector a = rng.root(R);
        Series p = rand_series(4);
        Series q = div_lemma_quotient(*S, v, w, a, p);
        Series lhs = S->act(v * R.reflection(a) * w, p) - S->act(v * w, p);
        if (!agree(q * S->x(v.apply(a)), lhs))
            return "quotient does not multiply back";
        return "";
    }));
    out.push_back(run_check("bscomb: restriction skew-triangular, regular skew diagonal",
                            static_cast<int>(seqs.size()), [&](int c) -> std::string {
        BottSamelson X(S, seqs[c]);
        const int l = X.length();
        for (std::uint32_t b = 0; b < X.num_points(); ++b) {
            Subset L{b};
            GkmElement row = X.restrict_eta(L);
            for (std::uint32_t m = 0; m < X.num_points(); ++m)
                if (!Subset{m}.disjoint_from(L) && !row.values[m].is_zero())
                    return "nonzero entry off the triangle for " + seq_str(seqs[c]);
            const Series &diag = row[L.complement(l)];
            if (diag.is_zero() && L.size() > diag.precision())
                throw PrecisionExhausted("skew-diagonal entry of degree " + std::to_string(L.size()) +
                                         " vanishes at precision " + std::to_string(diag.precision()));
            if (!S->is_regular(diag.lowest_form()))
                return "singular skew-diagonal entry for " + seq_str(seqs[c]);
        }
        return "";
    }));
    out.push_back(run_check("bscomb: eta -> fixed points -> eta is the identity", n, [&](int c) -> std::string {
        BottSamelson X(S, seq_for(c));
        EtaVector v;
        for (std::size_t b = 0; b < X.num_points(); ++b)
            v.coeffs.push_back(rand_series(3));
        GkmElement g = X.eta_to_gkm(v);
        if (!X.gkm_check(g).ok)
            return "image element fails the GKM test for " + seq_str(X.seq());
        if (!agree(X.gkm_to_eta(g), v))
            return "round trip differs for " + seq_str(X.seq());
        return "";
    }));
    out.push_back(run_check("bscomb: c_I(u) in eta basis restricts to v^L(u)", n, [&](int c) -> std::string {
        BottSamelson X(S, seq_for(c));
        Series u = rand_series(3);
        if (!agree(X.eta_to_gkm(X.char_in_eta(u)), X.char_restrict(u)))
            return "mismatch for " + seq_str(X.seq()) + ", u = " + u.str();
        return "";
    }));
    out.push_back(run_check("bscomb: eta_j^2 matches the quadratic relation", static_cast<int>(seqs.size()),
                            [&](int c) -> std::string {
        BottSamelson X(S, seqs[c]);
        for (int j = 1; j <= X.length(); ++j) {
            EtaVector e = X.eta_unit(Subset::of({j}));
            if (!agree(X.eta_multiply(e, e), X.quadratic_relation(j)))
                return "j = " + std::to_string(j) + " for " + seq_str(seqs[c]);
        }
        return "";
    }));
    out.push_back(run_check("bscomb: eta product commutative with unit eta_0", n, [&](int c) -> std::string {
        BottSamelson X(S, seq_for(c));
        EtaVector a, b;
        for (std::size_t k = 0; k < X.num_points(); ++k) {
            a.coeffs.push_back(rand_series(2));
            b.coeffs.push_back(rand_series(2));
        }
        if (!agree(X.eta_multiply(a, b), X.eta_multiply(b, a)))
            return "ab != ba for " + seq_str(X.seq());
        if (!agree(X.eta_multiply(a, X.eta_unit(Subset{})), a))
            return "eta_0 is not the unit for " + seq_str(X.seq());
        return "";
    }));

    auto G = std::make_shared<FlagVariety>(S);
    out.push_back(run_check("flagpush: push-forward paths agree and are integral", static_cast<int>(seqs.size()),
                            [&](int c) -> std::string {
        const auto &I = seqs[c];
        const int l = static_cast<int>(I.size());
        if (l > 3)
            return "";
        for (std::uint32_t b = 0; b < (1u << l); ++b) {
            Subset L{b};
            auto sub = subsequence(I, L.complement(l));
            WFunction p = G->pushforward_eta(I, L);
            if (!p.integral())
                return "non-integral push-forward";
            if (!agree(p, G->bott_class_direct(sub)) || !agree(p, G->bott_samelson_class(sub)) ||
                !agree(p, G->pushforward_via_lemma(I, L)))
                return "paths disagree for " + seq_str(I) + ", L = " + L.label(l);
        }
        return "";
    }));
    out.push_back(run_check("flagpush: A_i A_i keeps values integral", R.rank(), [&](int c) -> std::string {
        WFunction f = G->bott_samelson_class({c + 1});
        WFunction g = G->push_pull(c + 1, f);
        if (!g.integral())
            return "A_i A_i of a class has denominators";
        return "";
    }));
    out.push_back(run_check("flagpush: Chevalley formula", static_cast<int>(seqs.size()), [&](int c) -> std::string {
        const auto &I = seqs[c];
        if (I.size() > 3)
            return "";
        for (int i = 0; i < R.rank(); ++i) {
            auto res = G->chevalley_check(I, S->variable(i));
            if (!res.ok)
                return "fails for " + seq_str(I) + " at w index " + std::to_string(res.first_bad);
        }
        return "";
    }));
    return out;
}

} // namespace bsoc
