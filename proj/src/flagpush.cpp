#include "bsoc/flagpush.hpp"

#include <algorithm>
#include <sstream>

#include "bsoc/demazure.hpp"
#include "bsoc/errors.hpp"

namespace bsoc {

bool WFunction::integral() const
{
    return std::all_of(values.begin(), values.end(), [](const LocalizedElement &e) { return e.integral(); });
}

int WFunction::precision() const
{
    int p = Series::kMaxPrecision;
    for (const auto &v : values)
        p = std::min(p, v.num.precision());
    return p;
}

bool agree(const WFunction &a, const WFunction &b)
{
    if (a.values.size() != b.values.size())
        return false;
    for (std::size_t k = 0; k < a.values.size(); ++k)
        if (a.values[k].den != b.values[k].den || !agree(a.values[k].num, b.values[k].num))
            return false;
    return true;
}

std::vector<WeylElement> enumerate_weyl(const RootDatum &R, std::size_t bound)
{
    std::vector<WeylElement> out{R.identity()};
    std::map<IntMatrix, std::size_t> seen{{out[0].matrix(), 0}};
    for (std::size_t k = 0; k < out.size(); ++k) {
        for (int i = 1; i <= R.rank(); ++i) {
            WeylElement w = out[k] * R.simple_reflection(i);
            if (seen.count(w.matrix()))
                continue;
            if (out.size() >= bound)
                throw ConfigError("Weyl group larger than " + std::to_string(bound));
            seen.emplace(w.matrix(), out.size());
            out.push_back(std::move(w));
        }
    }
    return out;
}

std::vector<int> subsequence(const std::vector<int> &I, Subset keep)
{
    std::vector<int> out;
    for (int j = 1; j <= static_cast<int>(I.size()); ++j)
        if (keep.contains(j))
            out.push_back(I[j - 1]);
    return out;
}

FlagVariety::FlagVariety(std::shared_ptr<const FormalGroupAlgebra> ring, std::size_t bound) : ring_(std::move(ring))
{
    if (!ring_)
        throw std::invalid_argument("FlagVariety: null ring");
    const RootDatum &R = ring_->datum();
    elements_ = enumerate_weyl(R, bound);
    for (std::size_t k = 0; k < elements_.size(); ++k)
        index_.emplace(elements_[k].matrix(), k);
    for (std::size_t k = 0; k < elements_.size(); ++k)
        for (int i = 1; i <= R.rank(); ++i)
            right_mult_.push_back(index_of(elements_[k] * R.simple_reflection(i)));
    x_pi_ = ring_->x_product(R.negative_roots());

    // iota(t) = -t + ..., known one degree beyond the working precision so
    // that h(t) = iota(t)/t is known to the working precision.
    const int p = ring_->precision();
    Series iota = inverse_series(ring_->law(), p + 1);
    std::vector<Series::Term> shifted;
    for (const auto &[k, c] : iota.terms()) {
        auto e = key::exponents(k, 1);
        shifted.emplace_back(key::make({e[0] - 1}, key::beta(k)), c);
    }
    flip_series_ = Series::from_terms(1, std::max(0, iota.precision() - 1), std::move(shifted));
    flip_inverse_ = invert_unit(flip_series_);
}

std::size_t FlagVariety::index_of(const WeylElement &w) const
{
    auto it = index_.find(w.matrix());
    if (it == index_.end())
        throw std::invalid_argument("index_of: not an element of W");
    return it->second;
}

Series FlagVariety::x_pi_at(const WeylElement &w) const
{
    std::vector<LatticeVector> roots;
    for (const auto &g : ring_->datum().negative_roots())
        roots.push_back(w.apply(g));
    return ring_->x_product(roots);
}

const Series &FlagVariety::flip_unit(const LatticeVector &gamma) const
{
    std::lock_guard lock(unit_mutex_);
    auto it = units_.find(gamma);
    if (it == units_.end()) {
        Series x = ring_->x(gamma);
        it = units_.emplace(gamma, std::make_pair(compose(flip_series_, x), compose(flip_inverse_, x))).first;
    }
    return it->second.first;
}

const Series &FlagVariety::flip_unit_inverse(const LatticeVector &gamma) const
{
    flip_unit(gamma);
    std::lock_guard lock(unit_mutex_);
    return units_.at(gamma).second;
}

LocalizedElement FlagVariety::fraction(const Series &coef, const std::vector<LatticeVector> &num_roots,
                                       const std::vector<LatticeVector> &den_roots) const
{
    const RootDatum &R = ring_->datum();
    std::vector<LatticeVector> num = num_roots, rest;
    std::vector<Series> units;
    for (const auto &g : den_roots) {
        if (!R.is_root(g))
            throw std::invalid_argument("fraction: denominator factor is not a root");
        auto same = std::find(num.begin(), num.end(), g);
        if (same != num.end()) {
            num.erase(same);
            continue;
        }
        auto opp = std::find(num.begin(), num.end(), -g);
        if (opp != num.end()) {
            num.erase(opp);
            units.push_back(flip_unit(g));
            continue;
        }
        rest.push_back(g);
    }
    LocalizedElement out{coef * ring_->x_product(num), {}};
    for (const auto &g : rest) {
        if (R.is_positive_root(g)) {
            out.den.push_back(g);
        } else {
            // 1/x_g = (x_{-g}/x_g) / x_{-g}
            out.den.push_back(-g);
            units.push_back(flip_unit_inverse(-g));
        }
    }
    for (const auto &u : units)
        out.num *= u;
    std::sort(out.den.begin(), out.den.end());
    return canonicalize(std::move(out));
}

LocalizedElement FlagVariety::divide_by_root(const LocalizedElement &a, const LatticeVector &root) const
{
    const RootDatum &R = ring_->datum();
    if (!R.is_root(root))
        throw std::invalid_argument("divide_by_root: not a root");
    LocalizedElement out = a;
    if (R.is_positive_root(root)) {
        out.den.push_back(root);
    } else {
        out.den.push_back(-root);
        out.num *= flip_unit_inverse(-root);
    }
    std::sort(out.den.begin(), out.den.end());
    return out;
}

LocalizedElement FlagVariety::canonicalize(LocalizedElement a) const
{
    if (a.num.is_zero()) {
        // 0 + O(p) over d linear factors is only known to degree p - d.
        const int p = a.num.precision() - static_cast<int>(a.den.size());
        if (p < 0)
            throw PrecisionExhausted("zero numerator over " + std::to_string(a.den.size()) +
                                     " denominators at precision " + std::to_string(a.num.precision()));
        a.num = a.num.truncated(p);
        a.den.clear();
        return a;
    }
    std::vector<LatticeVector> kept;
    for (const auto &g : a.den) {
        try {
            a.num = exact_divide(a.num, ring_->x(g));
        } catch (const NotDivisible &) {
            kept.push_back(g);
        }
    }
    a.den = std::move(kept);
    return a;
}

namespace {

// Multiset difference of sorted vectors.
std::vector<LatticeVector> minus(const std::vector<LatticeVector> &a, const std::vector<LatticeVector> &b)
{
    std::vector<LatticeVector> out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

} // namespace

LocalizedElement FlagVariety::add(const LocalizedElement &a, const LocalizedElement &b) const
{
    std::vector<LatticeVector> u;
    std::set_union(a.den.begin(), a.den.end(), b.den.begin(), b.den.end(), std::back_inserter(u));
    Series num = a.num * ring_->x_product(minus(u, a.den)) + b.num * ring_->x_product(minus(u, b.den));
    return canonicalize({std::move(num), std::move(u)});
}

LocalizedElement FlagVariety::mul(const LocalizedElement &a, const LocalizedElement &b) const
{
    LocalizedElement out{a.num * b.num, a.den};
    out.den.insert(out.den.end(), b.den.begin(), b.den.end());
    std::sort(out.den.begin(), out.den.end());
    return canonicalize(std::move(out));
}

WFunction FlagVariety::zero() const
{
    return WFunction{std::vector<LocalizedElement>(size(), LocalizedElement{ring_->zero(), {}})};
}

WFunction FlagVariety::pt_e() const
{
    WFunction f = zero();
    f.values[0].num = x_pi_;
    return f;
}

WFunction FlagVariety::push_pull(int i, const WFunction &a) const
{
    const RootDatum &R = ring_->datum();
    if (i < 1 || i > R.rank())
        throw std::out_of_range("push_pull: simple index out of range");
    if (a.values.size() != size())
        throw std::invalid_argument("push_pull: function has the wrong size");
    WFunction out;
    for (std::size_t k = 0; k < size(); ++k) {
        const LatticeVector wa = elements_[k].apply(R.simple_root(i));
        const std::size_t ks = right_mult_[k * R.rank() + (i - 1)];
        out.values.push_back(add(divide_by_root(a.values[k], -wa), divide_by_root(a.values[ks], wa)));
    }
    return out;
}

WFunction FlagVariety::bott_samelson_class(const std::vector<int> &I) const
{
    WFunction acc = pt_e();
    for (int i : I)
        acc = push_pull(i, acc);
    return acc;
}

WFunction FlagVariety::accumulate(const std::vector<std::pair<std::size_t, LocalizedElement>> &terms,
                                  bool require_integral) const
{
    std::vector<std::vector<const LocalizedElement *>> slots(size());
    for (const auto &[k, e] : terms)
        slots[k].push_back(&e);
    WFunction out = zero();
    for (std::size_t k = 0; k < size(); ++k) {
        if (slots[k].empty())
            continue;
        LocalizedElement acc = *slots[k][0];
        for (std::size_t t = 1; t < slots[k].size(); ++t)
            acc = add(acc, *slots[k][t]);
        if (require_integral && !acc.integral()) {
            std::ostringstream os;
            os << "push-forward value at w = s(";
            for (int i : elements_[k].word())
                os << i;
            os << ") keeps denominator";
            for (const auto &g : acc.den)
                os << " x(" << g << ")";
            throw ResidualDenominator(os.str());
        }
        out.values[k] = std::move(acc);
    }
    return out;
}

WFunction FlagVariety::pushforward_eta(const std::vector<int> &I, Subset L) const
{
    BottSamelson X(ring_, I);
    const RootDatum &R = ring_->datum();
    const int l = X.length();
    if (!L.is_subset_of(Subset::full(l)))
        throw std::invalid_argument("pushforward_eta: subset outside [l]");
    std::vector<std::pair<std::size_t, LocalizedElement>> terms;
    const Subset Lc = L.complement(l);
    for (std::uint32_t b = 0; b < X.num_points(); ++b) {
        const Subset L1{b};
        if (!L1.is_subset_of(Lc))
            continue;
        const WeylElement &v = X.v(L1);
        std::vector<LatticeVector> num, den;
        for (const auto &g : R.negative_roots())
            num.push_back(v.apply(g));
        for (int j = 1; j <= l; ++j)
            den.push_back(X.v(L1, j).apply(-R.simple_root(I[j - 1])));
        terms.emplace_back(index_of(v), fraction(X.a_coeff(L, L1), num, den));
    }
    return accumulate(terms, true);
}

WFunction FlagVariety::bott_class_direct(const std::vector<int> &J) const
{
    const RootDatum &R = ring_->datum();
    const int l = static_cast<int>(J.size());
    if (l > 16)
        throw ConfigError("sequence longer than 16 is not supported");
    std::vector<std::pair<std::size_t, LocalizedElement>> terms;
    for (std::uint32_t b = 0; b < (1u << l); ++b) {
        WeylElement v = R.identity();
        std::vector<LatticeVector> den;
        for (int j = 1; j <= l; ++j) {
            if ((b >> (j - 1)) & 1u)
                v = v * R.simple_reflection(J[j - 1]);
            den.push_back(v.apply(-R.simple_root(J[j - 1])));
        }
        std::vector<LatticeVector> num;
        for (const auto &g : R.negative_roots())
            num.push_back(v.apply(g));
        terms.emplace_back(index_of(v), fraction(ring_->one(), num, den));
    }
    return accumulate(terms, false);
}

WFunction FlagVariety::pushforward_via_lemma(const std::vector<int> &I, Subset L) const
{
    BottSamelson X(ring_, I);
    const RootDatum &R = ring_->datum();
    std::vector<std::pair<std::size_t, LocalizedElement>> terms;
    const GkmElement eta = X.restrict_eta(L);
    for (std::uint32_t b = 0; b < X.num_points(); ++b) {
        const Subset L1{b};
        if (eta[L1].is_zero())
            continue;
        // eta_L = sum_{L_1} (a_{L,L_1} / x_{I,L_1}) j_*(f_{L_1})
        LocalizedElement c{eta[L1], {}};
        for (int j = 1; j <= X.length(); ++j)
            c = divide_by_root(c, X.v(L1, j).apply(-R.simple_root(I[j - 1])));
        c = canonicalize(std::move(c));
        // q'_*(f_{L_1}) = v^{L_1}(x_Pi) f_{v^{L_1}}
        const WeylElement &v = X.v(L1);
        terms.emplace_back(index_of(v), mul(c, integral(x_pi_at(v))));
    }
    return accumulate(terms, true);
}

std::vector<Series> FlagVariety::chevalley_expand(const std::vector<int> &I, const Series &u) const
{
    std::vector<Series> out;
    const int l = static_cast<int>(I.size());
    for (std::uint32_t b = 0; b < (1u << l); ++b)
        out.push_back(theta_apply(*ring_, I, Subset{b}, u));
    return out;
}

ChevalleyCheck FlagVariety::chevalley_check(const std::vector<int> &I, const Series &u) const
{
    const int l = static_cast<int>(I.size());
    const std::vector<Series> theta = chevalley_expand(I, u);
    const WFunction zeta = bott_samelson_class(I);
    std::map<std::vector<int>, WFunction> classes;
    std::vector<const WFunction *> by_subset;
    for (std::uint32_t b = 0; b < (1u << l); ++b) {
        auto sub = subsequence(I, Subset{b}.complement(l));
        auto it = classes.find(sub);
        if (it == classes.end())
            it = classes.emplace(sub, bott_samelson_class(sub)).first;
        by_subset.push_back(&it->second);
    }
    ChevalleyCheck res;
    res.precision = Series::kMaxPrecision;
    for (std::size_t k = 0; k < size(); ++k) {
        LocalizedElement lhs = mul(integral(ring_->act(elements_[k], u)), zeta.values[k]);
        LocalizedElement rhs{ring_->zero(), {}};
        for (std::uint32_t b = 0; b < (1u << l); ++b)
            if (!theta[b].is_zero())
                rhs = add(rhs, mul(integral(theta[b]), by_subset[b]->values[k]));
        res.precision = std::min({res.precision, lhs.num.precision(), rhs.num.precision()});
        if (lhs.den != rhs.den || !agree(lhs.num, rhs.num)) {
            if (res.ok)
                res.first_bad = k;
            res.ok = false;
        }
    }
    return res;
}

} // namespace bsoc
