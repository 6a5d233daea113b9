#include "bsoc/fgl.hpp"

#include <algorithm>
#include <sstream>

#include "bsoc/errors.hpp"

namespace bsoc {

std::string to_string(FglKind k)
{
    switch (k) {
    case FglKind::additive:
        return "additive";
    case FglKind::multiplicative:
        return "multiplicative";
    case FglKind::generic:
        return "generic";
    }
    return "?";
}

FormalGroupLaw FormalGroupLaw::additive() { return FormalGroupLaw(); }

FormalGroupLaw FormalGroupLaw::multiplicative()
{
    FormalGroupLaw f;
    f.kind_ = FglKind::multiplicative;
    f.coeffs_[{1, 1}] = Coefficient::beta_power(1, Rational(-1));
    return f;
}

FormalGroupLaw FormalGroupLaw::generic(const std::map<std::pair<int, int>, Coefficient> &coeffs, int degree_cap)
{
    if (degree_cap < 1)
        throw ConfigError("formal group law: degree_cap must be at least 1");
    if (degree_cap > Series::kMaxPrecision)
        throw ConfigError("formal group law: degree_cap too large");
    FormalGroupLaw f;
    f.kind_ = FglKind::generic;
    f.degree_cap_ = degree_cap;
    for (const auto &[ij, c] : coeffs) {
        auto [i, j] = ij;
        if (i < 0 || j < 0)
            throw ConfigError("formal group law: negative index");
        if (i + j > degree_cap)
            throw ConfigError("formal group law: coefficient a_" + std::to_string(i) + std::to_string(j) +
                              " exceeds degree_cap");
        if (i == 0 || j == 0) {
            bool unit_term = (i + j == 1);
            if (unit_term ? !(c == Coefficient(1)) : !c.is_zero())
                throw ConfigError("formal group law: F(x,0) = x violated by a_" + std::to_string(i) + "," +
                                  std::to_string(j));
            continue;
        }
        if (!c.is_zero())
            f.coeffs_[ij] = f.coeffs_[ij] + c;
    }
    for (const auto &[ij, c] : f.coeffs_) {
        if (!(f.coeff(ij.second, ij.first) == c))
            throw ConfigError("formal group law: not commutative (a_" + std::to_string(ij.first) + "," +
                              std::to_string(ij.second) + " != a_" + std::to_string(ij.second) + "," +
                              std::to_string(ij.first) + ")");
    }
    Series defect = f.associativity_defect(degree_cap);
    if (!defect.is_zero())
        throw ConfigError("formal group law: not associative modulo degree " + std::to_string(degree_cap + 1) +
                          "; defect " + defect.str());
    return f;
}

Coefficient FormalGroupLaw::coeff(int i, int j) const
{
    auto it = coeffs_.find({i, j});
    return it == coeffs_.end() ? Coefficient() : it->second;
}

bool FormalGroupLaw::agrees_with(const FormalGroupLaw &other) const
{
    auto within = [](const FormalGroupLaw &f, int deg) { return f.is_exact() || deg <= f.degree_cap_; };
    for (const auto &[ij, c] : coeffs_)
        if (within(other, ij.first + ij.second) && !(other.coeff(ij.first, ij.second) == c))
            return false;
    for (const auto &[ij, c] : other.coeffs_)
        if (within(*this, ij.first + ij.second) && !(coeff(ij.first, ij.second) == c))
            return false;
    return true;
}

FormalGroupLaw FormalGroupLaw::specialize_beta(const Rational &value) const
{
    FormalGroupLaw f;
    f.kind_ = FglKind::generic;
    f.degree_cap_ = degree_cap_;
    for (const auto &[ij, c] : coeffs_) {
        Rational v = c.evaluate(value);
        if (!v.is_zero())
            f.coeffs_[ij] = Coefficient(v);
    }
    return f;
}

Series FormalGroupLaw::associativity_defect(int precision) const
{
    Series x = Series::variable(3, 0, precision);
    Series y = Series::variable(3, 1, precision);
    Series z = Series::variable(3, 2, precision);
    return formal_sum(*this, formal_sum(*this, x, y), z) - formal_sum(*this, x, formal_sum(*this, y, z));
}

std::string FormalGroupLaw::str() const
{
    std::ostringstream os;
    os << "F(x,y) = x + y";
    for (const auto &[ij, c] : coeffs_) {
        os << " + (" << c.str() << ")*x";
        if (ij.first > 1)
            os << "^" << ij.first;
        os << "*y";
        if (ij.second > 1)
            os << "^" << ij.second;
    }
    if (!is_exact())
        os << " + O(" << degree_cap_ + 1 << ")";
    return os.str();
}

namespace {

void require_augmentation(const Series &s, const char *who)
{
    if (!s.constant_term().is_zero())
        throw std::invalid_argument(std::string(who) + ": argument has a nonzero constant term");
}

int law_precision(const FormalGroupLaw &F, int p) { return F.is_exact() ? p : std::min(p, F.degree_cap()); }

} // namespace

Series formal_sum(const FormalGroupLaw &F, const Series &s, const Series &t)
{
    require_augmentation(s, "formal_sum");
    require_augmentation(t, "formal_sum");
    const int p = law_precision(F, std::min(s.precision(), t.precision()));
    Series result = (s + t).truncated(p);
    if (F.coeffs().empty())
        return result;
    int max_i = 0, max_j = 0;
    for (const auto &[ij, c] : F.coeffs()) {
        if (ij.first + ij.second > p)
            continue;
        max_i = std::max(max_i, ij.first);
        max_j = std::max(max_j, ij.second);
    }
    std::vector<Series> sp{Series::one(s.nvars(), p)}, tp{Series::one(t.nvars(), p)};
    for (int i = 1; i <= max_i; ++i)
        sp.push_back(sp.back() * s);
    for (int j = 1; j <= max_j; ++j)
        tp.push_back(tp.back() * t);
    for (const auto &[ij, c] : F.coeffs()) {
        if (ij.first + ij.second > p)
            continue;
        Series term = sp[ij.first] * tp[ij.second];
        if (!term.is_zero())
            result += term.scaled(c);
    }
    return result.truncated(p);
}

Series inverse_series(const FormalGroupLaw &F, int precision)
{
    const int p = law_precision(F, precision);
    // i(x) = -x + sum_{k>=2} b_k x^k; the x^k coefficient of F(x, i(x))
    // involves b_k linearly and otherwise only lower b's.
    Series x = Series::variable(1, 0, p);
    Series inv = (-x).truncated(std::min(p, 1));
    for (int k = 2; k <= p; ++k) {
        Series guess = Series::from_terms(1, k, inv.terms());
        Series residual = formal_sum(F, x.truncated(k), guess);
        Coefficient rk = residual.coefficient({k});
        std::vector<Series::Term> terms = inv.terms();
        for (const auto &[b, c] : rk.terms())
            terms.emplace_back(key::make({k}, b), -c);
        inv = Series::from_terms(1, k, std::move(terms));
    }
    return Series::from_terms(1, p, inv.terms());
}

Series multiple_series(const FormalGroupLaw &F, int m, int precision)
{
    const int p = law_precision(F, precision);
    Series x = Series::variable(1, 0, p);
    if (m == 0)
        return Series(1, p);
    int n = m < 0 ? -m : m;
    Series acc = x;
    for (int k = 1; k < n; ++k)
        acc = formal_sum(F, acc, x);
    if (m < 0)
        acc = compose(inverse_series(F, p), acc);
    return acc;
}

Series formal_inverse(const FormalGroupLaw &F, const Series &s)
{
    require_augmentation(s, "formal_inverse");
    return compose(inverse_series(F, s.precision()), s);
}

Series formal_multiple(const FormalGroupLaw &F, int m, const Series &s)
{
    require_augmentation(s, "formal_multiple");
    return compose(multiple_series(F, m, s.precision()), s);
}

} // namespace bsoc
