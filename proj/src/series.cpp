#include "bsoc/series.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <sstream>
#include <stdexcept>

#include "bsoc/errors.hpp"

namespace bsoc {

namespace key {

Key make(const std::vector<int> &exps, int beta_power)
{
    if (exps.size() > static_cast<std::size_t>(kMaxVars))
        throw std::invalid_argument("monomial key: at most 6 variables supported");
    if (beta_power < -kBetaBias || beta_power > 255 - kBetaBias)
        throw std::overflow_error("monomial key: beta exponent out of range");
    Key k = 0;
    int deg = 0;
    for (std::size_t i = 0; i < exps.size(); ++i) {
        if (exps[i] < 0 || exps[i] > 255)
            throw std::invalid_argument("monomial key: exponent out of range");
        deg += exps[i];
        k |= Key(exps[i]) << (48 - 8 * i);
    }
    if (deg > 255)
        throw std::invalid_argument("monomial key: degree out of range");
    k |= Key(deg) << 56;
    k |= Key(beta_power + kBetaBias);
    return k;
}

std::vector<int> exponents(Key k, int nvars)
{
    std::vector<int> out(nvars);
    for (int i = 0; i < nvars; ++i)
        out[i] = exponent(k, i);
    return out;
}

Key multiply(Key a, Key b)
{
    int bp = beta(a) + beta(b);
    if (bp < -kBetaBias || bp > 255 - kBetaBias)
        throw std::overflow_error("series: beta exponent out of range");
    return x_part(a) + x_part(b) + Key(bp + kBetaBias);
}

bool x_divides(Key a, Key b, int nvars)
{
    for (int i = 0; i < nvars; ++i)
        if (exponent(a, i) > exponent(b, i))
            return false;
    return true;
}

} // namespace key

namespace {

using Term = Series::Term;

void combine_sorted(std::vector<Term> &terms)
{
    std::sort(terms.begin(), terms.end(), [](const Term &a, const Term &b) { return a.first < b.first; });
    std::size_t out = 0;
    for (std::size_t i = 0; i < terms.size();) {
        Series::Key k = terms[i].first;
        Rational c = std::move(terms[i].second);
        std::size_t j = i + 1;
        for (; j < terms.size() && terms[j].first == k; ++j)
            c += terms[j].second;
        if (!c.is_zero())
            terms[out++] = Term(k, std::move(c));
        i = j;
    }
    terms.resize(out);
}

std::string monomial_str(Series::Key k, int nvars)
{
    std::string out;
    for (int i = 0; i < nvars; ++i) {
        int e = key::exponent(k, i);
        if (e == 0)
            continue;
        if (!out.empty())
            out += "*";
        out += "x" + std::to_string(i + 1);
        if (e > 1)
            out += "^" + std::to_string(e);
    }
    return out;
}

} // namespace

Series::Series(int nvars, int precision) : nvars_(nvars), precision_(std::min(precision, kMaxPrecision))
{
    if (nvars < 0 || nvars > key::kMaxVars)
        throw std::invalid_argument("Series: number of variables must be in 0..6");
}

Series Series::constant(int nvars, int precision, const Coefficient &c)
{
    return monomial(nvars, precision, std::vector<int>(nvars, 0), c);
}

Series Series::variable(int nvars, int i, int precision)
{
    std::vector<int> e(nvars, 0);
    e.at(i) = 1;
    return monomial(nvars, precision, e, Coefficient(1));
}

Series Series::monomial(int nvars, int precision, const std::vector<int> &exps, const Coefficient &c)
{
    Series out(nvars, precision);
    std::vector<Term> terms;
    for (const auto &[b, r] : c.terms())
        terms.emplace_back(key::make(exps, b), r);
    return from_terms(nvars, precision, std::move(terms));
}

Series Series::from_terms(int nvars, int precision, std::vector<Term> terms)
{
    Series out(nvars, precision);
    std::erase_if(terms, [&](const Term &t) { return key::degree(t.first) > out.precision_; });
    combine_sorted(terms);
    out.terms_ = std::move(terms);
    return out;
}

int Series::valuation() const { return terms_.empty() ? precision_ + 1 : key::degree(terms_.front().first); }

Series Series::truncated(int precision) const
{
    Series out(nvars_, std::min(precision, precision_));
    for (const auto &t : terms_) {
        if (key::degree(t.first) > out.precision_)
            break;
        out.terms_.push_back(t);
    }
    return out;
}

Series Series::homogeneous_part(int degree) const
{
    Series out(nvars_, precision_);
    for (const auto &t : terms_)
        if (key::degree(t.first) == degree)
            out.terms_.push_back(t);
    return out;
}

Coefficient Series::coefficient(const std::vector<int> &exps) const
{
    if (static_cast<int>(exps.size()) != nvars_)
        throw std::invalid_argument("Series::coefficient: wrong number of exponents");
    Key x = key::x_part(key::make(exps, 0));
    std::vector<Coefficient::Term> out;
    for (const auto &t : terms_)
        if (key::x_part(t.first) == x)
            out.emplace_back(key::beta(t.first), t.second);
    return Coefficient::from_terms(std::move(out));
}

std::vector<std::pair<std::vector<int>, Coefficient>> Series::grouped_terms() const
{
    std::vector<std::pair<std::vector<int>, Coefficient>> out;
    for (std::size_t i = 0; i < terms_.size();) {
        Key x = key::x_part(terms_[i].first);
        std::vector<Coefficient::Term> c;
        std::size_t j = i;
        for (; j < terms_.size() && key::x_part(terms_[j].first) == x; ++j)
            c.emplace_back(key::beta(terms_[j].first), terms_[j].second);
        out.emplace_back(key::exponents(x, nvars_), Coefficient::from_terms(std::move(c)));
        i = j;
    }
    return out;
}

Series Series::specialize_beta(const Rational &value) const
{
    std::vector<Term> terms;
    for (const auto &[k, c] : terms_) {
        Coefficient b = Coefficient::beta_power(key::beta(k), c);
        terms.emplace_back(key::x_part(k) + Key(key::kBetaBias), b.evaluate(value));
    }
    return from_terms(nvars_, precision_, std::move(terms));
}

Series Series::scaled(const Coefficient &c) const
{
    std::vector<Term> terms;
    terms.reserve(terms_.size() * c.terms().size());
    for (const auto &[k, r] : terms_)
        for (const auto &[b, q] : c.terms())
            terms.emplace_back(key::multiply(k, key::make({}, b)), r * q);
    return from_terms(nvars_, precision_, std::move(terms));
}

Series Series::operator-() const
{
    Series out = *this;
    for (auto &t : out.terms_)
        t.second = -t.second;
    return out;
}

void Series::check_compatible(const Series &o) const
{
    if (nvars_ != o.nvars_)
        throw std::invalid_argument("Series: variable count mismatch");
}

Series operator+(const Series &a, const Series &b)
{
    a.check_compatible(b);
    Series out(a.nvars_, std::min(a.precision_, b.precision_));
    const int p = out.precision_;
    auto i = a.terms_.begin(), j = b.terms_.begin();
    auto ie = a.terms_.end(), je = b.terms_.end();
    out.terms_.reserve(a.terms_.size() + b.terms_.size());
    while (i != ie || j != je) {
        if (j == je || (i != ie && i->first < j->first)) {
            if (key::degree(i->first) > p)
                i = ie;
            else
                out.terms_.push_back(*i++);
        } else if (i == ie || j->first < i->first) {
            if (key::degree(j->first) > p)
                j = je;
            else
                out.terms_.push_back(*j++);
        } else {
            if (key::degree(i->first) > p) {
                i = ie;
                j = je;
                continue;
            }
            Rational s = i->second + j->second;
            if (!s.is_zero())
                out.terms_.emplace_back(i->first, std::move(s));
            ++i;
            ++j;
        }
    }
    return out;
}

Series operator-(const Series &a, const Series &b) { return a + (-b); }

Series operator*(const Series &a, const Series &b)
{
    a.check_compatible(b);
    const int va = a.valuation(), vb = b.valuation();
    int p = std::min({a.precision_ + vb, b.precision_ + va, std::max(a.precision_, b.precision_)});
    Series out(a.nvars_, p);
    p = out.precision_;
    std::vector<Term> prod;
    prod.reserve(a.terms_.size() * b.terms_.size() / 2 + 1);
    for (const auto &[ka, ca] : a.terms_) {
        const int da = key::degree(ka);
        if (da + vb > p)
            break;
        for (const auto &[kb, cb] : b.terms_) {
            if (da + key::degree(kb) > p)
                break;
            prod.emplace_back(key::multiply(ka, kb), ca * cb);
        }
    }
    combine_sorted(prod);
    out.terms_ = std::move(prod);
    return out;
}

std::string Series::str() const
{
    std::ostringstream os;
    auto groups = grouped_terms();
    // Within a degree, x1 first.
    std::stable_sort(groups.begin(), groups.end(), [](const auto &a, const auto &b) {
        int da = 0, db = 0;
        for (int e : a.first)
            da += e;
        for (int e : b.first)
            db += e;
        return da != db ? da < db : a.first > b.first;
    });
    if (groups.empty())
        os << "0";
    for (std::size_t g = 0; g < groups.size(); ++g) {
        const auto &[exps, c] = groups[g];
        std::string mono = monomial_str(key::make(exps, 0), nvars_);
        std::string cs = c.str();
        bool single = c.terms().size() == 1;
        bool neg = single && c.terms()[0].second.sign() < 0;
        if (g > 0)
            os << (neg ? " - " : " + ");
        else if (neg)
            os << "-";
        if (neg)
            cs = (-c).str();
        if (!single)
            cs = "(" + cs + ")";
        if (mono.empty())
            os << cs;
        else if (cs == "1")
            os << mono;
        else
            os << cs << "*" << mono;
    }
    os << " + O(" << precision_ + 1 << ")";
    return os.str();
}

std::ostream &operator<<(std::ostream &os, const Series &s) { return os << s.str(); }

bool agree(const Series &a, const Series &b)
{
    if (a.nvars() != b.nvars())
        return false;
    int p = std::min(a.precision(), b.precision());
    return a.truncated(p).terms() == b.truncated(p).terms();
}

Series pow(const Series &s, int k)
{
    if (k < 0)
        throw std::invalid_argument("pow: negative exponent");
    Series out = Series::one(s.nvars(), s.precision());
    Series base = s;
    while (k > 0) {
        if (k & 1)
            out = out * base;
        k >>= 1;
        if (k)
            base = base * base;
    }
    return out;
}

namespace {

[[noreturn]] void not_divisible(Series::Key k, int nvars, const std::string &why)
{
    auto exps = key::exponents(k, nvars);
    std::ostringstream os;
    os << "exact division failed at monomial x^(";
    for (int i = 0; i < nvars; ++i)
        os << (i ? "," : "") << exps[i];
    os << ")";
    if (key::beta(k) != 0)
        os << "*beta^" << key::beta(k);
    os << ": " << why;
    throw NotDivisible(os.str(), exps, key::beta(k));
}

} // namespace

Series exact_divide(const Series &s, const Series &d)
{
    if (s.nvars() != d.nvars())
        throw std::invalid_argument("exact_divide: variable count mismatch");
    const int nvars = s.nvars();
    if (d.is_zero())
        throw PrecisionExhausted("exact_divide: divisor vanishes to precision " + std::to_string(d.precision()));
    const int delta = d.valuation();
    const int vs = s.valuation();
    const int pq = std::min(s.precision() - delta, d.precision() + vs - 2 * delta);
    if (pq < 0)
        throw PrecisionExhausted("exact_divide: quotient precision would be " + std::to_string(pq));
    const int K = pq + delta;

    std::vector<Term> d0;
    int d0_min_beta = std::numeric_limits<int>::max();
    for (const auto &t : d.terms()) {
        if (key::degree(t.first) != delta)
            break;
        d0.push_back(t);
        d0_min_beta = std::min(d0_min_beta, key::beta(t.first));
    }
    const Term lead = d0.back();

    std::map<Series::Key, Rational> rem;
    for (const auto &t : s.terms())
        if (key::degree(t.first) <= K)
            rem.emplace(t.first, t.second);

    std::vector<Term> quotient;
    int current_degree = -1;
    int beta_floor = 0;
    while (!rem.empty()) {
        const int k = key::degree(rem.begin()->first);
        if (k < delta)
            not_divisible(rem.begin()->first, nvars, "below the divisor's lowest degree");
        if (k != current_degree) {
            current_degree = k;
            int min_beta = std::numeric_limits<int>::max();
            for (auto it = rem.begin(); it != rem.end() && key::degree(it->first) == k; ++it)
                min_beta = std::min(min_beta, key::beta(it->first));
            beta_floor = min_beta - d0_min_beta;
        }
        auto top = rem.lower_bound(Series::Key(k + 1) << 56);
        --top;
        const Series::Key rk = top->first;
        if (!key::x_divides(lead.first, rk, nvars))
            not_divisible(rk, nvars, "leading monomial of the divisor does not divide it");
        const int qb = key::beta(rk) - key::beta(lead.first);
        if (qb < beta_floor)
            not_divisible(rk, nvars, "beta-Laurent coefficient is not divisible");
        const Series::Key qk = key::x_part(rk) - key::x_part(lead.first) + Series::Key(qb + key::kBetaBias);
        const Rational qc = top->second / lead.second;
        const int qdeg = key::degree(qk);
        for (const auto &[dk, dc] : d.terms()) {
            if (qdeg + key::degree(dk) > K)
                break;
            auto [it, inserted] = rem.try_emplace(key::multiply(qk, dk), Rational());
            it->second -= qc * dc;
            if (it->second.is_zero())
                rem.erase(it);
        }
        quotient.emplace_back(qk, qc);
    }
    return Series::from_terms(nvars, pq, std::move(quotient));
}

Series invert_unit(const Series &s)
{
    Coefficient c0 = s.constant_term();
    if (!c0.is_unit())
        throw MathError("invert_unit: constant term " + c0.str() + " is not a unit");
    Coefficient inv = c0.unit_inverse();
    const int p = s.precision();
    Series one = Series::one(s.nvars(), p);
    Series t = one - s.scaled(inv); // no constant term
    Series acc = one;
    for (int k = 1; k <= p; ++k)
        acc = one + t * acc;
    return acc.scaled(inv);
}

Series compose(const Series &univariate, const Series &s)
{
    if (univariate.nvars() != 1)
        throw std::invalid_argument("compose: outer series must have one variable");
    if (!s.constant_term().is_zero())
        throw std::invalid_argument("compose: inner series must have zero constant term");
    const int p = std::min(univariate.precision(), s.precision());
    Series result(s.nvars(), p);
    Series power = Series::one(s.nvars(), p);
    for (int k = 0; k <= p; ++k) {
        Coefficient c = univariate.coefficient({k});
        if (!c.is_zero())
            result += power.scaled(c);
        power = power * s;
        if (power.is_zero())
            break;
    }
    return result.truncated(p);
}

} // namespace bsoc
