#include "bsoc/coefficient.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <stdexcept>

namespace bsoc {

Coefficient::Coefficient(Rational r)
{
    if (!r.is_zero())
        terms_.emplace_back(0, std::move(r));
}

Coefficient Coefficient::beta_power(int k, Rational c)
{
    Coefficient out;
    if (!c.is_zero())
        out.terms_.emplace_back(k, std::move(c));
    return out;
}

Coefficient Coefficient::from_terms(std::vector<Term> terms)
{
    std::map<int, Rational> acc;
    for (auto &[k, c] : terms)
        acc[k] += c;
    Coefficient out;
    for (auto &[k, c] : acc)
        if (!c.is_zero())
            out.terms_.emplace_back(k, c);
    return out;
}

Rational Coefficient::rational_value() const
{
    if (!is_rational())
        throw std::logic_error("Coefficient::rational_value: coefficient involves beta: " + str());
    return terms_.empty() ? Rational() : terms_[0].second;
}

Coefficient Coefficient::unit_inverse() const
{
    if (!is_unit())
        throw std::domain_error("Coefficient::unit_inverse: not a unit: " + str());
    return beta_power(-terms_[0].first, Rational(1) / terms_[0].second);
}

Rational Coefficient::evaluate(const Rational &value) const
{
    Rational total;
    for (const auto &[k, c] : terms_) {
        Rational p(1);
        Rational base = k >= 0 ? value : Rational(1) / value;
        for (int i = 0; i < std::abs(k); ++i)
            p *= base;
        total += c * p;
    }
    return total;
}

std::string Coefficient::str() const
{
    if (terms_.empty())
        return "0";
    std::string out;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        const auto &[k, c] = terms_[i];
        std::string cs = c.str();
        bool neg = c.sign() < 0;
        if (i > 0)
            out += neg ? " - " : " + ";
        else if (neg)
            out += "-";
        std::string mag = neg ? cs.substr(1) : cs;
        if (k == 0) {
            out += mag;
            continue;
        }
        if (mag != "1")
            out += mag + "*";
        out += "beta";
        if (k != 1)
            out += "^" + std::to_string(k);
    }
    return out;
}

Coefficient Coefficient::operator-() const
{
    Coefficient out = *this;
    for (auto &t : out.terms_)
        t.second = -t.second;
    return out;
}

Coefficient operator+(const Coefficient &a, const Coefficient &b)
{
    Coefficient out;
    auto i = a.terms_.begin(), j = b.terms_.begin();
    while (i != a.terms_.end() || j != b.terms_.end()) {
        if (j == b.terms_.end() || (i != a.terms_.end() && i->first < j->first)) {
            out.terms_.push_back(*i++);
        } else if (i == a.terms_.end() || j->first < i->first) {
            out.terms_.push_back(*j++);
        } else {
            Rational s = i->second + j->second;
            if (!s.is_zero())
                out.terms_.emplace_back(i->first, std::move(s));
            ++i;
            ++j;
        }
    }
    return out;
}

Coefficient operator*(const Coefficient &a, const Coefficient &b)
{
    std::vector<Coefficient::Term> prod;
    prod.reserve(a.terms_.size() * b.terms_.size());
    for (const auto &[ka, ca] : a.terms_)
        for (const auto &[kb, cb] : b.terms_)
            prod.emplace_back(ka + kb, ca * cb);
    return Coefficient::from_terms(std::move(prod));
}

} // namespace bsoc
