#ifndef BSOC_COEFFICIENT_HPP
#define BSOC_COEFFICIENT_HPP

#include <string>
#include <utility>
#include <vector>

#include "bsoc/rational.hpp"

namespace bsoc {

/// Element of the coefficient ring R: a Laurent polynomial in the formal
/// parameter beta with rational coefficients. Plain rationals are the
/// beta^0 constants. Terms are sorted by power, zero is the empty term list.
class Coefficient {
public:
    using Term = std::pair<int, Rational>; // (beta power, coefficient)

    Coefficient() = default;
    Coefficient(Rational r); // NOLINT: rationals embed as constants
    Coefficient(std::int64_t n) : Coefficient(Rational(n)) {} // NOLINT

    static Coefficient beta_power(int k, Rational c = Rational(1));
    static Coefficient from_terms(std::vector<Term> terms);

    const std::vector<Term> &terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_rational() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first == 0); }
    Rational rational_value() const; // requires is_rational()

    /// Units of Q[beta, beta^-1] are exactly the nonzero monomials.
    bool is_unit() const { return terms_.size() == 1; }
    Coefficient unit_inverse() const;

    int min_power() const { return terms_.front().first; }
    int max_power() const { return terms_.back().first; }

    /// Substitutes beta := value (value must be nonzero if negative powers occur).
    Rational evaluate(const Rational &value) const;

    std::string str() const;

    Coefficient operator-() const;
    friend Coefficient operator+(const Coefficient &a, const Coefficient &b);
    friend Coefficient operator-(const Coefficient &a, const Coefficient &b) { return a + (-b); }
    friend Coefficient operator*(const Coefficient &a, const Coefficient &b);
    friend bool operator==(const Coefficient &a, const Coefficient &b) = default;

private:
    std::vector<Term> terms_;
};

} // namespace bsoc

#endif
