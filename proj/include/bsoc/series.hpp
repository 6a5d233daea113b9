#ifndef BSOC_SERIES_HPP
#define BSOC_SERIES_HPP

#include <cstdint>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "bsoc/coefficient.hpp"
#include "bsoc/rational.hpp"

namespace bsoc {

/// Packed monomial key: bits 56..63 total degree, then one byte per variable
/// (variable 0 most significant), low byte the beta exponent biased by 128.
/// Integer order on keys is graded lexicographic on the weight-basis
/// exponents, ties broken by the beta power.
namespace key {
using Key = std::uint64_t;
inline constexpr int kMaxVars = 6;
inline constexpr int kBetaBias = 128;

inline int degree(Key k) { return static_cast<int>(k >> 56); }
inline int exponent(Key k, int i) { return static_cast<int>((k >> (48 - 8 * i)) & 0xFF); }
inline int beta(Key k) { return static_cast<int>(k & 0xFF) - kBetaBias; }
inline Key x_part(Key k) { return k & ~Key{0xFF}; }
Key make(const std::vector<int> &exps, int beta_power);
std::vector<int> exponents(Key k, int nvars);
/// Product of two monomials; throws if the beta exponent leaves [-128, 127].
Key multiply(Key a, Key b);
/// True if the x-part of `a` divides the x-part of `b`.
bool x_divides(Key a, Key b, int nvars);
} // namespace key

/// Truncated power series in the weight-basis variables x_{omega_1..n} over
/// Q[beta, beta^-1].
///
/// `precision` N means every term of total degree <= N is known exactly and
/// nothing of higher degree is stored. Terms are kept sorted by key with no
/// zero coefficients, so equality of two series is structural.
class Series {
public:
    using Key = key::Key;
    using Term = std::pair<Key, Rational>;
    static constexpr int kMaxPrecision = 120;

    Series() = default;
    Series(int nvars, int precision);

    static Series constant(int nvars, int precision, const Coefficient &c);
    static Series one(int nvars, int precision) { return constant(nvars, precision, Coefficient(1)); }
    /// The bare variable x_{omega_{i+1}} (0-based i).
    static Series variable(int nvars, int i, int precision);
    static Series monomial(int nvars, int precision, const std::vector<int> &exps, const Coefficient &c);
    /// Builds a series from raw terms; terms above `precision` are dropped.
    static Series from_terms(int nvars, int precision, std::vector<Term> terms);

    int nvars() const { return nvars_; }
    int precision() const { return precision_; }
    const std::vector<Term> &terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    /// Lowest degree of a stored term, or precision + 1 when nothing is stored.
    int valuation() const;
    Series truncated(int precision) const;
    Series homogeneous_part(int degree) const;
    Series lowest_form() const { return homogeneous_part(valuation()); }

    Coefficient coefficient(const std::vector<int> &exps) const;
    Coefficient constant_term() const { return coefficient(std::vector<int>(nvars_, 0)); }
    /// Terms grouped by x-monomial, in key order.
    std::vector<std::pair<std::vector<int>, Coefficient>> grouped_terms() const;
    /// Specializes beta to a nonzero rational value.
    Series specialize_beta(const Rational &value) const;

    Series scaled(const Coefficient &c) const;
    Series operator-() const;
    Series &operator+=(const Series &o) { return *this = *this + o; }
    Series &operator-=(const Series &o) { return *this = *this - o; }
    Series &operator*=(const Series &o) { return *this = *this * o; }

    /// Precision of a sum is the smaller precision.
    friend Series operator+(const Series &a, const Series &b);
    friend Series operator-(const Series &a, const Series &b);
    /// Precision of a product is min(p_a + v_b, p_b + v_a, max(p_a, p_b)).
    friend Series operator*(const Series &a, const Series &b);
    friend bool operator==(const Series &a, const Series &b) = default;

    std::string str() const;

private:
    void check_compatible(const Series &o) const;

    int nvars_ = 0;
    int precision_ = 0;
    std::vector<Term> terms_;
};

std::ostream &operator<<(std::ostream &os, const Series &s);

/// True if a and b coincide up to the smaller of their precisions.
bool agree(const Series &a, const Series &b);

Series pow(const Series &s, int k);

/// Exact quotient q with s = q * d, computed degree by degree by graded
/// elimination against the lowest-degree form of d. Precision of q is
/// min(p_s - delta, p_d + v_s - 2 delta) where delta is the valuation of d.
/// Throws NotDivisible with the first obstructing monomial, or
/// PrecisionExhausted when the quotient would have negative precision.
Series exact_divide(const Series &s, const Series &d);

/// Multiplicative inverse; the constant term must be a unit of R.
Series invert_unit(const Series &s);

/// Substitutes s (no constant term) into a one-variable series.
Series compose(const Series &univariate, const Series &s);

} // namespace bsoc

#endif
