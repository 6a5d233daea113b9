#ifndef BSOC_FGL_HPP
#define BSOC_FGL_HPP

#include <map>
#include <string>
#include <utility>

#include "bsoc/coefficient.hpp"
#include "bsoc/series.hpp"

namespace bsoc {

enum class FglKind { additive, multiplicative, generic };

std::string to_string(FglKind k);

/// F(x, y) = x + y + sum_{i,j >= 1} a_ij x^i y^j.
///
/// Only the a_ij with i, j >= 1 are stored, so F(x, 0) = x holds by
/// construction. Built-in laws are exact in every degree; a generic law is
/// known up to total degree `degree_cap` and every series it produces is
/// truncated there.
class FormalGroupLaw {
public:
    static constexpr int kExact = -1;

    static FormalGroupLaw additive();
    /// F = x + y - beta x y over Z[beta, beta^-1].
    static FormalGroupLaw multiplicative();
    /// Validates symmetry and associativity modulo degree degree_cap + 1.
    /// Entries with a zero index are accepted only as the unit terms
    /// a_10 = a_01 = 1. Throws ConfigError on violation.
    static FormalGroupLaw generic(const std::map<std::pair<int, int>, Coefficient> &coeffs, int degree_cap);

    FglKind kind() const { return kind_; }
    int degree_cap() const { return degree_cap_; }
    bool is_exact() const { return degree_cap_ == kExact; }
    const std::map<std::pair<int, int>, Coefficient> &coeffs() const { return coeffs_; }
    Coefficient coeff(int i, int j) const;

    /// True if both laws have the same coefficients in every degree both know.
    bool agrees_with(const FormalGroupLaw &other) const;
    /// Substitutes beta := value in every coefficient; the result is generic.
    FormalGroupLaw specialize_beta(const Rational &value) const;
    /// F(F(x,y),z) - F(x,F(y,z)) in three variables at the given precision.
    Series associativity_defect(int precision) const;

    std::string str() const;

private:
    FglKind kind_ = FglKind::additive;
    int degree_cap_ = kExact;
    std::map<std::pair<int, int>, Coefficient> coeffs_;
};

/// F(s, t); both arguments must lie in the augmentation ideal.
Series formal_sum(const FormalGroupLaw &F, const Series &s, const Series &t);
/// The formal inverse i(s) with F(s, i(s)) = 0, computed degree by degree.
Series formal_inverse(const FormalGroupLaw &F, const Series &s);
/// [m]_F(s): the m-fold formal sum of s (negative m through the inverse).
Series formal_multiple(const FormalGroupLaw &F, int m, const Series &s);
/// The formal inverse as a one-variable series i(x).
Series inverse_series(const FormalGroupLaw &F, int precision);
/// [m]_F(x) as a one-variable series.
Series multiple_series(const FormalGroupLaw &F, int m, int precision);

} // namespace bsoc

#endif
