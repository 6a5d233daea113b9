#ifndef BSOC_RENDER_HPP
#define BSOC_RENDER_HPP

#include <optional>
#include <string>
#include <vector>

#include "bsoc/fga.hpp"

namespace bsoc {

/// "a1+2a2" style label in simple-root coordinates; "w1-w2" in
/// fundamental-weight coordinates when the vector is not in the root lattice.
std::string weight_label(const RootDatum &R, const LatticeVector &v);

/// s = c * prod_k x_{factors[k]}, checked by multiplying back.
struct Factorization {
    Coefficient constant;
    std::vector<LatticeVector> factors;
};

/// Searches for an exact factorization of s into a constant times x's of
/// roots (and, for rank <= 3, small root combinations and small weights).
std::optional<Factorization> factor_series(const FormalGroupAlgebra &S, const Series &s);

/// Factored form like "-x(-a1)*x(a1+a2)" when one exists; otherwise the
/// raw weight-basis monomials.
std::string render_series(const FormalGroupAlgebra &S, const Series &s);

} // namespace bsoc

#endif
