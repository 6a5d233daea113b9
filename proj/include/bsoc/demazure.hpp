#ifndef BSOC_DEMAZURE_HPP
#define BSOC_DEMAZURE_HPP

#include <vector>

#include "bsoc/fga.hpp"
#include "bsoc/subset.hpp"

namespace bsoc {

/// Delta_alpha(p) = (p - s_alpha(p)) / x_alpha, for any root alpha.
/// Precision drops by one.
Series demazure(const FormalGroupAlgebra &S, const LatticeVector &root, const Series &p);

/// theta_{I,L}(u) = theta_1 ... theta_l (u) with theta_j = Delta_{-alpha_{i_j}}
/// for j in L and s_{i_j} otherwise. theta_l is applied first.
Series theta_apply(const FormalGroupAlgebra &S, const std::vector<int> &seq, Subset L, const Series &u);

/// (v s_alpha w(p) - v w(p)) / x_{v(alpha)}. Throws NotDivisible if the
/// quotient does not exist.
Series div_lemma_quotient(const FormalGroupAlgebra &S, const WeylElement &v, const WeylElement &w,
                          const LatticeVector &root, const Series &p);

} // namespace bsoc

#endif
