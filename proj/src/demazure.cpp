#include "bsoc/demazure.hpp"

#include <stdexcept>

namespace bsoc {

Series demazure(const FormalGroupAlgebra &S, const LatticeVector &root, const Series &p)
{
    const RootDatum &R = S.datum();
    if (!R.is_root(root))
        throw std::invalid_argument("demazure: not a root");
    Series diff = p - S.act(R.reflection(root), p);
    return exact_divide(diff, S.x(root));
}

Series theta_apply(const FormalGroupAlgebra &S, const std::vector<int> &seq, Subset L, const Series &u)
{
    const RootDatum &R = S.datum();
    const int l = static_cast<int>(seq.size());
    if (!L.is_subset_of(Subset::full(l)))
        throw std::invalid_argument("theta_apply: subset outside [l]");
    Series acc = u;
    // Runs of plain reflections are merged into one Weyl action.
    WeylElement pending = R.identity();
    for (int j = l; j >= 1; --j) {
        const int i = seq[j - 1];
        if (!L.contains(j)) {
            pending = R.simple_reflection(i) * pending;
            continue;
        }
        if (!pending.is_identity()) {
            acc = S.act(pending, acc);
            pending = R.identity();
        }
        acc = demazure(S, -R.simple_root(i), acc);
    }
    if (!pending.is_identity())
        acc = S.act(pending, acc);
    return acc;
}

Series div_lemma_quotient(const FormalGroupAlgebra &S, const WeylElement &v, const WeylElement &w,
                          const LatticeVector &root, const Series &p)
{
    const RootDatum &R = S.datum();
    if (!R.is_root(root))
        throw std::invalid_argument("div_lemma_quotient: not a root");
    Series num = S.act(v * R.reflection(root) * w, p) - S.act(v * w, p);
    return exact_divide(num, S.x(v.apply(root)));
}

} // namespace bsoc
