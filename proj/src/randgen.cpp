#include "bsoc/randgen.hpp"

namespace bsoc {

int RandomSource::uniform(int lo, int hi)
{
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<int>(eng_() % span);
}

Series RandomSource::series(const FormalGroupAlgebra &S, int max_degree, int max_terms, bool with_beta)
{
    const int n = S.nvars();
    std::vector<Series::Term> terms;
    const int count = uniform(1, max_terms);
    for (int t = 0; t < count; ++t) {
        const int deg = uniform(0, max_degree);
        std::vector<int> exps(n, 0);
        for (int d = 0; d < deg; ++d)
            ++exps[uniform(0, n - 1)];
        int c = uniform(-3, 3);
        if (c == 0)
            c = 1;
        terms.emplace_back(key::make(exps, with_beta ? uniform(-1, 1) : 0), Rational(c));
    }
    return Series::from_terms(n, S.precision(), std::move(terms));
}

Series RandomSource::augmented_series(const FormalGroupAlgebra &S, int max_degree, int max_terms, bool with_beta)
{
    Series s = series(S, max_degree, max_terms, with_beta);
    return s - Series::constant(S.nvars(), S.precision(), s.constant_term());
}

LatticeVector RandomSource::weight(int rank, int bound)
{
    std::vector<int> c(rank);
    for (int &x : c)
        x = uniform(-bound, bound);
    return LatticeVector(std::move(c));
}

LatticeVector RandomSource::root(const RootDatum &R)
{
    auto roots = R.roots();
    return roots[uniform(0, static_cast<int>(roots.size()) - 1)];
}

WeylElement RandomSource::weyl(const RootDatum &R, int max_length)
{
    return R.weyl_from_word(sequence(R.rank(), uniform(0, max_length)));
}

std::vector<int> RandomSource::sequence(int rank, int length)
{
    std::vector<int> s(length);
    for (int &i : s)
        i = uniform(1, rank);
    return s;
}

} // namespace bsoc
