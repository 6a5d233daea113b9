#ifndef BSOC_RANDGEN_HPP
#define BSOC_RANDGEN_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "bsoc/fga.hpp"

namespace bsoc {

/// Seeded generators for the property suites. Identical seeds give identical
/// draws on every platform (only integer distributions driven by hand).
class RandomSource {
public:
    explicit RandomSource(std::uint64_t seed) : eng_(seed) {}

    /// Uniform integer in [lo, hi].
    int uniform(int lo, int hi);

    /// Polynomial of total degree <= max_degree with small integer
    /// coefficients; beta powers in [-1, 1] appear when `with_beta` is set.
    Series series(const FormalGroupAlgebra &S, int max_degree, int max_terms = 6, bool with_beta = false);
    /// Same, with zero constant term.
    Series augmented_series(const FormalGroupAlgebra &S, int max_degree, int max_terms = 6, bool with_beta = false);
    LatticeVector weight(int rank, int bound = 2);
    LatticeVector root(const RootDatum &R);
    WeylElement weyl(const RootDatum &R, int max_length = 6);
    std::vector<int> sequence(int rank, int length);

    std::mt19937_64 &engine() { return eng_; }

private:
    std::mt19937_64 eng_;
};

} // namespace bsoc

#endif
