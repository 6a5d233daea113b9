#ifndef BSOC_FGA_HPP
#define BSOC_FGA_HPP

#include <map>
#include <memory>
#include <mutex>
#include <unordered_map>

#include "bsoc/fgl.hpp"
#include "bsoc/rootdata.hpp"
#include "bsoc/series.hpp"

namespace bsoc {

/// The formal group algebra S = R[[Lambda]]_F at a fixed working precision.
///
/// S is modelled as power series in x_{omega_1}, ..., x_{omega_n}; a general
/// x_lambda is the formal sum of formal multiples of these. The object caches
/// x_lambda and the images of monomials under Weyl group elements; the caches
/// are guarded so one algebra can be shared between threads.
class FormalGroupAlgebra {
public:
    static constexpr int kDefaultPrecision = 8;

    FormalGroupAlgebra(std::shared_ptr<const RootDatum> datum, FormalGroupLaw law,
                       int precision = kDefaultPrecision);

    const RootDatum &datum() const { return *datum_; }
    std::shared_ptr<const RootDatum> datum_ptr() const { return datum_; }
    const FormalGroupLaw &law() const { return law_; }
    int precision() const { return precision_; }
    int nvars() const { return datum_->rank(); }

    Series zero() const { return Series(nvars(), precision_); }
    Series one() const { return Series::one(nvars(), precision_); }
    Series constant(const Coefficient &c) const { return Series::constant(nvars(), precision_, c); }
    Series variable(int i) const { return Series::variable(nvars(), i, precision_); }

    /// x_lambda.
    Series x(const LatticeVector &lambda) const;
    /// Product of x_lambda over a list of characters.
    Series x_product(const std::vector<LatticeVector> &lambdas) const;

    Series sum(const Series &s, const Series &t) const { return formal_sum(law_, s, t); }
    Series inverse(const Series &s) const { return formal_inverse(law_, s); }

    /// Ring endomorphism x_{omega_i} -> x_{w(omega_i)}.
    Series act(const WeylElement &w, const Series &s) const;

    /// Regularity surrogate: the lowest-degree form of x_alpha is nonzero.
    bool is_regular(const Series &s) const { return !s.is_zero(); }

private:
    using ImageTable = std::unordered_map<Series::Key, Series>;
    const Series &monomial_image(ImageTable &table, const std::vector<Series> &images, Series::Key x) const;

    std::shared_ptr<const RootDatum> datum_;
    FormalGroupLaw law_;
    int precision_;

    mutable std::recursive_mutex mutex_;
    mutable std::map<LatticeVector, Series> x_cache_;
    mutable std::map<IntMatrix, std::shared_ptr<ImageTable>> image_cache_;
};

} // namespace bsoc

#endif
