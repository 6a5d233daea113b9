#include "bsoc/fga.hpp"

#include <stdexcept>

namespace bsoc {

FormalGroupAlgebra::FormalGroupAlgebra(std::shared_ptr<const RootDatum> datum, FormalGroupLaw law, int precision)
    : datum_(std::move(datum)), law_(std::move(law)), precision_(precision)
{
    if (!datum_)
        throw std::invalid_argument("FormalGroupAlgebra: null root datum");
    if (datum_->rank() > key::kMaxVars)
        throw std::invalid_argument("FormalGroupAlgebra: rank above 6 is not supported");
    if (precision_ < 0 || precision_ > Series::kMaxPrecision)
        throw std::invalid_argument("FormalGroupAlgebra: precision out of range");
    if (!law_.is_exact() && law_.degree_cap() < precision_)
        precision_ = law_.degree_cap();
}

Series FormalGroupAlgebra::x(const LatticeVector &lambda) const
{
    if (lambda.rank() != nvars())
        throw std::invalid_argument("x: lattice vector has the wrong rank");
    std::lock_guard lock(mutex_);
    auto it = x_cache_.find(lambda);
    if (it != x_cache_.end())
        return it->second;
    Series acc = zero();
    for (int i = 0; i < nvars(); ++i) {
        int m = lambda[i];
        if (m == 0)
            continue;
        Series part = formal_multiple(law_, m, variable(i));
        acc = acc.is_zero() ? part : formal_sum(law_, acc, part);
    }
    x_cache_.emplace(lambda, acc);
    return acc;
}

Series FormalGroupAlgebra::x_product(const std::vector<LatticeVector> &lambdas) const
{
    Series acc = one();
    for (const auto &l : lambdas)
        acc = acc * x(l);
    return acc;
}

const Series &FormalGroupAlgebra::monomial_image(ImageTable &table, const std::vector<Series> &images,
                                                 Series::Key xk) const
{
    auto it = table.find(xk);
    if (it != table.end())
        return it->second;
    if (key::degree(xk) == 0)
        return table.emplace(xk, one()).first->second;
    int i = 0;
    while (key::exponent(xk, i) == 0)
        ++i;
    Series::Key prev = xk - (Series::Key(1) << (48 - 8 * i)) - (Series::Key(1) << 56);
    Series img = monomial_image(table, images, prev) * images[i];
    return table.emplace(xk, std::move(img)).first->second;
}

Series FormalGroupAlgebra::act(const WeylElement &w, const Series &s) const
{
    if (w.rank() != nvars() || s.nvars() != nvars())
        throw std::invalid_argument("act: rank mismatch");
    const int p = std::min(s.precision(), precision_);
    if (w.is_identity())
        return s.truncated(p);

    std::lock_guard lock(mutex_);
    auto &slot = image_cache_[w.matrix()];
    if (!slot)
        slot = std::make_shared<ImageTable>();
    std::vector<Series> images;
    for (int i = 0; i < nvars(); ++i)
        images.push_back(x(w.matrix().column(i)));

    std::vector<Series::Term> acc;
    for (const auto &[k, c] : s.terms()) {
        if (key::degree(k) > p)
            break;
        const Series &img = monomial_image(*slot, images, key::x_part(k) + Series::Key(key::kBetaBias));
        const Series::Key shift = key::make({}, key::beta(k));
        for (const auto &[ik, ic] : img.terms()) {
            if (key::degree(ik) > p)
                break;
            acc.emplace_back(key::multiply(ik, shift), c * ic);
        }
    }
    return Series::from_terms(nvars(), p, std::move(acc));
}

} // namespace bsoc
