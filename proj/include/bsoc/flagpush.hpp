#ifndef BSOC_FLAGPUSH_HPP
#define BSOC_FLAGPUSH_HPP

#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "bsoc/bscomb.hpp"
#include "bsoc/fga.hpp"

namespace bsoc {

/// num / prod_{gamma in den} x_gamma. Denominator roots are kept positive
/// and sorted; a negative root is traded for its positive partner times a
/// unit in the numerator.
struct LocalizedElement {
    Series num;
    std::vector<LatticeVector> den;

    bool integral() const { return den.empty(); }
    friend bool operator==(const LocalizedElement &, const LocalizedElement &) = default;
};

/// A function on W = (G/B)^T; values[k] belongs to FlagVariety::elements()[k].
struct WFunction {
    std::vector<LocalizedElement> values;

    bool integral() const;
    /// Smallest precision among the numerators.
    int precision() const;
    friend bool operator==(const WFunction &, const WFunction &) = default;
};

/// Equal denominators and numerators agreeing to the smaller precision, at every w.
bool agree(const WFunction &a, const WFunction &b);

/// Breadth-first closure of the simple reflections. Throws ConfigError past `bound`.
std::vector<WeylElement> enumerate_weyl(const RootDatum &R, std::size_t bound = 1152);

/// Restriction of I to the positions in `keep`, in order.
std::vector<int> subsequence(const std::vector<int> &I, Subset keep);

struct ChevalleyCheck {
    bool ok = true;
    std::size_t first_bad = 0; // index into elements() when !ok
    int precision = 0;         // precision at which the two sides were compared
};

/// Fixed-point model of h_T(G/B) over a formal group algebra.
class FlagVariety {
public:
    explicit FlagVariety(std::shared_ptr<const FormalGroupAlgebra> ring, std::size_t bound = 1152);

    const FormalGroupAlgebra &ring() const { return *ring_; }
    std::shared_ptr<const FormalGroupAlgebra> ring_ptr() const { return ring_; }
    const std::vector<WeylElement> &elements() const { return elements_; }
    std::size_t size() const { return elements_.size(); }
    std::size_t index_of(const WeylElement &w) const;

    /// Product of x_alpha over the negative roots.
    const Series &x_pi() const { return x_pi_; }
    /// w(x_Pi), as a product over w(negative roots).
    Series x_pi_at(const WeylElement &w) const;

    // Localized arithmetic.
    LocalizedElement integral(const Series &s) const { return {s, {}}; }
    /// coef * prod x_{num_roots} / prod x_{den_roots}, with matching roots
    /// cancelled symbolically and the rest reduced by exact division.
    LocalizedElement fraction(const Series &coef, const std::vector<LatticeVector> &num_roots,
                              const std::vector<LatticeVector> &den_roots) const;
    LocalizedElement add(const LocalizedElement &a, const LocalizedElement &b) const;
    LocalizedElement mul(const LocalizedElement &a, const LocalizedElement &b) const;
    LocalizedElement divide_by_root(const LocalizedElement &a, const LatticeVector &root) const;
    /// One greedy pass dividing the numerator by each denominator factor.
    LocalizedElement canonicalize(LocalizedElement a) const;

    WFunction zero() const;
    WFunction pt_e() const;
    /// (A_i a)_w = a_w / x_{-w(alpha_i)} + a_{w s_i} / x_{w(alpha_i)}.
    WFunction push_pull(int i, const WFunction &a) const;
    /// A_{i_l} ... A_{i_1}(pt_e): A_{i_1} is applied first.
    WFunction bott_samelson_class(const std::vector<int> &I) const;
    /// Fixed-point values of the push-forward of eta_L from X_I. Throws
    /// ResidualDenominator if some total fails to cancel.
    WFunction pushforward_eta(const std::vector<int> &I, Subset L) const;
    /// Sum over L_1 of v^{L_1}(x_Pi) / x_{J,L_1} at v^{L_1}.
    WFunction bott_class_direct(const std::vector<int> &J) const;
    /// Same push-forward through the localized eta expansion of j_*(f_{L_1}).
    WFunction pushforward_via_lemma(const std::vector<int> &I, Subset L) const;

    /// theta_{I,L}(u), indexed by L.bits.
    std::vector<Series> chevalley_expand(const std::vector<int> &I, const Series &u) const;
    /// Checks w(u) zeta_I(w) = sum_L theta_{I,L}(u) zeta_{I|L^c}(w) at every w.
    ChevalleyCheck chevalley_check(const std::vector<int> &I, const Series &u) const;

private:
    /// x_{-gamma} / x_gamma, a unit of S, for any root gamma.
    const Series &flip_unit(const LatticeVector &gamma) const;
    /// x_gamma / x_{-gamma}.
    const Series &flip_unit_inverse(const LatticeVector &gamma) const;
    WFunction accumulate(const std::vector<std::pair<std::size_t, LocalizedElement>> &terms,
                         bool require_integral) const;

    std::shared_ptr<const FormalGroupAlgebra> ring_;
    std::vector<WeylElement> elements_;
    std::map<IntMatrix, std::size_t> index_;
    std::vector<std::size_t> right_mult_; // right_mult_[k * rank + i-1] = index of w_k s_i
    Series x_pi_;

    Series flip_series_;     // h(t) = iota(t) / t, so x_{-l} = x_l h(x_l)
    Series flip_inverse_;    // 1 / h(t)
    mutable std::mutex unit_mutex_;
    mutable std::map<LatticeVector, std::pair<Series, Series>> units_;
};

} // namespace bsoc

#endif
