#ifndef BSOC_BSCOMB_HPP
#define BSOC_BSCOMB_HPP

#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "bsoc/fga.hpp"
#include "bsoc/subset.hpp"

namespace bsoc {

/// A function on the fixed points of X_I: values[L.bits] is the value at pt_L.
struct GkmElement {
    std::vector<Series> values;

    Series &operator[](Subset L) { return values[L.bits]; }
    const Series &operator[](Subset L) const { return values[L.bits]; }
    std::size_t size() const { return values.size(); }

    friend GkmElement operator+(const GkmElement &a, const GkmElement &b);
    friend GkmElement operator*(const GkmElement &a, const GkmElement &b);
    friend bool operator==(const GkmElement &, const GkmElement &) = default;
};

/// Coefficients in the basis eta_L: coeffs[L.bits] multiplies eta_L.
struct EtaVector {
    std::vector<Series> coeffs;

    Series &operator[](Subset L) { return coeffs[L.bits]; }
    const Series &operator[](Subset L) const { return coeffs[L.bits]; }
    std::size_t size() const { return coeffs.size(); }

    friend EtaVector operator+(const EtaVector &a, const EtaVector &b);
    friend bool operator==(const EtaVector &, const EtaVector &) = default;
};

/// Entrywise agreement up to the smaller precision of each pair.
bool agree(const GkmElement &a, const GkmElement &b);
bool agree(const EtaVector &a, const EtaVector &b);

std::ostream &operator<<(std::ostream &os, const GkmElement &g);
std::ostream &operator<<(std::ostream &os, const EtaVector &v);

/// Outcome of the GKM divisibility test. On failure (l1, l2, k) is the
/// offending edge, l1 = l2 + {k}, and `monomial` the obstructing term.
struct GkmCheckResult {
    bool ok = true;
    Subset l1, l2;
    int k = 0;
    std::vector<int> monomial;
    int beta_power = 0;
};

/// Fixed-point combinatorics of the Bott-Samelson variety X_I.
class BottSamelson {
public:
    BottSamelson(std::shared_ptr<const FormalGroupAlgebra> ring, std::vector<int> seq);

    const FormalGroupAlgebra &ring() const { return *ring_; }
    std::shared_ptr<const FormalGroupAlgebra> ring_ptr() const { return ring_; }
    const std::vector<int> &seq() const { return seq_; }
    int length() const { return static_cast<int>(seq_.size()); }
    std::size_t num_points() const { return std::size_t{1} << seq_.size(); }

    /// v_j^L: product of s_{i_k} over k in L, k <= j, in increasing k.
    const WeylElement &v(Subset L, int j) const;
    const WeylElement &v(Subset L) const { return v(L, length()); }

    /// Tangent weights at pt_L: -v_j^L(alpha_{i_j}) for j = 1..l.
    std::vector<LatticeVector> tangent_weights(Subset L) const;
    /// a_{L,M} = prod_{k in L} x_{v_{k-1}^M(-alpha_{i_k})}.
    const Series &a_coeff(Subset L, Subset M) const;
    /// x_{I,L} = prod_j x_{v_j^L(-alpha_{i_j})}.
    Series x_IL(Subset L) const;

    /// j^*(eta_L): a_{L,M} at M disjoint from L, zero elsewhere.
    GkmElement restrict_eta(Subset L) const;
    /// Rows L, columns M, both in (cardinality, value) order.
    std::vector<std::vector<Series>> restriction_matrix() const;

    GkmElement eta_to_gkm(const EtaVector &v) const;
    /// Inverse of eta_to_gkm by back-substitution, largest support first.
    /// Throws NotDivisible if g is not in the image.
    EtaVector gkm_to_eta(const GkmElement &g) const;
    GkmCheckResult gkm_check(const GkmElement &g) const;

    /// eta_j^2 in the eta basis.
    EtaVector quadratic_relation(int j) const;
    EtaVector eta_multiply(const EtaVector &a, const EtaVector &b) const;

    /// Restriction of c_I(u): v^L(u) at pt_L.
    GkmElement char_restrict(const Series &u) const;
    /// c_I(u) in the eta basis: theta_{I,L}(u) at eta_L.
    EtaVector char_in_eta(const Series &u) const;

    /// True if the weights v_{j-1}^L(-alpha_{i_j}), j not in L, are pairwise distinct.
    bool distinct_weights(Subset L) const;

    EtaVector eta_unit(Subset L) const;
    EtaVector eta_zero() const;
    GkmElement gkm_constant(const Series &c) const;

private:
    std::shared_ptr<const FormalGroupAlgebra> ring_;
    std::vector<int> seq_;
    std::vector<std::vector<WeylElement>> v_; // v_[L.bits][j]

    mutable std::mutex a_mutex_;
    mutable std::vector<std::unique_ptr<Series>> a_cache_;
};

} // namespace bsoc

#endif
