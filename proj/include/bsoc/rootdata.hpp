#ifndef BSOC_ROOTDATA_HPP
#define BSOC_ROOTDATA_HPP

#include <compare>
#include <cstddef>
#include <memory>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace bsoc {

/// A character, in fundamental-weight coordinates. The pairing with the
/// simple coroot alpha_i^vee is coordinate i.
struct LatticeVector {
    std::vector<int> coords;

    LatticeVector() = default;
    explicit LatticeVector(std::vector<int> c) : coords(std::move(c)) {}
    static LatticeVector zero(int rank) { return LatticeVector(std::vector<int>(rank, 0)); }

    int rank() const { return static_cast<int>(coords.size()); }
    int operator[](int i) const { return coords[i]; }
    bool is_zero() const;

    LatticeVector operator-() const;
    friend LatticeVector operator+(const LatticeVector &a, const LatticeVector &b);
    friend LatticeVector operator-(const LatticeVector &a, const LatticeVector &b) { return a + (-b); }
    friend LatticeVector operator*(int k, const LatticeVector &a);
    friend auto operator<=>(const LatticeVector &, const LatticeVector &) = default;
    friend bool operator==(const LatticeVector &, const LatticeVector &) = default;
};

std::ostream &operator<<(std::ostream &os, const LatticeVector &v);

/// Square integer matrix acting on weight coordinates, row-major.
class IntMatrix {
public:
    IntMatrix() = default;
    explicit IntMatrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * n, 0) {}
    static IntMatrix identity(int n);

    int size() const { return n_; }
    int &operator()(int r, int c) { return a_[static_cast<std::size_t>(r) * n_ + c]; }
    int operator()(int r, int c) const { return a_[static_cast<std::size_t>(r) * n_ + c]; }

    LatticeVector apply(const LatticeVector &v) const;
    LatticeVector column(int c) const;
    std::vector<std::vector<int>> rows() const;

    friend IntMatrix operator*(const IntMatrix &a, const IntMatrix &b);
    friend auto operator<=>(const IntMatrix &, const IntMatrix &) = default;
    friend bool operator==(const IntMatrix &, const IntMatrix &) = default;

private:
    int n_ = 0;
    std::vector<int> a_;
};

/// Weyl group element. The matrix is canonical; the word is only a witness.
class WeylElement {
public:
    WeylElement() = default;
    WeylElement(IntMatrix m, std::vector<int> word) : matrix_(std::move(m)), word_(std::move(word)) {}

    const IntMatrix &matrix() const { return matrix_; }
    const std::vector<int> &word() const { return word_; }
    int rank() const { return matrix_.size(); }
    bool is_identity() const { return matrix_ == IntMatrix::identity(matrix_.size()); }

    LatticeVector apply(const LatticeVector &v) const { return matrix_.apply(v); }

    /// Composition: (a * b)(v) = a(b(v)); words concatenate.
    friend WeylElement operator*(const WeylElement &a, const WeylElement &b);
    friend bool operator==(const WeylElement &a, const WeylElement &b) { return a.matrix_ == b.matrix_; }
    friend auto operator<=>(const WeylElement &a, const WeylElement &b) { return a.matrix_ <=> b.matrix_; }

private:
    IntMatrix matrix_;
    std::vector<int> word_;
};

/// Finite root system built from a Cartan matrix, in weight coordinates.
///
/// Convention: cartan(i, j) = <alpha_j, alpha_i^vee>, so the simple root
/// alpha_j is the j-th column. Simple indices in the public API are 1-based,
/// matching the way sequences of simple reflections are written.
class RootDatum {
public:
    static constexpr std::size_t kDefaultRootBound = 10000;

    /// Validates the Cartan matrix and enumerates all roots by closing the
    /// simple roots under simple reflections.
    static std::shared_ptr<const RootDatum> build(const std::vector<std::vector<int>> &cartan,
                                                  std::string name = "",
                                                  std::size_t root_bound = kDefaultRootBound);
    /// Built-in types: A1, A2, A3, B2, C2 (same root system as B2), G2.
    static std::shared_ptr<const RootDatum> named(const std::string &name);

    const std::string &name() const { return name_; }
    int rank() const { return rank_; }
    const std::vector<std::vector<int>> &cartan() const { return cartan_; }

    const LatticeVector &simple_root(int i) const; // 1-based
    const std::vector<LatticeVector> &simple_roots() const { return simple_; }
    const std::vector<LatticeVector> &positive_roots() const { return positive_; }
    const std::vector<LatticeVector> &negative_roots() const { return negative_; }
    std::vector<LatticeVector> roots() const;

    bool is_root(const LatticeVector &v) const;
    bool is_positive_root(const LatticeVector &v) const;
    /// Coordinates of a lattice vector in the simple-root basis, if integral.
    std::vector<int> root_coordinates(const LatticeVector &v) const;
    LatticeVector from_root_coordinates(const std::vector<int> &c) const;
    /// The fundamental weight omega_i (1-based).
    LatticeVector fundamental_weight(int i) const;

    /// s_i(lambda) = lambda - <lambda, alpha_i^vee> alpha_i.
    LatticeVector reflect(int i, const LatticeVector &lambda) const;
    const WeylElement &simple_reflection(int i) const;
    WeylElement weyl_from_word(const std::vector<int> &word) const;
    WeylElement identity() const;
    /// The reflection s_beta for an arbitrary root beta.
    WeylElement reflection(const LatticeVector &root) const;

private:
    RootDatum() = default;
    void check_index(int i) const;

    std::string name_;
    int rank_ = 0;
    std::vector<std::vector<int>> cartan_;
    std::vector<LatticeVector> simple_;
    std::vector<LatticeVector> positive_;
    std::vector<LatticeVector> negative_;
    std::vector<WeylElement> simple_reflections_;
    std::vector<std::pair<LatticeVector, WeylElement>> root_reflections_; // keyed by positive root
    WeylElement compute_reflection(const LatticeVector &root) const;
};

} // namespace bsoc

#endif
