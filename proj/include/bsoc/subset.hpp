#ifndef BSOC_SUBSET_HPP
#define BSOC_SUBSET_HPP

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace bsoc {

/// Subset L of [l] = {1, ..., l} as a bitmask; bit j-1 is set iff j is in L.
/// Subset L indexes the torus-fixed point pt_L of a Bott-Samelson variety.
struct Subset {
    std::uint32_t bits = 0;

    static constexpr int kMaxLength = 20;

    static Subset full(int l) { return Subset{l == 0 ? 0u : ((1u << l) - 1u)}; }
    static Subset of(const std::vector<int> &elements)
    {
        Subset s;
        for (int j : elements)
            s.bits |= 1u << (j - 1);
        return s;
    }

    bool contains(int j) const { return (bits >> (j - 1)) & 1u; }
    int size() const { return std::popcount(bits); }
    bool empty() const { return bits == 0; }
    Subset with(int j) const { return Subset{bits | (1u << (j - 1))}; }
    Subset without(int j) const { return Subset{bits & ~(1u << (j - 1))}; }
    Subset complement(int l) const { return Subset{full(l).bits & ~bits}; }
    /// L intersected with [j].
    Subset prefix(int j) const { return Subset{bits & full(j).bits}; }
    bool is_subset_of(Subset o) const { return (bits & ~o.bits) == 0; }
    bool disjoint_from(Subset o) const { return (bits & o.bits) == 0; }

    std::vector<int> elements() const
    {
        std::vector<int> out;
        for (int j = 1; j <= 32; ++j)
            if (contains(j))
                out.push_back(j);
        return out;
    }

    /// Fixed-point label: character j is '1' iff j is in L, e.g. {1} in [2] is "10".
    std::string label(int l) const
    {
        std::string out;
        for (int j = 1; j <= l; ++j)
            out += contains(j) ? '1' : '0';
        return out;
    }

    friend bool operator==(Subset, Subset) = default;
};

/// All subsets of [l], ordered by (cardinality, binary value).
std::vector<Subset> subsets_by_cardinality(int l);

} // namespace bsoc

#endif
