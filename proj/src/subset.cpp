#include "bsoc/subset.hpp"

#include <algorithm>

namespace bsoc {

std::vector<Subset> subsets_by_cardinality(int l)
{
    std::vector<Subset> out;
    for (std::uint32_t b = 0; b < (1u << l); ++b)
        out.push_back(Subset{b});
    std::stable_sort(out.begin(), out.end(), [](Subset a, Subset b) { return a.size() < b.size(); });
    return out;
}

} // namespace bsoc
