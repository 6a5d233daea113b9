#include "bsoc/render.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "bsoc/errors.hpp"

namespace bsoc {

std::string weight_label(const RootDatum &R, const LatticeVector &v)
{
    std::vector<int> c = R.root_coordinates(v);
    std::ostringstream os;
    // Outside the root lattice, fall back to fundamental-weight coordinates.
    const char *letter = "a";
    if (c.empty()) {
        c = v.coords;
        letter = "w";
    }
    bool first = true;
    for (int i = 0; i < static_cast<int>(c.size()); ++i) {
        if (c[i] == 0)
            continue;
        if (c[i] < 0)
            os << "-";
        else if (!first)
            os << "+";
        if (std::abs(c[i]) != 1)
            os << std::abs(c[i]);
        os << letter << i + 1;
        first = false;
    }
    if (first)
        os << "0";
    return os.str();
}

namespace {

std::vector<LatticeVector> candidates(const RootDatum &R)
{
    std::vector<LatticeVector> out = R.roots();
    std::set<LatticeVector> seen(out.begin(), out.end());
    if (R.rank() <= 3) {
        const int n = R.rank();
        std::vector<int> c(n, -2);
        while (true) {
            LatticeVector v = R.from_root_coordinates(c);
            if (!v.is_zero() && seen.insert(v).second)
                out.push_back(v);
            int i = 0;
            while (i < n && c[i] == 2)
                c[i++] = -2;
            if (i == n)
                break;
            ++c[i];
        }
        // Small weights outside the root lattice, e.g. omega_1.
        std::vector<int> w(n, -1);
        while (true) {
            LatticeVector v(w);
            if (!v.is_zero() && seen.insert(v).second)
                out.push_back(v);
            int i = 0;
            while (i < n && w[i] == 1)
                w[i++] = -1;
            if (i == n)
                break;
            ++w[i];
        }
    }
    return out;
}

bool search(const FormalGroupAlgebra &S, const std::vector<LatticeVector> &cands, std::size_t start,
            const Series &s, Factorization &acc)
{
    if (s.valuation() == 0) {
        Series c = s.homogeneous_part(0);
        if (!(s == c))
            return false;
        acc.constant = s.constant_term();
        return true;
    }
    for (std::size_t k = start; k < cands.size(); ++k) {
        Series q;
        try {
            q = exact_divide(s, S.x(cands[k]));
        } catch (const MathError &) {
            continue;
        } catch (const PrecisionExhausted &) {
            continue;
        }
        acc.factors.push_back(cands[k]);
        if (search(S, cands, k, q, acc))
            return true;
        acc.factors.pop_back();
    }
    return false;
}

} // namespace

std::optional<Factorization> factor_series(const FormalGroupAlgebra &S, const Series &s)
{
    if (s.is_zero())
        return std::nullopt;
    static thread_local std::map<std::string, std::vector<LatticeVector>> cache;
    const RootDatum &R = S.datum();
    std::ostringstream key;
    for (const auto &row : R.cartan())
        for (int v : row)
            key << v << ",";
    auto it = cache.find(key.str());
    if (it == cache.end())
        it = cache.emplace(key.str(), candidates(R)).first;
    Factorization f;
    if (!search(S, it->second, 0, s, f))
        return std::nullopt;
    // Accept only if the product reproduces s at its full precision.
    Series back = S.x_product(f.factors).scaled(f.constant);
    if (back.precision() < s.precision() || !(back.truncated(s.precision()) == s))
        return std::nullopt;
    return f;
}

std::string render_series(const FormalGroupAlgebra &S, const Series &s)
{
    if (s.is_zero())
        return "0";
    auto f = factor_series(S, s);
    if (!f) {
        std::string raw = s.str();
        return "[" + raw + "]";
    }
    // Additive-type laws: prefer x(-g) over -x(g), which reads closer to the
    // usual notation for tangent weights.
    if (f->constant.is_rational() && f->constant.rational_value().sign() < 0) {
        for (auto &g : f->factors) {
            if (S.x(-g) == -S.x(g)) {
                g = -g;
                f->constant = -f->constant;
                break;
            }
        }
    }
    std::vector<std::string> labels;
    for (const auto &g : f->factors)
        labels.push_back("x(" + weight_label(S.datum(), g) + ")");
    std::sort(labels.begin(), labels.end());
    std::ostringstream os;
    std::string c = f->constant.str();
    const bool single = f->constant.terms().size() == 1;
    if (f->factors.empty())
        return c;
    if (c == "-1")
        os << "-";
    else if (c != "1")
        os << (single ? c : "(" + c + ")") << "*";
    for (std::size_t k = 0; k < labels.size(); ++k)
        os << (k ? "*" : "") << labels[k];
    return os.str();
}

} // namespace bsoc
