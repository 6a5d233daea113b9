#include "bsoc/bscomb.hpp"

#include <set>
#include <stdexcept>

#include "bsoc/demazure.hpp"
#include "bsoc/errors.hpp"

namespace bsoc {

GkmElement operator+(const GkmElement &a, const GkmElement &b)
{
    GkmElement r = a;
    for (std::size_t i = 0; i < r.values.size(); ++i)
        r.values[i] += b.values[i];
    return r;
}

GkmElement operator*(const GkmElement &a, const GkmElement &b)
{
    GkmElement r = a;
    for (std::size_t i = 0; i < r.values.size(); ++i)
        r.values[i] *= b.values[i];
    return r;
}

EtaVector operator+(const EtaVector &a, const EtaVector &b)
{
    EtaVector r = a;
    for (std::size_t i = 0; i < r.coeffs.size(); ++i)
        r.coeffs[i] += b.coeffs[i];
    return r;
}

namespace {

bool agree_all(const std::vector<Series> &a, const std::vector<Series> &b)
{
    if (a.size() != b.size())
        return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!agree(a[i], b[i]))
            return false;
    return true;
}

void print_all(std::ostream &os, const std::vector<Series> &v, const char *name)
{
    os << "{";
    for (std::size_t i = 0; i < v.size(); ++i)
        os << (i ? ", " : "") << name << "[" << i << "] = " << v[i];
    os << "}";
}

} // namespace

bool agree(const GkmElement &a, const GkmElement &b) { return agree_all(a.values, b.values); }
bool agree(const EtaVector &a, const EtaVector &b) { return agree_all(a.coeffs, b.coeffs); }

std::ostream &operator<<(std::ostream &os, const GkmElement &g)
{
    print_all(os, g.values, "f");
    return os;
}

std::ostream &operator<<(std::ostream &os, const EtaVector &v)
{
    print_all(os, v.coeffs, "eta");
    return os;
}

BottSamelson::BottSamelson(std::shared_ptr<const FormalGroupAlgebra> ring, std::vector<int> seq)
    : ring_(std::move(ring)), seq_(std::move(seq))
{
    if (!ring_)
        throw std::invalid_argument("BottSamelson: null ring");
    if (length() > 16)
        throw ConfigError("sequence longer than 16 is not supported");
    const RootDatum &R = ring_->datum();
    for (int i : seq_)
        if (i < 1 || i > R.rank())
            throw ConfigError("sequence index " + std::to_string(i) + " out of range for " + R.name());
    const int l = length();
    v_.resize(num_points());
    for (std::uint32_t b = 0; b < num_points(); ++b) {
        Subset L{b};
        auto &row = v_[b];
        row.push_back(R.identity());
        for (int j = 1; j <= l; ++j)
            row.push_back(L.contains(j) ? row.back() * R.simple_reflection(seq_[j - 1]) : row.back());
    }
    a_cache_.resize(num_points() * num_points());
}

const WeylElement &BottSamelson::v(Subset L, int j) const
{
    if (j < 0 || j > length() || L.bits >= num_points())
        throw std::out_of_range("v: index out of range");
    return v_[L.bits][j];
}

std::vector<LatticeVector> BottSamelson::tangent_weights(Subset L) const
{
    const RootDatum &R = ring_->datum();
    std::vector<LatticeVector> out;
    for (int j = 1; j <= length(); ++j)
        out.push_back(-v(L, j).apply(R.simple_root(seq_[j - 1])));
    return out;
}

const Series &BottSamelson::a_coeff(Subset L, Subset M) const
{
    if (L.bits >= num_points() || M.bits >= num_points())
        throw std::out_of_range("a_coeff: subset out of range");
    std::lock_guard lock(a_mutex_);
    auto &slot = a_cache_[L.bits * num_points() + M.bits];
    if (!slot) {
        const RootDatum &R = ring_->datum();
        std::vector<LatticeVector> ws;
        for (int k : L.elements())
            ws.push_back(v(M, k - 1).apply(-R.simple_root(seq_[k - 1])));
        slot = std::make_unique<Series>(ring_->x_product(ws));
    }
    return *slot;
}

Series BottSamelson::x_IL(Subset L) const
{
    const RootDatum &R = ring_->datum();
    std::vector<LatticeVector> ws;
    for (int j = 1; j <= length(); ++j)
        ws.push_back(v(L, j).apply(-R.simple_root(seq_[j - 1])));
    return ring_->x_product(ws);
}

GkmElement BottSamelson::restrict_eta(Subset L) const
{
    GkmElement g{std::vector<Series>(num_points(), ring_->zero())};
    for (std::uint32_t m = 0; m < num_points(); ++m)
        if (Subset{m}.disjoint_from(L))
            g.values[m] = a_coeff(L, Subset{m});
    return g;
}

std::vector<std::vector<Series>> BottSamelson::restriction_matrix() const
{
    const auto order = subsets_by_cardinality(length());
    std::vector<std::vector<Series>> m;
    for (Subset L : order) {
        GkmElement row = restrict_eta(L);
        std::vector<Series> r;
        for (Subset M : order)
            r.push_back(row[M]);
        m.push_back(std::move(r));
    }
    return m;
}

GkmElement BottSamelson::eta_to_gkm(const EtaVector &v) const
{
    if (v.size() != num_points())
        throw std::invalid_argument("eta_to_gkm: wrong number of coefficients");
    GkmElement g{std::vector<Series>(num_points(), ring_->zero())};
    for (std::uint32_t b = 0; b < num_points(); ++b) {
        const Series &c = v.coeffs[b];
        if (c.is_zero())
            continue;
        Subset L{b};
        for (std::uint32_t m = 0; m < num_points(); ++m)
            if (Subset{m}.disjoint_from(L))
                g.values[m] += c * a_coeff(L, Subset{m});
    }
    return g;
}

EtaVector BottSamelson::gkm_to_eta(const GkmElement &g) const
{
    if (g.size() != num_points())
        throw std::invalid_argument("gkm_to_eta: wrong number of values");
    const int l = length();
    GkmElement residual = g;
    EtaVector out = eta_zero();
    const auto order = subsets_by_cardinality(l);
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        const Subset M = *it;
        const Subset L = M.complement(l);
        Series c = exact_divide(residual[M], a_coeff(L, M));
        out[L] = c;
        if (c.is_zero())
            continue;
        for (std::uint32_t m = 0; m < num_points(); ++m)
            if (Subset{m}.disjoint_from(L))
                residual.values[m] -= c * a_coeff(L, Subset{m});
    }
    return out;
}

GkmCheckResult BottSamelson::gkm_check(const GkmElement &g) const
{
    if (g.size() != num_points())
        throw std::invalid_argument("gkm_check: wrong number of values");
    const RootDatum &R = ring_->datum();
    for (std::uint32_t b = 0; b < num_points(); ++b) {
        const Subset L1{b};
        for (int k : L1.elements()) {
            const Subset L2 = L1.without(k);
            const LatticeVector w = v(L1, k - 1).apply(-R.simple_root(seq_[k - 1]));
            try {
                exact_divide(g[L1] - g[L2], ring_->x(w));
            } catch (const NotDivisible &e) {
                return GkmCheckResult{false, L1, L2, k, e.monomial, e.beta_power};
            }
        }
    }
    return {};
}

EtaVector BottSamelson::quadratic_relation(int j) const
{
    if (j < 1 || j > length())
        throw std::out_of_range("quadratic_relation: j out of range");
    const RootDatum &R = ring_->datum();
    const std::vector<int> prefix(seq_.begin(), seq_.begin() + (j - 1));
    const Series u = ring_->x(-R.simple_root(seq_[j - 1]));
    EtaVector out = eta_zero();
    for (std::uint32_t b = 0; b < (1u << (j - 1)); ++b)
        out[Subset{b}.with(j)] = theta_apply(*ring_, prefix, Subset{b}, u);
    return out;
}

EtaVector BottSamelson::eta_multiply(const EtaVector &a, const EtaVector &b) const
{
    return gkm_to_eta(eta_to_gkm(a) * eta_to_gkm(b));
}

GkmElement BottSamelson::char_restrict(const Series &u) const
{
    GkmElement g;
    for (std::uint32_t b = 0; b < num_points(); ++b)
        g.values.push_back(ring_->act(v(Subset{b}), u));
    return g;
}

EtaVector BottSamelson::char_in_eta(const Series &u) const
{
    EtaVector out;
    for (std::uint32_t b = 0; b < num_points(); ++b)
        out.coeffs.push_back(theta_apply(*ring_, seq_, Subset{b}, u));
    return out;
}

bool BottSamelson::distinct_weights(Subset L) const
{
    const RootDatum &R = ring_->datum();
    std::set<LatticeVector> seen;
    for (int j : L.complement(length()).elements())
        if (!seen.insert(v(L, j - 1).apply(-R.simple_root(seq_[j - 1]))).second)
            return false;
    return true;
}

EtaVector BottSamelson::eta_unit(Subset L) const
{
    EtaVector e = eta_zero();
    e[L] = ring_->one();
    return e;
}

EtaVector BottSamelson::eta_zero() const { return EtaVector{std::vector<Series>(num_points(), ring_->zero())}; }

GkmElement BottSamelson::gkm_constant(const Series &c) const
{
    return GkmElement{std::vector<Series>(num_points(), c)};
}

} // namespace bsoc
