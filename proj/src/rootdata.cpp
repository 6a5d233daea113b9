#include "bsoc/rootdata.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>

#include "bsoc/errors.hpp"
#include "bsoc/rational.hpp"

namespace bsoc {

bool LatticeVector::is_zero() const
{
    return std::all_of(coords.begin(), coords.end(), [](int c) { return c == 0; });
}

LatticeVector LatticeVector::operator-() const
{
    LatticeVector out = *this;
    for (int &c : out.coords)
        c = -c;
    return out;
}

LatticeVector operator+(const LatticeVector &a, const LatticeVector &b)
{
    if (a.rank() != b.rank())
        throw std::invalid_argument("LatticeVector: rank mismatch");
    LatticeVector out = a;
    for (int i = 0; i < a.rank(); ++i)
        out.coords[i] += b.coords[i];
    return out;
}

LatticeVector operator*(int k, const LatticeVector &a)
{
    LatticeVector out = a;
    for (int &c : out.coords)
        c *= k;
    return out;
}

std::ostream &operator<<(std::ostream &os, const LatticeVector &v)
{
    os << '(';
    for (int i = 0; i < v.rank(); ++i)
        os << (i ? "," : "") << v.coords[i];
    return os << ')';
}

IntMatrix IntMatrix::identity(int n)
{
    IntMatrix m(n);
    for (int i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

LatticeVector IntMatrix::apply(const LatticeVector &v) const
{
    if (v.rank() != n_)
        throw std::invalid_argument("IntMatrix::apply: dimension mismatch");
    LatticeVector out = LatticeVector::zero(n_);
    for (int r = 0; r < n_; ++r) {
        int s = 0;
        for (int c = 0; c < n_; ++c)
            s += (*this)(r, c) * v.coords[c];
        out.coords[r] = s;
    }
    return out;
}

LatticeVector IntMatrix::column(int c) const
{
    LatticeVector out = LatticeVector::zero(n_);
    for (int r = 0; r < n_; ++r)
        out.coords[r] = (*this)(r, c);
    return out;
}

std::vector<std::vector<int>> IntMatrix::rows() const
{
    std::vector<std::vector<int>> out(n_, std::vector<int>(n_));
    for (int r = 0; r < n_; ++r)
        for (int c = 0; c < n_; ++c)
            out[r][c] = (*this)(r, c);
    return out;
}

IntMatrix operator*(const IntMatrix &a, const IntMatrix &b)
{
    if (a.n_ != b.n_)
        throw std::invalid_argument("IntMatrix: dimension mismatch");
    IntMatrix out(a.n_);
    for (int r = 0; r < a.n_; ++r)
        for (int k = 0; k < a.n_; ++k) {
            int x = a(r, k);
            if (x == 0)
                continue;
            for (int c = 0; c < a.n_; ++c)
                out(r, c) += x * b(k, c);
        }
    return out;
}

WeylElement operator*(const WeylElement &a, const WeylElement &b)
{
    std::vector<int> word = a.word_;
    word.insert(word.end(), b.word_.begin(), b.word_.end());
    return WeylElement(a.matrix_ * b.matrix_, std::move(word));
}

namespace {

void validate_cartan(const std::vector<std::vector<int>> &cartan)
{
    const std::size_t n = cartan.size();
    if (n == 0)
        throw ConfigError("Cartan matrix must have positive rank");
    for (std::size_t i = 0; i < n; ++i) {
        if (cartan[i].size() != n)
            throw ConfigError("Cartan matrix must be square");
        for (std::size_t j = 0; j < n; ++j) {
            int a = cartan[i][j];
            if (i == j && a != 2)
                throw ConfigError("Cartan matrix must have 2 on the diagonal");
            if (i != j && a > 0)
                throw ConfigError("Cartan matrix off-diagonal entries must be non-positive");
        }
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if ((cartan[i][j] == 0) != (cartan[j][i] == 0))
                throw ConfigError("Cartan matrix: a_ij = 0 must imply a_ji = 0");
}

} // namespace

std::shared_ptr<const RootDatum> RootDatum::build(const std::vector<std::vector<int>> &cartan, std::string name,
                                                  std::size_t root_bound)
{
    validate_cartan(cartan);
    auto d = std::shared_ptr<RootDatum>(new RootDatum());
    d->name_ = std::move(name);
    d->rank_ = static_cast<int>(cartan.size());
    d->cartan_ = cartan;
    const int n = d->rank_;

    for (int j = 0; j < n; ++j) {
        LatticeVector a = LatticeVector::zero(n);
        for (int i = 0; i < n; ++i)
            a.coords[i] = cartan[i][j];
        d->simple_.push_back(a);
    }

    // Closure of the simple roots under simple reflections, tracked in the
    // simple-root basis so positivity is a sign test.
    auto to_weight = [&](const std::vector<int> &c) {
        LatticeVector v = LatticeVector::zero(n);
        for (int j = 0; j < n; ++j)
            for (int i = 0; i < n; ++i)
                v.coords[i] += cartan[i][j] * c[j];
        return v;
    };
    std::set<std::vector<int>> seen;
    std::deque<std::vector<int>> queue;
    for (int j = 0; j < n; ++j) {
        std::vector<int> e(n, 0);
        e[j] = 1;
        seen.insert(e);
        queue.push_back(e);
    }
    while (!queue.empty()) {
        auto c = queue.front();
        queue.pop_front();
        LatticeVector w = to_weight(c);
        for (int i = 0; i < n; ++i) {
            auto r = c;
            r[i] -= w.coords[i];
            if (seen.insert(r).second) {
                if (seen.size() > root_bound)
                    throw ConfigError("root enumeration exceeded " + std::to_string(root_bound) +
                                      " roots; Cartan matrix is not of finite type");
                queue.push_back(r);
            }
        }
    }
    for (const auto &c : seen) {
        bool pos = std::all_of(c.begin(), c.end(), [](int x) { return x >= 0; });
        bool neg = std::all_of(c.begin(), c.end(), [](int x) { return x <= 0; });
        if (!pos && !neg)
            throw ConfigError("root closure produced a root of mixed sign; Cartan matrix is not of finite type");
        if (pos)
            d->positive_.push_back(to_weight(c));
    }
    // Height order, then lexicographic: deterministic and simple roots first.
    auto height = [&](const LatticeVector &v) {
        auto c = d->root_coordinates(v);
        int h = 0;
        for (int x : c)
            h += x;
        return h;
    };
    std::sort(d->positive_.begin(), d->positive_.end(), [&](const LatticeVector &a, const LatticeVector &b) {
        int ha = height(a), hb = height(b);
        if (ha != hb)
            return ha < hb;
        return d->root_coordinates(a) > d->root_coordinates(b);
    });
    for (const auto &p : d->positive_)
        d->negative_.push_back(-p);

    for (int i = 1; i <= n; ++i) {
        IntMatrix m = IntMatrix::identity(n);
        const LatticeVector &a = d->simple_[i - 1];
        // lambda - lambda_i * alpha_i
        for (int r = 0; r < n; ++r)
            m(r, i - 1) -= a.coords[r];
        d->simple_reflections_.emplace_back(std::move(m), std::vector<int>{i});
    }
    for (const auto &p : d->positive_)
        d->root_reflections_.emplace_back(p, d->compute_reflection(p));
    return d;
}

std::shared_ptr<const RootDatum> RootDatum::named(const std::string &name)
{
    static const std::map<std::string, std::vector<std::vector<int>>> table = {
        {"A1", {{2}}},
        {"A2", {{2, -1}, {-1, 2}}},
        {"A3", {{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}}},
        {"B2", {{2, -1}, {-2, 2}}},
        {"C2", {{2, -1}, {-2, 2}}},
        {"G2", {{2, -1}, {-3, 2}}},
    };
    auto it = table.find(name);
    if (it == table.end())
        throw ConfigError("unknown root system type '" + name + "' (built-in: A1, A2, A3, B2, C2, G2)");
    return build(it->second, name);
}

void RootDatum::check_index(int i) const
{
    if (i < 1 || i > rank_)
        throw std::out_of_range("simple index " + std::to_string(i) + " out of range 1.." + std::to_string(rank_));
}

const LatticeVector &RootDatum::simple_root(int i) const
{
    check_index(i);
    return simple_[i - 1];
}

std::vector<LatticeVector> RootDatum::roots() const
{
    std::vector<LatticeVector> out = positive_;
    out.insert(out.end(), negative_.begin(), negative_.end());
    return out;
}

bool RootDatum::is_root(const LatticeVector &v) const
{
    return std::find(positive_.begin(), positive_.end(), v) != positive_.end() ||
           std::find(negative_.begin(), negative_.end(), v) != negative_.end();
}

bool RootDatum::is_positive_root(const LatticeVector &v) const
{
    return std::find(positive_.begin(), positive_.end(), v) != positive_.end();
}

std::vector<int> RootDatum::root_coordinates(const LatticeVector &v) const
{
    const int n = rank_;
    if (v.rank() != n)
        throw std::invalid_argument("root_coordinates: rank mismatch");
    // Solve cartan * c = v exactly.
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n + 1));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j)
            m[i][j] = Rational(cartan_[i][j]);
        m[i][n] = Rational(v.coords[i]);
    }
    for (int col = 0; col < n; ++col) {
        int piv = col;
        while (piv < n && m[piv][col].is_zero())
            ++piv;
        if (piv == n)
            throw std::logic_error("root_coordinates: singular Cartan matrix");
        std::swap(m[piv], m[col]);
        for (int r = 0; r < n; ++r) {
            if (r == col || m[r][col].is_zero())
                continue;
            Rational f = m[r][col] / m[col][col];
            for (int c = col; c <= n; ++c)
                m[r][c] -= f * m[col][c];
        }
    }
    std::vector<int> out(n);
    for (int i = 0; i < n; ++i) {
        Rational x = m[i][n] / m[i][i];
        if (!x.is_integer())
            return {};
        out[i] = static_cast<int>(x.to_mpq().get_num().get_si());
    }
    return out;
}

LatticeVector RootDatum::from_root_coordinates(const std::vector<int> &c) const
{
    LatticeVector v = LatticeVector::zero(rank_);
    for (int j = 0; j < rank_; ++j)
        v = v + c.at(j) * simple_[j];
    return v;
}

LatticeVector RootDatum::fundamental_weight(int i) const
{
    check_index(i);
    LatticeVector v = LatticeVector::zero(rank_);
    v.coords[i - 1] = 1;
    return v;
}

LatticeVector RootDatum::reflect(int i, const LatticeVector &lambda) const
{
    check_index(i);
    if (lambda.rank() != rank_)
        throw std::invalid_argument("reflect: rank mismatch");
    return lambda - lambda.coords[i - 1] * simple_[i - 1];
}

const WeylElement &RootDatum::simple_reflection(int i) const
{
    check_index(i);
    return simple_reflections_[i - 1];
}

WeylElement RootDatum::identity() const { return WeylElement(IntMatrix::identity(rank_), {}); }

WeylElement RootDatum::weyl_from_word(const std::vector<int> &word) const
{
    WeylElement w = identity();
    for (int i : word)
        w = w * simple_reflection(i);
    return w;
}

WeylElement RootDatum::reflection(const LatticeVector &root) const
{
    const LatticeVector pos = is_positive_root(root) ? root : -root;
    for (const auto &[r, w] : root_reflections_)
        if (r == pos)
            return w;
    return compute_reflection(root);
}

WeylElement RootDatum::compute_reflection(const LatticeVector &root) const
{
    // Find u with root = u(alpha_i); then s_root = u s_i u^{-1}.
    std::deque<std::pair<LatticeVector, std::vector<int>>> queue;
    std::set<LatticeVector> seen;
    for (int i = 1; i <= rank_; ++i) {
        if (simple_[i - 1] == root)
            return simple_reflection(i);
        if (-simple_[i - 1] == root)
            return simple_reflection(i);
    }
    LatticeVector target = is_positive_root(root) ? root : -root;
    if (!is_root(target))
        throw std::invalid_argument("reflection: not a root");
    for (int i = 1; i <= rank_; ++i) {
        queue.emplace_back(simple_[i - 1], std::vector<int>{i});
        seen.insert(simple_[i - 1]);
    }
    while (!queue.empty()) {
        auto [beta, word] = queue.front();
        queue.pop_front();
        if (beta == target) {
            // word = (i, j_1, ..., j_k) encodes beta = s_{j_k} ... s_{j_1}(alpha_i).
            std::vector<int> u(word.rbegin(), word.rend() - 1);
            WeylElement uw = weyl_from_word(u);
            std::vector<int> uinv(u.rbegin(), u.rend());
            return uw * simple_reflection(word.front()) * weyl_from_word(uinv);
        }
        for (int j = 1; j <= rank_; ++j) {
            LatticeVector next = reflect(j, beta);
            if (seen.insert(next).second) {
                auto w2 = word;
                w2.push_back(j);
                queue.emplace_back(next, std::move(w2));
            }
        }
    }
    throw std::logic_error("reflection: root not reached");
}

} // namespace bsoc
