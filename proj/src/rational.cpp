#include "bsoc/rational.hpp"

#include <limits>
#include <stdexcept>

namespace bsoc {

namespace {

using u128 = unsigned __int128;

u128 gcd128(u128 a, u128 b)
{
    while (b != 0) {
        u128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

u128 abs128(__int128 v) { return v < 0 ? u128(-(v + 1)) + 1 : u128(v); }

bool fits64(__int128 v)
{
    return v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max();
}

mpz_class to_mpz(__int128 v)
{
    bool neg = v < 0;
    u128 m = abs128(v);
    mpz_class hi(static_cast<unsigned long>(m >> 64));
    mpz_class lo(static_cast<unsigned long>(m & 0xFFFFFFFFFFFFFFFFULL));
    mpz_class r = (hi << 64) + lo;
    return neg ? mpz_class(-r) : r;
}

} // namespace

Rational::Rational(std::int64_t n, std::int64_t d)
{
    if (d == 0)
        throw std::domain_error("Rational: zero denominator");
    *this = from_wide(n, d);
}

Rational::Rational(const mpq_class &q) { *this = from_mpq(q); }

Rational Rational::from_wide(__int128 n, __int128 d)
{
    if (d < 0) {
        n = -n;
        d = -d;
    }
    if (n == 0)
        return Rational();
    u128 g = gcd128(abs128(n), u128(d));
    if (g > 1) {
        n /= static_cast<__int128>(g);
        d /= static_cast<__int128>(g);
    }
    if (fits64(n) && fits64(d)) {
        Rational r;
        r.num_ = static_cast<std::int64_t>(n);
        r.den_ = static_cast<std::int64_t>(d);
        return r;
    }
    mpq_class q(to_mpz(n), to_mpz(d));
    Rational r;
    r.big_ = std::make_shared<const mpq_class>(std::move(q));
    return r;
}

Rational Rational::from_mpq(mpq_class q)
{
    q.canonicalize();
    if (q.get_num().fits_slong_p() && q.get_den().fits_slong_p()) {
        Rational r;
        r.num_ = q.get_num().get_si();
        r.den_ = q.get_den().get_si();
        return r;
    }
    Rational r;
    r.big_ = std::make_shared<const mpq_class>(std::move(q));
    return r;
}

Rational Rational::parse(std::string_view text)
{
    std::string s(text);
    auto trim = [](std::string &t) {
        auto b = t.find_first_not_of(" \t");
        auto e = t.find_last_not_of(" \t");
        t = b == std::string::npos ? std::string() : t.substr(b, e - b + 1);
    };
    trim(s);
    if (s.empty())
        throw std::invalid_argument("Rational::parse: empty string");
    if (s.front() == '+')
        s.erase(0, 1);
    mpq_class q;
    if (q.set_str(s, 10) != 0)
        throw std::invalid_argument("Rational::parse: malformed rational '" + std::string(text) + "'");
    if (q.get_den() == 0)
        throw std::invalid_argument("Rational::parse: zero denominator in '" + std::string(text) + "'");
    return from_mpq(std::move(q));
}

bool Rational::is_integer() const { return big_ ? big_->get_den() == 1 : den_ == 1; }

int Rational::sign() const
{
    if (big_)
        return sgn(*big_);
    return (num_ > 0) - (num_ < 0);
}

mpq_class Rational::to_mpq() const
{
    if (big_)
        return *big_;
    return mpq_class(mpz_class(static_cast<long>(num_)), mpz_class(static_cast<long>(den_)));
}

std::string Rational::str() const
{
    if (big_)
        return big_->get_str();
    if (den_ == 1)
        return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::operator-() const
{
    if (big_)
        return from_mpq(-*big_);
    return from_wide(-static_cast<__int128>(num_), den_);
}

Rational operator+(const Rational &a, const Rational &b)
{
    if (a.big_ || b.big_)
        return Rational::from_mpq(a.to_mpq() + b.to_mpq());
    if (a.num_ == 0)
        return b;
    if (b.num_ == 0)
        return a;
    if (a.den_ == 1 && b.den_ == 1)
        return Rational::from_wide(static_cast<__int128>(a.num_) + b.num_, 1);
    __int128 n = static_cast<__int128>(a.num_) * b.den_ + static_cast<__int128>(b.num_) * a.den_;
    __int128 d = static_cast<__int128>(a.den_) * b.den_;
    return Rational::from_wide(n, d);
}

Rational operator-(const Rational &a, const Rational &b) { return a + (-b); }

Rational operator*(const Rational &a, const Rational &b)
{
    if (a.big_ || b.big_)
        return Rational::from_mpq(a.to_mpq() * b.to_mpq());
    if (a.num_ == 0 || b.num_ == 0)
        return Rational();
    return Rational::from_wide(static_cast<__int128>(a.num_) * b.num_, static_cast<__int128>(a.den_) * b.den_);
}

Rational operator/(const Rational &a, const Rational &b)
{
    if (b.is_zero())
        throw std::domain_error("Rational: division by zero");
    if (a.big_ || b.big_)
        return Rational::from_mpq(a.to_mpq() / b.to_mpq());
    return Rational::from_wide(static_cast<__int128>(a.num_) * b.den_, static_cast<__int128>(a.den_) * b.num_);
}

bool operator==(const Rational &a, const Rational &b)
{
    // Both operands are canonical, and big values never fit inline.
    if (a.big_ || b.big_)
        return a.big_ && b.big_ && *a.big_ == *b.big_;
    return a.num_ == b.num_ && a.den_ == b.den_;
}

bool operator<(const Rational &a, const Rational &b)
{
    if (a.big_ || b.big_)
        return a.to_mpq() < b.to_mpq();
    return static_cast<__int128>(a.num_) * b.den_ < static_cast<__int128>(b.num_) * a.den_;
}

} // namespace bsoc
