#ifndef BSOC_RATIONAL_HPP
#define BSOC_RATIONAL_HPP

#include <cstdint>
#include <memory>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace bsoc {

/// Exact rational number.
///
/// Values whose numerator and denominator fit in 64 bits are stored inline;
/// anything larger is promoted to a GMP rational and demoted again as soon as
/// it fits. The denominator is always positive and the fraction is reduced.
class Rational {
public:
    Rational() = default;
    Rational(std::int64_t n) : num_(n) {} // NOLINT(google-explicit-constructor)
    Rational(std::int64_t n, std::int64_t d);
    explicit Rational(const mpq_class &q);

    /// Parses "a", "-a" or "a/b" (decimal integers of any size).
    static Rational parse(std::string_view text);

    bool is_zero() const { return !big_ && num_ == 0; }
    bool is_one() const { return !big_ && num_ == 1 && den_ == 1; }
    bool is_integer() const;
    int sign() const;

    mpq_class to_mpq() const;
    std::string str() const;

    Rational operator-() const;
    Rational &operator+=(const Rational &o) { return *this = *this + o; }
    Rational &operator-=(const Rational &o) { return *this = *this - o; }
    Rational &operator*=(const Rational &o) { return *this = *this * o; }
    Rational &operator/=(const Rational &o) { return *this = *this / o; }

    friend Rational operator+(const Rational &a, const Rational &b);
    friend Rational operator-(const Rational &a, const Rational &b);
    friend Rational operator*(const Rational &a, const Rational &b);
    friend Rational operator/(const Rational &a, const Rational &b);
    friend bool operator==(const Rational &a, const Rational &b);
    friend bool operator<(const Rational &a, const Rational &b);

private:
    static Rational from_wide(__int128 n, __int128 d);
    static Rational from_mpq(mpq_class q);

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
    std::shared_ptr<const mpq_class> big_; // set iff the value does not fit inline
};

inline std::ostream &operator<<(std::ostream &os, const Rational &r) { return os << r.str(); }

} // namespace bsoc

#endif
