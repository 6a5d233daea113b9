#ifndef BSOC_ERRORS_HPP
#define BSOC_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace bsoc {

/// A mathematical check failed: a division that should be exact was not, a
/// fixed-point function is not integral, and so on.
class MathError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised by exact division. `monomial` holds the weight-basis exponents of
/// the first term that could not be eliminated, followed by its beta power.
class NotDivisible : public MathError {
public:
    NotDivisible(const std::string &what, std::vector<int> monomial, int beta_power)
        : MathError(what), monomial(std::move(monomial)), beta_power(beta_power)
    {
    }
    std::vector<int> monomial;
    int beta_power;
};

/// A localized value kept a denominator where the theory promises none.
class ResidualDenominator : public MathError {
public:
    using MathError::MathError;
};

/// The truncation precision ran out before a result could be certified.
class PrecisionExhausted : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Invalid user input (Cartan matrix, formal group law file, CLI options).
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace bsoc

#endif
