#ifndef BSOC_VERIFY_HPP
#define BSOC_VERIFY_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "bsoc/fga.hpp"

namespace bsoc {

enum class CheckStatus { pass, fail, precision };
std::string to_string(CheckStatus s);

struct CheckResult {
    std::string name;
    CheckStatus status = CheckStatus::pass;
    int cases = 0;
    std::string detail; // first failure, if any
};

struct VerifyOptions {
    std::uint64_t seed = 1;
    int random_cases = 10;
    /// Sequences for the Bott-Samelson checks; empty means a default set
    /// (all words of length <= 2 and a few of length 3).
    std::vector<std::vector<int>> sequences;
};

/// Runs the property suite of every module over one algebra. Precision
/// exhaustion is reported separately from logical failures.
std::vector<CheckResult> run_property_suite(std::shared_ptr<const FormalGroupAlgebra> S, const VerifyOptions &opt);

} // namespace bsoc

#endif
