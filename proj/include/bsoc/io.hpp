#ifndef BSOC_IO_HPP
#define BSOC_IO_HPP

#include <memory>
#include <string>
#include <vector>

#include <json.hpp>

#include "bsoc/bscomb.hpp"
#include "bsoc/fga.hpp"
#include "bsoc/flagpush.hpp"

namespace bsoc::io {

using json = nlohmann::json;

/// "r" for a rational, {"beta_terms": [[power, "r"], ...]} otherwise.
json to_json(const Coefficient &c);
Coefficient coefficient_from_json(const json &j);

/// {"vars", "precision", "terms": [{"exp", "coeff"}]}
json to_json(const Series &s);
Series series_from_json(const json &j);

/// {"kind": "generic", "degree_cap", "coeffs": [[i, j, coeff], ...]}
json to_json(const FormalGroupLaw &F, int degree_cap);
FormalGroupLaw fgl_from_json(const json &j);
FormalGroupLaw load_fgl_file(const std::string &path);

/// {"cartan": [[...]], "name": "..."}
std::shared_ptr<const RootDatum> datum_from_json(const json &j);
std::shared_ptr<const RootDatum> load_datum_file(const std::string &path);

/// Values indexed by subset bitmask, with the sequence they belong to.
struct SubsetDocument {
    std::vector<int> seq;
    std::string basis; // "fixed" or "eta"
    std::vector<Series> entries;

    friend bool operator==(const SubsetDocument &, const SubsetDocument &) = default;
};

json to_json(const SubsetDocument &d);
SubsetDocument subset_document_from_json(const json &j);

json to_json(const FlagVariety &G, const WFunction &f);
WFunction wfunction_from_json(const FlagVariety &G, const json &j);

json read_json_file(const std::string &path);

} // namespace bsoc::io

#endif
