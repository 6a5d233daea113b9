#include "bsoc/io.hpp"

#include <algorithm>
#include <fstream>
#include <optional>

#include "bsoc/errors.hpp"

namespace bsoc::io {

namespace {

[[noreturn]] void bad(const std::string &what) { throw ConfigError(what); }

Rational rational_from_json(const json &j)
{
    if (j.is_number_integer())
        return Rational(j.get<std::int64_t>());
    if (j.is_string()) {
        try {
            return Rational::parse(j.get<std::string>());
        } catch (const std::exception &e) {
            bad("bad rational \"" + j.get<std::string>() + "\"");
        }
    }
    bad("expected a rational (string or integer), got " + j.dump());
}

std::vector<int> int_list(const json &j, const char *what)
{
    if (!j.is_array())
        bad(std::string(what) + " must be an array");
    std::vector<int> out;
    for (const auto &e : j) {
        if (!e.is_number_integer())
            bad(std::string(what) + " must contain integers");
        out.push_back(e.get<int>());
    }
    return out;
}

const json &field(const json &j, const char *name)
{
    if (!j.is_object() || !j.contains(name))
        bad(std::string("missing field \"") + name + "\"");
    return j.at(name);
}

} // namespace

json to_json(const Coefficient &c)
{
    if (c.is_rational())
        return c.rational_value().str();
    json terms = json::array();
    for (const auto &[p, r] : c.terms())
        terms.push_back(json::array({p, r.str()}));
    return json{{"beta_terms", terms}};
}

Coefficient coefficient_from_json(const json &j)
{
    if (j.is_object()) {
        std::vector<Coefficient::Term> terms;
        for (const auto &t : field(j, "beta_terms")) {
            if (!t.is_array() || t.size() != 2 || !t[0].is_number_integer())
                bad("beta_terms entries must be [power, rational]");
            terms.emplace_back(t[0].get<int>(), rational_from_json(t[1]));
        }
        return Coefficient::from_terms(std::move(terms));
    }
    return Coefficient(rational_from_json(j));
}

json to_json(const Series &s)
{
    json terms = json::array();
    for (const auto &[exps, c] : s.grouped_terms())
        terms.push_back(json{{"exp", exps}, {"coeff", to_json(c)}});
    return json{{"vars", s.nvars()}, {"precision", s.precision()}, {"terms", terms}};
}

Series series_from_json(const json &j)
{
    const int n = field(j, "vars").get<int>();
    const int p = field(j, "precision").get<int>();
    if (n < 0 || n > key::kMaxVars)
        bad("series: vars out of range");
    if (p < 0 || p > Series::kMaxPrecision)
        bad("series: precision out of range");
    std::vector<Series::Term> terms;
    for (const auto &t : field(j, "terms")) {
        std::vector<int> exps = int_list(field(t, "exp"), "exp");
        if (static_cast<int>(exps.size()) != n)
            bad("series: exponent vector has the wrong length");
        int deg = 0;
        for (int e : exps) {
            if (e < 0)
                bad("series: negative exponent");
            deg += e;
        }
        if (deg > p)
            bad("series: term of degree " + std::to_string(deg) + " exceeds precision " + std::to_string(p));
        const Coefficient c = coefficient_from_json(field(t, "coeff"));
        for (const auto &[b, r] : c.terms())
            terms.emplace_back(key::make(exps, b), r);
    }
    return Series::from_terms(n, p, std::move(terms));
}

json to_json(const FormalGroupLaw &F, int degree_cap)
{
    json coeffs = json::array();
    for (const auto &[ij, c] : F.coeffs())
        if (ij.first + ij.second <= degree_cap)
            coeffs.push_back(json::array({ij.first, ij.second, to_json(c)}));
    return json{{"kind", "generic"}, {"degree_cap", degree_cap}, {"coeffs", coeffs}};
}

FormalGroupLaw fgl_from_json(const json &j)
{
    const json &kind = field(j, "kind");
    if (!kind.is_string() || kind.get<std::string>() != "generic")
        bad("formal group law file: kind must be \"generic\"");
    const json &cap = field(j, "degree_cap");
    if (!cap.is_number_integer())
        bad("formal group law file: degree_cap must be an integer");
    std::map<std::pair<int, int>, Coefficient> coeffs;
    for (const auto &e : field(j, "coeffs")) {
        if (!e.is_array() || e.size() != 3 || !e[0].is_number_integer() || !e[1].is_number_integer())
            bad("formal group law file: coeffs entries must be [i, j, coeff]");
        auto &slot = coeffs[{e[0].get<int>(), e[1].get<int>()}];
        slot = slot + coefficient_from_json(e[2]);
    }
    return FormalGroupLaw::generic(coeffs, cap.get<int>());
}

json read_json_file(const std::string &path)
{
    std::ifstream in(path);
    if (!in)
        bad("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error &e) {
        bad(path + ": " + e.what());
    }
}

FormalGroupLaw load_fgl_file(const std::string &path) { return fgl_from_json(read_json_file(path)); }

std::shared_ptr<const RootDatum> datum_from_json(const json &j)
{
    const json &c = field(j, "cartan");
    if (!c.is_array())
        bad("cartan must be an array of rows");
    std::vector<std::vector<int>> cartan;
    for (const auto &row : c)
        cartan.push_back(int_list(row, "cartan row"));
    std::string name = j.contains("name") && j["name"].is_string() ? j["name"].get<std::string>() : "custom";
    return RootDatum::build(cartan, name);
}

std::shared_ptr<const RootDatum> load_datum_file(const std::string &path)
{
    return datum_from_json(read_json_file(path));
}

json to_json(const SubsetDocument &d)
{
    json entries = json::array();
    for (std::size_t b = 0; b < d.entries.size(); ++b)
        entries.push_back(json{{"subset", b}, {"series", to_json(d.entries[b])}});
    return json{{"seq", d.seq}, {"basis", d.basis}, {"entries", entries}};
}

SubsetDocument subset_document_from_json(const json &j)
{
    SubsetDocument d;
    d.seq = int_list(field(j, "seq"), "seq");
    d.basis = field(j, "basis").get<std::string>();
    if (d.basis != "fixed" && d.basis != "eta")
        bad("basis must be \"fixed\" or \"eta\"");
    if (d.seq.size() > 16)
        bad("sequence too long");
    const std::size_t n = std::size_t{1} << d.seq.size();
    std::vector<std::optional<Series>> slots(n);
    for (const auto &e : field(j, "entries")) {
        const auto b = field(e, "subset").get<std::int64_t>();
        if (b < 0 || static_cast<std::size_t>(b) >= n)
            bad("subset " + std::to_string(b) + " outside [l]");
        if (slots[b])
            bad("subset " + std::to_string(b) + " given twice");
        slots[b] = series_from_json(field(e, "series"));
    }
    for (std::size_t b = 0; b < n; ++b) {
        if (!slots[b])
            bad("missing entry for subset " + std::to_string(b));
        d.entries.push_back(std::move(*slots[b]));
    }
    return d;
}

json to_json(const FlagVariety &G, const WFunction &f)
{
    json entries = json::array();
    for (std::size_t k = 0; k < G.size(); ++k) {
        const auto &w = G.elements()[k];
        json den = json::array();
        for (const auto &g : f.values[k].den)
            den.push_back(g.coords);
        entries.push_back(json{{"weyl_word", w.word()},
                               {"weyl_matrix", w.matrix().rows()},
                               {"series", to_json(f.values[k].num)},
                               {"denominator_roots", den}});
    }
    return json{{"group", G.ring().datum().name()}, {"entries", entries}};
}

WFunction wfunction_from_json(const FlagVariety &G, const json &j)
{
    const RootDatum &R = G.ring().datum();
    WFunction f = G.zero();
    std::vector<bool> seen(G.size(), false);
    for (const auto &e : field(j, "entries")) {
        WeylElement w = R.weyl_from_word(int_list(field(e, "weyl_word"), "weyl_word"));
        if (e.contains("weyl_matrix") && e["weyl_matrix"] != json(w.matrix().rows()))
            bad("weyl_matrix does not match weyl_word");
        const std::size_t k = G.index_of(w);
        if (seen[k])
            bad("Weyl element listed twice");
        seen[k] = true;
        f.values[k].num = series_from_json(field(e, "series"));
        for (const auto &g : field(e, "denominator_roots")) {
            LatticeVector r(int_list(g, "denominator root"));
            if (!R.is_positive_root(r))
                bad("denominator roots must be positive roots");
            f.values[k].den.push_back(r);
        }
        std::sort(f.values[k].den.begin(), f.values[k].den.end());
    }
    if (std::find(seen.begin(), seen.end(), false) != seen.end())
        bad("WFunction does not cover the Weyl group");
    return f;
}

} // namespace bsoc::io
