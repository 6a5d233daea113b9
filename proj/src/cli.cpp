#include "bsoc/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "bsoc/bscomb.hpp"
#include "bsoc/errors.hpp"
#include "bsoc/flagpush.hpp"
#include "bsoc/io.hpp"
#include "bsoc/render.hpp"
#include "bsoc/verify.hpp"

namespace bsoc {

namespace {

using io::json;

struct JobConfig {
    std::string type = "A2";
    std::string cartan_file;
    std::string fgl = "additive";
    std::string fgl_file;
    int precision = FormalGroupAlgebra::kDefaultPrecision;
    std::string seq;
    std::string subset;
    bool subset_given = false;
    std::string format = "json";
    std::uint64_t seed = 1;
    std::string out;
    std::string in;
    std::string weight;
    bool verify = false;
    int cases = 10;
};

std::vector<int> parse_int_list(const std::string &text, const char *what)
{
    std::vector<int> out;
    if (text.empty())
        return out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoi(item, &used));
            if (used != item.size())
                throw std::invalid_argument(item);
        } catch (const std::exception &) {
            throw ConfigError(std::string("bad ") + what + " entry \"" + item + "\"");
        }
    }
    return out;
}

struct Job {
    JobConfig cfg;
    std::shared_ptr<const FormalGroupAlgebra> ring;
    std::vector<int> seq;

    const RootDatum &datum() const { return ring->datum(); }
    bool text() const { return cfg.format == "text"; }

    Subset subset() const
    {
        const int l = static_cast<int>(seq.size());
        if (cfg.subset == "full")
            return Subset::full(l);
        Subset L;
        for (int j : parse_int_list(cfg.subset, "subset")) {
            if (j < 1 || j > l)
                throw ConfigError("subset element " + std::to_string(j) + " outside [1.." + std::to_string(l) + "]");
            L = L.with(j);
        }
        return L;
    }
};

Job make_job(const JobConfig &cfg)
{
    Job job{cfg, nullptr, {}};
    if (cfg.precision < 2 || cfg.precision > Series::kMaxPrecision)
        throw ConfigError("--trunc must be between 2 and " + std::to_string(Series::kMaxPrecision));
    if (cfg.format != "json" && cfg.format != "text")
        throw ConfigError("--format must be json or text");
    std::shared_ptr<const RootDatum> R;
    if (!cfg.cartan_file.empty()) {
        R = io::load_datum_file(cfg.cartan_file);
    } else {
        try {
            R = RootDatum::named(cfg.type);
        } catch (const std::invalid_argument &e) {
            throw ConfigError(e.what());
        }
    }
    if (R->rank() > key::kMaxVars)
        throw ConfigError("rank above 6 is not supported");
    FormalGroupLaw F;
    if (!cfg.fgl_file.empty())
        F = io::load_fgl_file(cfg.fgl_file);
    else if (cfg.fgl == "additive")
        F = FormalGroupLaw::additive();
    else if (cfg.fgl == "multiplicative")
        F = FormalGroupLaw::multiplicative();
    else
        throw ConfigError("--fgl must be additive or multiplicative (use --fgl-file for a generic law)");
    job.ring = std::make_shared<FormalGroupAlgebra>(R, F, cfg.precision);
    job.seq = parse_int_list(cfg.seq, "sequence");
    for (int i : job.seq)
        if (i < 1 || i > R->rank())
            throw ConfigError("sequence index " + std::to_string(i) + " out of range for " + R->name());
    if (job.seq.size() > 16)
        throw ConfigError("sequence longer than 16 is not supported");
    return job;
}

std::string fgl_name(const Job &job)
{
    return job.cfg.fgl_file.empty() ? job.cfg.fgl : "generic:" + job.cfg.fgl_file;
}

json header(const Job &job)
{
    return json{{"group", job.datum().name()},
                {"fgl", fgl_name(job)},
                {"precision", job.ring->precision()},
                {"seq", job.seq}};
}

// Subset labels as 0/1 strings; "{}" for the empty sequence.
std::string label(Subset L, int l) { return l == 0 ? "{}" : L.label(l); }

std::string eta_monomial(Subset L)
{
    if (L.empty())
        return "1";
    std::string s;
    for (int j : L.elements())
        s += (s.empty() ? "" : "*") + std::string("eta_") + std::to_string(j);
    return s;
}

std::string with_factor(const std::string &coef, const std::string &basis)
{
    if (basis == "1")
        return coef;
    if (coef == "1")
        return basis;
    if (coef == "-1")
        return "-" + basis;
    return coef + "*" + basis;
}

std::string linear_combination(const std::vector<std::pair<std::string, std::string>> &terms)
{
    if (terms.empty())
        return "0";
    std::string s;
    for (const auto &[c, b] : terms) {
        std::string t = with_factor(c, b);
        if (s.empty())
            s = t;
        else if (t[0] == '-')
            s += " - " + t.substr(1);
        else
            s += " + " + t;
    }
    return s;
}

std::string seq_text(const std::vector<int> &I)
{
    std::string s = "(";
    for (std::size_t k = 0; k < I.size(); ++k)
        s += (k ? "," : "") + std::to_string(I[k]);
    return s + ")";
}

std::string word_text(const WeylElement &w)
{
    if (w.word().empty())
        return "e";
    std::string s;
    for (int i : w.word())
        s += "s" + std::to_string(i);
    return s;
}

std::string gkm_text(const Job &job, const GkmElement &g)
{
    const int l = static_cast<int>(job.seq.size());
    std::vector<std::pair<std::string, std::string>> terms;
    for (std::uint32_t b = 0; b < g.size(); ++b)
        if (!g.values[b].is_zero())
            terms.emplace_back(render_series(*job.ring, g.values[b]), "f_" + label(Subset{b}, l));
    return linear_combination(terms);
}

std::string eta_text(const Job &job, const EtaVector &v)
{
    std::vector<std::pair<std::string, std::string>> terms;
    for (Subset L : subsets_by_cardinality(static_cast<int>(job.seq.size())))
        if (!v[L].is_zero())
            terms.emplace_back(render_series(*job.ring, v[L]), eta_monomial(L));
    return linear_combination(terms);
}

int cmd_roots(const Job &job, std::ostream &out)
{
    const RootDatum &R = job.datum();
    const std::size_t order = enumerate_weyl(R).size();
    if (job.text()) {
        out << R.name() << ": rank " << R.rank() << ", " << R.positive_roots().size() << " positive roots, |W| = "
            << order << "\n";
        out << "positive roots (weight coordinates):\n";
        for (const auto &r : R.positive_roots())
            out << "  " << weight_label(R, r) << " = " << r << "\n";
        return kExitOk;
    }
    json pos = json::array();
    for (const auto &r : R.positive_roots())
        pos.push_back(json{{"weight", r.coords}, {"root_coords", R.root_coordinates(r)}, {"label", weight_label(R, r)}});
    json simple = json::array();
    for (const auto &r : R.simple_roots())
        simple.push_back(r.coords);
    out << json{{"group", R.name()},
                {"rank", R.rank()},
                {"cartan", R.cartan()},
                {"simple_roots", simple},
                {"positive_roots", pos},
                {"weyl_order", order}}
               .dump(2)
        << "\n";
    return kExitOk;
}

int cmd_restrict(const Job &job, std::ostream &out)
{
    BottSamelson X(job.ring, job.seq);
    const int l = X.length();
    std::vector<Subset> rows;
    if (job.cfg.subset_given)
        rows.push_back(job.subset());
    else
        rows = subsets_by_cardinality(l);
    if (job.text()) {
        for (Subset L : rows)
            out << "j*(eta_" << label(L, l) << ") = " << gkm_text(job, X.restrict_eta(L)) << "\n";
        return kExitOk;
    }
    auto row_json = [&](Subset L) {
        json d = io::to_json(io::SubsetDocument{job.seq, "fixed", X.restrict_eta(L).values});
        d["row"] = L.bits;
        return d;
    };
    json doc;
    if (job.cfg.subset_given) {
        doc = row_json(rows[0]);
        doc["group"] = job.datum().name();
        doc["fgl"] = fgl_name(job);
        doc["precision"] = job.ring->precision();
    } else {
        doc = header(job);
        json order = json::array(), arr = json::array();
        for (Subset L : rows) {
            order.push_back(L.bits);
            arr.push_back(row_json(L));
        }
        doc["order"] = order;
        doc["rows"] = arr;
    }
    out << doc.dump(2) << "\n";
    return kExitOk;
}

int cmd_relations(const Job &job, std::ostream &out)
{
    BottSamelson X(job.ring, job.seq);
    json rel = json::array();
    for (int j = 1; j <= X.length(); ++j) {
        EtaVector q = X.quadratic_relation(j);
        if (job.text())
            out << "eta_" << j << "^2 = " << eta_text(job, q) << "\n";
        else
            rel.push_back(json{{"j", j}, {"eta", io::to_json(io::SubsetDocument{job.seq, "eta", q.coeffs})}});
    }
    if (!job.text()) {
        json doc = header(job);
        doc["relations"] = rel;
        out << doc.dump(2) << "\n";
    }
    return kExitOk;
}

void wfunction_text(const Job &job, const FlagVariety &G, const WFunction &f, std::ostream &out)
{
    for (std::size_t k = 0; k < G.size(); ++k) {
        const auto &v = f.values[k];
        out << "  " << word_text(G.elements()[k]) << ": " << render_series(*job.ring, v.num);
        for (const auto &g : v.den)
            out << " / x(" << weight_label(job.datum(), g) << ")";
        out << "\n";
    }
}

int cmd_pushforward(const Job &job, std::ostream &out)
{
    FlagVariety G(job.ring);
    const Subset L = job.cfg.subset_given ? job.subset() : Subset{};
    const int l = static_cast<int>(job.seq.size());
    WFunction f = G.pushforward_eta(job.seq, L);
    json agreement;
    bool ok = true;
    if (job.cfg.verify) {
        auto sub = subsequence(job.seq, L.complement(l));
        bool direct = agree(f, G.bott_class_direct(sub));
        bool folded = agree(f, G.bott_samelson_class(sub));
        bool lemma = agree(f, G.pushforward_via_lemma(job.seq, L));
        ok = direct && folded && lemma;
        agreement = json{{"bott_class_direct", direct}, {"bott_samelson_class", folded}, {"via_lemma", lemma}};
    }
    if (job.text()) {
        out << "q_*(eta_" << label(L, l) << ") for I = " << seq_text(job.seq) << " in " << job.datum().name()
            << (f.integral() ? " (integral)" : " (NOT integral)") << ":\n";
        wfunction_text(job, G, f, out);
        if (job.cfg.verify)
            out << "agreement: " << (ok ? "confirmed" : "FAILED") << "\n";
    } else {
        json doc = header(job);
        doc["subset"] = L.bits;
        doc["integral"] = f.integral();
        doc["function"] = io::to_json(G, f);
        if (job.cfg.verify)
            doc["agreement"] = agreement;
        out << doc.dump(2) << "\n";
    }
    return ok ? kExitOk : kExitMath;
}

bool distinct_letters(const std::vector<int> &I)
{
    std::set<int> s(I.begin(), I.end());
    return s.size() == I.size();
}

int cmd_gkm(Job job, std::ostream &out)
{
    if (job.cfg.in.empty())
        throw ConfigError("gkm needs --in <file>");
    io::SubsetDocument d = io::subset_document_from_json(io::read_json_file(job.cfg.in));
    for (int i : d.seq)
        if (i < 1 || i > job.datum().rank())
            throw ConfigError("sequence index out of range in input file");
    job.seq = d.seq;
    BottSamelson X(job.ring, job.seq);
    for (const auto &s : d.entries)
        if (s.nvars() != job.datum().rank())
            throw ConfigError("input series have the wrong number of variables");
    std::vector<Series> vals;
    for (const auto &s : d.entries)
        vals.push_back(s.truncated(std::min(s.precision(), job.ring->precision())));
    GkmElement g = d.basis == "eta" ? X.eta_to_gkm(EtaVector{vals}) : GkmElement{vals};

    GkmCheckResult res = X.gkm_check(g);
    json doc = header(job);
    doc["gkm"] = res.ok;
    const int l = X.length();
    int code = kExitOk;
    std::string text;
    if (!res.ok) {
        doc["witness"] = json{{"l1", res.l1.bits}, {"l2", res.l2.bits}, {"k", res.k},
                              {"monomial", res.monomial}, {"beta_power", res.beta_power}};
        text = "GKM condition fails at L1 = " + label(res.l1, l) + ", L2 = " + label(res.l2, l) +
               ", k = " + std::to_string(res.k) + "\n";
        code = kExitMath;
    } else {
        text = "GKM condition holds\n";
        try {
            EtaVector v = X.gkm_to_eta(g);
            doc["reconstruction"] = "exact";
            doc["eta"] = io::to_json(io::SubsetDocument{job.seq, "eta", v.coeffs});
            text += "eta expansion: " + eta_text(job, v) + "\n";
        } catch (const NotDivisible &e) {
            doc["reconstruction"] = std::string("failed: ") + e.what();
            text += std::string("reconstruction failed: ") + e.what() + "\n";
            // Only distinct letters are covered by the reconstruction theorem.
            if (distinct_letters(job.seq))
                code = kExitMath;
        }
    }
    if (job.text())
        out << text;
    else
        out << doc.dump(2) << "\n";
    return code;
}

int cmd_chevalley(const Job &job, std::ostream &out)
{
    FlagVariety G(job.ring);
    const RootDatum &R = job.datum();
    std::vector<int> w = job.cfg.weight.empty() ? std::vector<int>{} : parse_int_list(job.cfg.weight, "weight");
    if (w.empty()) {
        w.assign(R.rank(), 0);
        w[0] = 1;
    }
    if (static_cast<int>(w.size()) != R.rank())
        throw ConfigError("--weight needs " + std::to_string(R.rank()) + " coordinates");
    const Series u = job.ring->x(LatticeVector(w));
    auto coeffs = G.chevalley_expand(job.seq, u);
    auto check = G.chevalley_check(job.seq, u);
    if (job.text()) {
        const int l = static_cast<int>(job.seq.size());
        std::vector<std::pair<std::string, std::string>> terms;
        for (Subset L : subsets_by_cardinality(l))
            if (!coeffs[L.bits].is_zero())
                terms.emplace_back(render_series(*job.ring, coeffs[L.bits]),
                                   "zeta_" + seq_text(subsequence(job.seq, L.complement(l))));
        out << "c(x_" << LatticeVector(w) << ") * zeta_" << seq_text(job.seq) << " = " << linear_combination(terms)
            << "\n";
        out << "pointwise check on W: " << (check.ok ? "holds" : "FAILS") << " (precision " << check.precision
            << ")\n";
    } else {
        json doc = header(job);
        doc["weight"] = w;
        doc["coefficients"] = io::to_json(io::SubsetDocument{job.seq, "eta", coeffs});
        doc["holds"] = check.ok;
        doc["compared_precision"] = check.precision;
        out << doc.dump(2) << "\n";
    }
    return check.ok ? kExitOk : kExitMath;
}

int cmd_verify(const Job &job, std::ostream &out)
{
    VerifyOptions opt;
    opt.seed = job.cfg.seed;
    opt.random_cases = job.cfg.cases;
    if (!job.seq.empty())
        opt.sequences = {job.seq};
    auto results = run_property_suite(job.ring, opt);
    bool fail = false, prec = false;
    for (const auto &r : results) {
        fail |= r.status == CheckStatus::fail;
        prec |= r.status == CheckStatus::precision;
    }
    if (job.text()) {
        out << "property suite: " << job.datum().name() << ", " << fgl_name(job) << ", N = " << job.ring->precision()
            << ", seed " << job.cfg.seed << "\n";
        for (const auto &r : results) {
            out << "  [" << to_string(r.status) << "] " << r.name << " (" << r.cases << " cases)";
            if (!r.detail.empty())
                out << ": " << r.detail;
            out << "\n";
        }
    } else {
        json arr = json::array();
        for (const auto &r : results)
            arr.push_back(json{{"check", r.name}, {"status", to_string(r.status)}, {"cases", r.cases},
                               {"detail", r.detail}});
        json doc = header(job);
        doc["seed"] = job.cfg.seed;
        doc["results"] = arr;
        out << doc.dump(2) << "\n";
    }
    return fail ? kExitMath : prec ? kExitPrecision : kExitOk;
}

} // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
    CLI::App app{"Equivariant oriented cohomology of Bott-Samelson varieties"};
    app.require_subcommand(1);
    JobConfig cfg;
    app.add_option("--type", cfg.type, "Built-in root system: A1, A2, A3, B2, C2, G2");
    app.add_option("--cartan-file", cfg.cartan_file, "JSON file {\"cartan\": [[...]], \"name\": ...}");
    app.add_option("--fgl", cfg.fgl, "additive or multiplicative");
    app.add_option("--fgl-file", cfg.fgl_file, "JSON file with a generic formal group law");
    app.add_option("--trunc", cfg.precision, "Truncation degree N");
    app.add_option("--seq", cfg.seq, "Sequence of simple reflections, e.g. 1,2,1");
    auto *subset_opt = app.add_option("--subset", cfg.subset, "Subset of [l]: comma list, \"\" or full");
    app.add_option("--format", cfg.format, "json or text");
    app.add_option("--seed", cfg.seed, "Seed for the random property suites");
    app.add_option("--out", cfg.out, "Write the report to a file");
    app.add_option("--in", cfg.in, "Input document for gkm");
    app.add_option("--weight", cfg.weight, "Weight lambda for chevalley (u = x_lambda), default omega_1");
    app.add_option("--cases", cfg.cases, "Random cases per property in verify");
    app.add_flag("--verify", cfg.verify, "pushforward: also compare the other evaluation paths");
    for (const char *name : {"roots", "restrict", "relations", "pushforward", "gkm", "chevalley", "verify"})
        app.add_subcommand(name)->fallthrough();

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << "\n";
        return kExitConfig;
    }
    cfg.subset_given = subset_opt->count() > 0;

    std::ofstream file;
    std::ostringstream buffer;
    int code = kExitOk;
    try {
        Job job = make_job(cfg);
        const std::string cmd = app.get_subcommands().front()->get_name();
        if (cmd == "roots")
            code = cmd_roots(job, buffer);
        else if (cmd == "restrict")
            code = cmd_restrict(job, buffer);
        else if (cmd == "relations")
            code = cmd_relations(job, buffer);
        else if (cmd == "pushforward")
            code = cmd_pushforward(job, buffer);
        else if (cmd == "gkm")
            code = cmd_gkm(job, buffer);
        else if (cmd == "chevalley")
            code = cmd_chevalley(job, buffer);
        else
            code = cmd_verify(job, buffer);
    } catch (const ConfigError &e) {
        err << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const PrecisionExhausted &e) {
        err << "precision exhausted: " << e.what() << "\n";
        return kExitPrecision;
    } catch (const MathError &e) {
        err << "mathematical check failed: " << e.what() << "\n";
        return kExitMath;
    } catch (const std::invalid_argument &e) {
        err << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::out_of_range &e) {
        err << "config error: " << e.what() << "\n";
        return kExitConfig;
    }
    if (cfg.out.empty()) {
        out << buffer.str();
    } else {
        file.open(cfg.out);
        if (!file) {
            err << "config error: cannot write " << cfg.out << "\n";
            return kExitConfig;
        }
        file << buffer.str();
    }
    return code;
}

} // namespace bsoc
