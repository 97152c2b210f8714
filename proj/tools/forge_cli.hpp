#pragma once

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <drinfeld/drinfeld.hpp>

namespace drinfeld::cli {

enum ExitCode : int { ok = 0, failed = 1, bad_args = 2, write_failed = 3 };

class usage_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class write_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string series;
    int rank = 0;
    std::string spec = "canonical";
    std::string checks;
    int cutoff = 6;
    bool json = false;
    unsigned jobs = 0;
    std::string out;
    std::string what = "brackets";
    std::string format = "json";
    std::string sub = "splus";
    std::string config;
    bool spec_given = false;
};

/// Structural checks first, then derived ones.
inline const std::vector<std::string>& check_order()
{
    static const std::vector<std::string> names = {
        "jacobi",      "closure",  "pairing", "reconstruction", "compatibility", "selfdual",
        "forminv",     "delta-agree", "cocycle", "cojacobi",    "subbialg",      "coboundary",
        "cybe",        "twist",    "chain",   "rep",            "casimir"};
    return names;
}

/// Comma list → known names in canonical order; empty selects all.
inline std::vector<std::string> parse_checks(const std::string& list)
{
    const auto& order = check_order();
    if (list.empty()) return order;
    std::vector<std::string> wanted;
    std::stringstream ss(list);
    std::string name;
    while (std::getline(ss, name, ',')) {
        if (name.empty()) continue;
        if (std::find(order.begin(), order.end(), name) == order.end())
            throw usage_error("unknown check '" + name + "'");
        wanted.push_back(name);
    }
    std::vector<std::string> out;
    for (const auto& n : order)
        if (std::find(wanted.begin(), wanted.end(), n) != wanted.end()) out.push_back(n);
    return out;
}

struct Context {
    Context(Series s, int n, SplittingSpec sp, int cut, std::string sb, std::shared_ptr<const ManinTriple> t)
        : series(s), rank(n), spec(std::move(sp)), cutoff(cut), sub(std::move(sb)), triple(std::move(t))
    {
    }

    Series series;
    int rank;
    SplittingSpec spec;
    int cutoff;
    std::string sub;
    std::shared_ptr<const ManinTriple> triple;

    bool canonical() const { return spec.mode == SplittingSpec::Mode::canonical; }

    const CocommutatorTable& delta() const
    {
        if (!delta_) delta_ = cocommutator_from_structure(*triple);
        return *delta_;
    }

    const RMatrix& r() const
    {
        if (!r_) r_ = build_r_matrix(*triple);
        return *r_;
    }

private:
    mutable std::optional<CocommutatorTable> delta_;
    mutable std::optional<RMatrix> r_;
};

inline Context make_context(const Options& o)
{
    Series s;
    try {
        s = parse_series(o.series);
    } catch (const std::invalid_argument& e) {
        throw usage_error(e.what());
    }
    validate_rank(s, o.rank);
    const SplittingSpec spec = SplittingSpec::parse(o.spec).resolved(cartan_count(s, o.rank));
    spec.validate(cartan_count(s, o.rank));
    if (o.cutoff < 4) throw usage_error("--cutoff must be at least 4");
    return Context(s, o.rank, spec, o.cutoff, o.sub, cached_split(s, o.rank, spec));
}

inline void require_canonical(const Context& c, const std::string& check)
{
    if (!c.canonical()) throw usage_error("check '" + check + "' is defined for the canonical spec only");
}

inline std::vector<Element> sub_span(const Context& c)
{
    const LieAlgebra& alg = c.triple->original;
    if (c.sub == "splus") return half_span(*c.triple, true);
    if (c.sub == "sminus") return half_span(*c.triple, false);
    if (c.sub == "An") {
        if (c.series != Series::A) throw usage_error("--sub An needs the A series");
        return a_series_span(alg);
    }
    if (c.sub == "Dn") {
        if (c.series != Series::B) throw usage_error("--sub Dn needs the B series");
        return d_series_span(alg);
    }
    throw usage_error("unknown --sub '" + c.sub + "' (expected An, Dn, splus or sminus)");
}

template <class T>
Report rep_and_casimir(const MatrixRep<T>& rep, const Context& c, bool casimir)
{
    const LieAlgebra& alg = c.triple->original;
    if (!casimir) return verify_rep_homomorphism(rep, alg);
    Report r{"casimir", 0, {}};
    r.merge(casimir_check(rep, drinfeld_casimir(*c.triple), alg));
    r.merge(casimir_check(rep, cartan_weyl_casimir(c.series, c.rank), alg));
    return r;
}

inline Report run_reps(const Context& c, bool casimir)
{
    Report r{casimir ? "casimir" : "rep", 0, {}};
    if (c.series != Series::C) r.merge(rep_and_casimir(fermionic_rep(c.series, c.rank), c, casimir));
    if (c.series == Series::A || c.series == Series::C)
        r.merge(rep_and_casimir(bosonic_rep(c.series, c.rank, c.cutoff), c, casimir));
    return r;
}

inline Report run_check(const std::string& name, const Context& c)
{
    const ManinTriple& t = *c.triple;
    Report r;
    if (name == "jacobi") r = verify_jacobi(t.original);
    else if (name == "closure") r = verify_closure(t);
    else if (name == "pairing") r = verify_pairing(t);
    else if (name == "reconstruction") r = verify_reconstruction(t);
    else if (name == "compatibility") r = verify_compatibility(t);
    else if (name == "selfdual") r = verify_self_duality(t);
    else if (name == "forminv") r = verify_form_invariance(t);
    else if (name == "delta-agree") {
        require_canonical(c, name);
        r = verify_delta_agreement(c.delta(), cocommutator_explicit(t.original));
    } else if (name == "cocycle") r = verify_cocycle(t.original, c.delta());
    else if (name == "cojacobi") r = verify_cojacobi(c.delta());
    else if (name == "subbialg") r = verify_subbialgebra(t.original, c.delta(), sub_span(c));
    else if (name == "coboundary") r = verify_coboundary(t.original, c.delta(), c.r());
    else if (name == "cybe") r = verify_cybe(c.r(), t.original);
    else if (name == "twist") {
        require_canonical(c, name);
        r = Report{"twist", 0, {}};
        if (c.series == Series::A) r.merge(verify_twist_triviality(t.original, c.r(), TwistVariant::identified));
        r.merge(verify_twist_triviality(t.original, c.r(), TwistVariant::zeroed));
    } else if (name == "chain") {
        require_canonical(c, name);
        r = verify_chain_embedding(c.series, c.rank).combined("chain");
    } else if (name == "rep") r = run_reps(c, false);
    else if (name == "casimir") r = run_reps(c, true);
    r.check = name;
    return r;
}

inline void write_output(const std::string& path, const std::string& content, std::ostream& out)
{
    if (path.empty()) {
        out << content;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw write_error("cannot open '" + path + "' for writing");
    f << content;
    f.close();
    if (!f) throw write_error("failed writing '" + path + "'");
}

inline int cmd_build(const Options& o, std::ostream& out)
{
    const Context c = make_context(o);
    Json j = structure_json(build_series(c.series, c.rank));
    if (o.spec_given) j["rotated"] = rotated_json(*c.triple);
    write_output(o.out, j.dump(2) + "\n", out);
    return ok;
}

/// Checks that read the explicit formulas or the canonical chain; a mixed
/// spec leaves them out of the default suite.
inline bool canonical_only(const std::string& name)
{
    return name == "delta-agree" || name == "twist" || name == "chain";
}

inline int cmd_verify(const Options& o, std::ostream& out)
{
    auto names = parse_checks(o.checks);
    const Context c = make_context(o);
    if (o.checks.empty() && !c.canonical()) std::erase_if(names, canonical_only);
    if (std::find(names.begin(), names.end(), "subbialg") != names.end()) (void)sub_span(c);
    for (const auto& n : names)
        if (!c.canonical() && canonical_only(n)) require_canonical(c, n);

    bool all = true;
    Json results = Json::array();
    for (const auto& n : names) {
        const Report r = run_check(n, c);
        all = all && r.pass();
        if (!o.json) out << r.summary() << '\n' << std::flush;
        results.push_back(to_json(r));
    }
    const Json doc = {{"series", std::string(1, to_char(c.series))},
                      {"rank", c.rank},
                      {"spec", to_json(c.spec)},
                      {"results", results},
                      {"pass", all}};
    if (o.json) out << doc.dump(2) << '\n';
    if (!o.out.empty()) write_output(o.out, doc.dump(2) + "\n", out);
    return all ? ok : failed;
}

inline std::string file_stem(const GeneratorId& g)
{
    std::string s = g.label();
    std::replace(s.begin(), s.end(), ',', '_');
    s.erase(std::remove(s.begin(), s.end(), '^'), s.end());
    return s;
}

template <class T>
void write_matrices(const MatrixRep<T>& rep, const std::string& dir)
{
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) throw write_error("cannot create directory '" + dir + "'");
    std::ostringstream null;
    for (const auto& [g, m] : rep.gens) write_output((std::filesystem::path(dir) / (file_stem(g) + ".txt")).string(), dump_matrix(m), null);
}

inline int cmd_export(const Options& o, std::ostream& out)
{
    const Context c = make_context(o);
    if (o.format != "json" && o.format != "text") throw usage_error("--format must be json or text");
    const bool js = o.format == "json";
    const ManinTriple& t = *c.triple;
    std::string body;
    if (o.what == "brackets") {
        body = js ? structure_json(t.original).dump(2) + "\n" : structure_text(t.original);
    } else if (o.what == "delta") {
        body = js ? cocommutator_json(c.delta()).dump(2) + "\n" : cocommutator_text(c.delta());
    } else if (o.what == "rmatrix") {
        body = js ? rmatrix_json(c.r()).dump(2) + "\n" : rmatrix_text(c.r());
    } else if (o.what == "pairing") {
        body = js ? pairing_json(t).dump(2) + "\n" : pairing_text(t);
    } else if (o.what == "discrepancies") {
        require_canonical(c, "discrepancies");
        const DeltaDiscrepancy d = delta_discrepancy(c.series, c.rank);
        std::vector<std::pair<std::string, Report>> reads;
        if (c.series == Series::B) reads.emplace_back(t.original.name(), verify_reconstruction(t));
        body = discrepancies_markdown({d}, reads);
    } else if (o.what == "matrices") {
        if (o.out.empty()) throw usage_error("--what matrices needs --out DIR");
        if (c.series == Series::C)
            write_matrices(bosonic_rep(c.series, c.rank, c.cutoff), o.out);
        else
            write_matrices(fermionic_rep(c.series, c.rank), o.out);
        return ok;
    } else {
        throw usage_error("unknown --what '" + o.what + "'");
    }
    write_output(o.out, body, out);
    return ok;
}

/// Fills options not given on the command line from a JSON object whose
/// keys are the long flag names.
inline void apply_config(CLI::App& sub, Options& o)
{
    if (o.config.empty()) return;
    std::ifstream f(o.config);
    if (!f) throw usage_error("cannot read config '" + o.config + "'");
    Json j;
    try {
        j = Json::parse(f);
    } catch (const Json::parse_error& e) {
        throw usage_error(std::string("config is not valid JSON: ") + e.what());
    }
    if (!j.is_object()) throw usage_error("config must be a JSON object");
    auto unset = [&](const char* flag) {
        auto* opt = sub.get_option_no_throw(std::string("--") + flag);
        return opt == nullptr || opt->count() == 0;
    };
    try {
        for (const auto& [key, v] : j.items()) {
            if (!unset(key.c_str())) continue;
            if (key == "series") o.series = v.get<std::string>();
            else if (key == "rank") o.rank = v.get<int>();
            else if (key == "spec") {
                o.spec = v.is_object() ? spec_from_json(v).key() : v.get<std::string>();
                o.spec_given = true;
            }
            else if (key == "checks") {
                if (v.is_array()) {
                    o.checks.clear();
                    for (const auto& x : v) o.checks += (o.checks.empty() ? "" : ",") + x.get<std::string>();
                } else {
                    o.checks = v.get<std::string>();
                }
            } else if (key == "cutoff") o.cutoff = v.get<int>();
            else if (key == "json") o.json = v.get<bool>();
            else if (key == "jobs") o.jobs = v.get<unsigned>();
            else if (key == "out") o.out = v.get<std::string>();
            else if (key == "what") o.what = v.get<std::string>();
            else if (key == "format") o.format = v.get<std::string>();
            else if (key == "sub") o.sub = v.get<std::string>();
            else throw usage_error("unknown config key '" + key + "'");
        }
    } catch (const Json::exception& e) {
        throw usage_error(std::string("bad config value: ") + e.what());
    }
}

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Classical Lie algebras as Drinfeld doubles: build, verify and export exact tables.",
                 "drinfeld-forge"};
    app.require_subcommand(1);
    Options o;

    auto common = [&](CLI::App* s) {
        s->add_option("--series", o.series, "A, B, C or D");
        s->add_option("--rank", o.rank, "rank n");
        s->add_option("--spec", o.spec, "canonical | mixed:pairs=i-j,...;central=k,...");
        s->add_option("--cutoff", o.cutoff, "bosonic total-occupation cutoff (>= 4)");
        s->add_option("--jobs", o.jobs, "worker threads (0 = all cores)");
        s->add_option("--out", o.out, "output path");
        s->add_option("--config", o.config, "JSON file with flag values");
    };
    CLI::App* build = app.add_subcommand("build", "write the structure table");
    CLI::App* verify = app.add_subcommand("verify", "run verification checks");
    CLI::App* exp = app.add_subcommand("export", "export tables");
    for (auto* s : {build, verify, exp}) common(s);
    verify->add_option("--checks", o.checks, "comma-separated check names (default: all)");
    verify->add_option("--sub", o.sub, "span for subbialg: An, Dn, splus, sminus");
    verify->add_flag("--json", o.json, "print the JSON report instead of summary lines");
    exp->add_option("--what", o.what, "brackets, delta, rmatrix, pairing, matrices, discrepancies");
    exp->add_option("--format", o.format, "json or text");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return bad_args;
    }

    CLI::App* chosen = build->parsed() ? build : verify->parsed() ? verify : exp;
    o.spec_given = chosen->get_option("--spec")->count() > 0;
    try {
        apply_config(*chosen, o);
        if (o.series.empty()) throw usage_error("--series is required");
        if (o.rank == 0) throw usage_error("--rank is required");
        set_jobs(o.jobs);
        if (chosen == build) return cmd_build(o, out);
        if (chosen == verify) return cmd_verify(o, out);
        return cmd_export(o, out);
    } catch (const write_error& e) {
        err << "error: " << e.what() << '\n';
        return write_failed;
    } catch (const std::invalid_argument& e) {
        // usage_error, rank_error, spec_error, not_subalgebra_error
        err << "error: " << e.what() << '\n';
        return bad_args;
    }
}

}  // namespace drinfeld::cli
