#pragma once

#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "bialgebra.hpp"
#include "reps.hpp"

namespace drinfeld {

using Json = nlohmann::ordered_json;

inline Json to_json(const Scalar& s)
{
    const auto v = s.to_strings();
    return Json::array({v[0], v[1], v[2], v[3]});
}

inline Scalar scalar_from_json(const Json& j)
{
    if (!j.is_array() || j.size() != 4) throw std::invalid_argument("scalar must be a 4-array of rational strings");
    return Scalar::from_strings({j[0].get<std::string>(), j[1].get<std::string>(), j[2].get<std::string>(),
                                 j[3].get<std::string>()});
}

inline Json to_json(const Element& e)
{
    Json out = Json::array();
    for (const auto& [g, c] : e) out.push_back({{"gen", g.label()}, {"coeff", to_json(c)}});
    return out;
}

inline Json to_json(const SplittingSpec& s)
{
    Json pairs = Json::array();
    for (auto [i, j] : s.pairs) pairs.push_back({i, j});
    return {{"mode", s.mode == SplittingSpec::Mode::canonical ? "canonical" : "mixed"},
            {"pairs", pairs},
            {"central_set", s.central_set}};
}

inline SplittingSpec spec_from_json(const Json& j)
{
    const std::string mode = j.at("mode").get<std::string>();
    if (mode == "canonical") return SplittingSpec{};
    if (mode != "mixed") throw spec_error("unknown spec mode '" + mode + "'");
    std::vector<std::pair<int, int>> pairs;
    for (const auto& p : j.value("pairs", Json::array())) pairs.emplace_back(p.at(0).get<int>(), p.at(1).get<int>());
    return SplittingSpec::mixed(std::move(pairs), j.value("central_set", std::vector<int>{}));
}

inline Json to_json(const Report& r)
{
    Json v = Json::array();
    for (const auto& x : r.violations) {
        Json res = Json::array();
        for (const auto& [term, c] : x.residual) res.push_back({{"term", term}, {"coeff", to_json(c)}});
        Json item = {{"indices", x.indices}, {"residual", res}};
        if (x.magnitude != 0.0) item["magnitude"] = x.magnitude;
        v.push_back(std::move(item));
    }
    return {{"check", r.check}, {"pass", r.pass()}, {"checked", r.checked}, {"violations", v}};
}

/// {"series","rank","basis","brackets":[{"p","q","out"}]} with nonzero
/// brackets p < q in basis order.
inline Json structure_json(const LieAlgebra& alg)
{
    Json brackets = Json::array();
    for (Index p = 0; p < alg.dim(); ++p)
        for (Index q = p + 1; q < alg.dim(); ++q) {
            const Vec& v = alg.table().at(p, q);
            if (v.is_zero()) continue;
            brackets.push_back(
                {{"p", alg.generator(p).label()}, {"q", alg.generator(q).label()}, {"out", to_json(alg.to_element(v))}});
        }
    Json basis = Json::array();
    for (const auto& g : alg.basis()) basis.push_back(g.label());
    return {{"series", std::string(1, to_char(alg.series()))},
            {"rank", alg.rank()},
            {"basis", basis},
            {"brackets", brackets}};
}

inline std::string structure_text(const LieAlgebra& alg)
{
    std::ostringstream os;
    os << "# " << alg.name() << " dim " << alg.dim() << '\n';
    for (Index p = 0; p < alg.dim(); ++p)
        for (Index q = p + 1; q < alg.dim(); ++q) {
            const Vec& v = alg.table().at(p, q);
            if (v.is_zero()) continue;
            os << '[' << alg.generator(p).label() << ", " << alg.generator(q).label()
               << "] = " << to_string(alg.to_element(v)) << '\n';
        }
    return os.str();
}

/// Rotation definitions of the rotated generators in terms of the
/// oscillator basis.
inline Json rotation_json(const ManinTriple& t)
{
    Json out = Json::array();
    for (Index k = 0; k < t.rotated.dim(); ++k) {
        const GeneratorId& g = t.rotated.generator(k);
        if (!g.is_cartan()) continue;
        out.push_back({{"gen", g.label()}, {"value", to_json(t.original_of(k))}});
    }
    return out;
}

/// Rotated-basis table of a triple rebuilt by crossed_brackets.
inline Json rotated_json(const ManinTriple& t)
{
    const LieAlgebra crossed(t.original.series(), t.original.rank(), t.rotated.basis(), crossed_brackets(t));
    Json j = structure_json(crossed);
    j["spec"] = to_json(t.spec);
    j["rotation"] = rotation_json(t);
    return j;
}

inline Json pairing_json(const ManinTriple& t)
{
    Json plus = Json::array(), minus = Json::array(), rows = Json::array();
    for (Index p = 0; p < t.half(); ++p) {
        plus.push_back(t.s_plus(p).label());
        minus.push_back(t.s_minus(p).label());
        Json row = Json::array();
        for (Index q = 0; q < t.half(); ++q) row.push_back(to_json(t.pairing(p, q)));
        rows.push_back(std::move(row));
    }
    return {{"spec", to_json(t.spec)}, {"s_plus", plus}, {"s_minus", minus}, {"rotation", rotation_json(t)},
            {"matrix", rows}};
}

inline std::string pairing_text(const ManinTriple& t)
{
    std::ostringstream os;
    os << "# " << t.original.name() << ' ' << t.spec.key() << '\n';
    for (Index k = 0; k < t.rotated.dim(); ++k)
        if (t.rotated.generator(k).is_cartan())
            os << t.rotated.generator(k).label() << " = " << to_string(t.original_of(k)) << '\n';
    for (Index p = 0; p < t.half(); ++p)
        for (Index q = 0; q < t.half(); ++q)
            if (!t.pairing(p, q).is_zero())
                os << '<' << t.s_minus(p).label() << ", " << t.s_plus(q).label() << "> = " << t.pairing(p, q).to_string()
                   << '\n';
    return os.str();
}

inline Json wedge_json(const std::vector<GeneratorId>& basis, const Tensor2& t)
{
    Json out = Json::array();
    for (const auto& [ab, c] : wedge_coefficients(t))
        out.push_back({{"a", basis[ab[0]].label()}, {"b", basis[ab[1]].label()}, {"coeff", to_json(c)}});
    return out;
}

inline std::string wedge_text(const std::vector<GeneratorId>& basis, const Tensor2& t)
{
    std::string out;
    for (const auto& [ab, c] : wedge_coefficients(t)) {
        if (!out.empty()) out += " + ";
        out += (c.is_one() ? "" : "(" + c.to_string() + ")*") + basis[ab[0]].label() + "∧" + basis[ab[1]].label();
    }
    return out.empty() ? "0" : out;
}

inline Json cocommutator_json(const CocommutatorTable& d)
{
    Json out = Json::array();
    for (Index k = 0; k < d.dim(); ++k) out.push_back({{"gen", d.basis[k].label()}, {"wedge", wedge_json(d.basis, d.delta[k])}});
    return out;
}

inline std::string cocommutator_text(const CocommutatorTable& d)
{
    std::ostringstream os;
    for (Index k = 0; k < d.dim(); ++k) os << "δ(" << d.basis[k].label() << ") = " << wedge_text(d.basis, d.delta[k]) << '\n';
    return os.str();
}

inline Json rmatrix_json(const RMatrix& r)
{
    Json wedge = Json::array();
    for (const auto& [part, t] : {std::pair<const char*, const Tensor2*>{"r_s", &r.r_s}, {"r_t", &r.r_t}})
        for (auto item : wedge_json(r.basis, *t)) {
            Json tagged = {{"part", part}};
            tagged.update(item);
            wedge.push_back(std::move(tagged));
        }
    Json nonskew = Json::array();
    for (const auto& [ab, c] : r.nonskew)
        nonskew.push_back({{"a", r.basis[ab[0]].label()}, {"b", r.basis[ab[1]].label()}, {"coeff", to_json(c)}});
    return {{"wedge", wedge}, {"nonskew", nonskew}};
}

inline std::string rmatrix_text(const RMatrix& r)
{
    return "r_s = " + wedge_text(r.basis, r.r_s) + "\nr_t = " + wedge_text(r.basis, r.r_t) + "\n";
}

/// Markdown report of the printed-formula discrepancies found on a grid.
inline std::string discrepancies_markdown(const std::vector<DeltaDiscrepancy>& items,
                                          const std::vector<std::pair<std::string, Report>>& pairing_reads)
{
    std::ostringstream os;
    os << "# DISCREPANCIES\n\n"
       << "Authoritative side: the cocommutator derived from the verified Manin triple.\n"
       << "Compared side: the explicit per-series cocommutator formulas as printed.\n"
       << "Each residual entry is (printed − derived) as a wedge coefficient.\n\n";
    os << "| algebra | printed vs derived | corrected vs derived | printed table satisfies cocycle |\n"
       << "|---|---|---|---|\n";
    for (const auto& d : items)
        os << "| " << d.algebra << " | " << d.printed.violations.size() << " generator(s) differ | "
           << (d.corrected.pass() ? "exact match" : std::to_string(d.corrected.violations.size()) + " differ") << " | "
           << (d.printed_cocycle.pass() ? "yes" : "no (" + std::to_string(d.printed_cocycle.violations.size()) + " pairs)")
           << " |\n";
    os << "\n## Per-generator differences (printed − derived)\n";
    for (const auto& d : items) {
        if (d.printed.pass()) continue;
        os << "\n### " << d.algebra << "\n\n";
        for (const auto& v : d.printed.violations) {
            os << "- δ(" << v.indices.at(0) << "):";
            for (const auto& [term, c] : v.residual) os << " " << term << " → " << c.to_string() << ";";
            os << '\n';
        }
    }
    os << "\n## Identified corrections\n\n"
       << "- δ(Q_ii): the Cartan term wedges against Q_ii, not P_ii.\n"
       << "- δ(V_i): the root sum runs over k > i, i.e. Σ_{k>i} F_ki∧V_k.\n"
       << "- δ(P_ij), δ(Q_ij), δ(S_ij), δ(T_ij) for i < j: a second sum over k > j is missing,\n"
       << "  respectively Σ_{k>j} F_jk∧P_ik, Σ_{k>j} F_kj∧Q_ik, Σ_{k>j} F_jk∧S_ik, Σ_{k>j} F_kj∧T_ik.\n";
    os << "\n## B-series pairing symbols\n\n"
       << "The B-series pairing block uses y/Y for the root pair. Read as f/F, reconstruction gives:\n\n";
    for (const auto& [name, r] : pairing_reads) os << "- " << name << ": " << r.summary() << '\n';
    return os.str();
}

}  // namespace drinfeld
