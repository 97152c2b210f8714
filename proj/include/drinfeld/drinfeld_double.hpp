#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "algebra.hpp"

namespace drinfeld {

class spec_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class closure_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// How the Cartan-plus-center directions are distributed between s+ and s-.
///
/// canonical: every Cartan index k is rotated with its central partner,
///            (H_k ± i I_k)/√2.
/// mixed:     listed pairs (i,j) are rotated among themselves, (H_i ± i H_j)/√2,
///            and only the indices in central_set keep a central partner.
struct SplittingSpec {
    enum class Mode { canonical, mixed };

    Mode mode = Mode::canonical;
    std::vector<std::pair<int, int>> pairs;
    std::vector<int> central_set;

    static SplittingSpec canonical(int cartan)
    {
        SplittingSpec s;
        s.central_set.resize(static_cast<std::size_t>(cartan));
        std::iota(s.central_set.begin(), s.central_set.end(), 1);
        return s;
    }

    static SplittingSpec mixed(std::vector<std::pair<int, int>> pairs, std::vector<int> central)
    {
        SplittingSpec s;
        s.mode = Mode::mixed;
        s.pairs = std::move(pairs);
        s.central_set = std::move(central);
        std::sort(s.central_set.begin(), s.central_set.end());
        return s;
    }

    /// Parses "canonical" or "mixed:pairs=1-2,3-4;central=5,6". A canonical
    /// spec parsed without a rank has an empty central_set until resolved().
    static SplittingSpec parse(const std::string& text)
    {
        if (text == "canonical") return SplittingSpec{};
        const std::string head = "mixed:";
        if (text.rfind(head, 0) != 0) throw spec_error("unknown splitting spec '" + text + "'");
        SplittingSpec s;
        s.mode = Mode::mixed;
        std::stringstream body(text.substr(head.size()));
        std::string clause;
        auto to_int = [&](const std::string& v) {
            try {
                std::size_t used = 0;
                int x = std::stoi(v, &used);
                if (used != v.size()) throw spec_error("bad index '" + v + "' in spec '" + text + "'");
                return x;
            } catch (const std::logic_error&) {
                throw spec_error("bad index '" + v + "' in spec '" + text + "'");
            }
        };
        while (std::getline(body, clause, ';')) {
            if (clause.empty()) continue;
            const auto eq = clause.find('=');
            if (eq == std::string::npos) throw spec_error("malformed clause '" + clause + "'");
            const std::string name = clause.substr(0, eq);
            std::stringstream items(clause.substr(eq + 1));
            std::string item;
            while (std::getline(items, item, ',')) {
                if (item.empty()) continue;
                if (name == "pairs") {
                    const auto dash = item.find('-');
                    if (dash == std::string::npos) throw spec_error("pair '" + item + "' must look like i-j");
                    s.pairs.emplace_back(to_int(item.substr(0, dash)), to_int(item.substr(dash + 1)));
                } else if (name == "central") {
                    s.central_set.push_back(to_int(item));
                } else {
                    throw spec_error("unknown clause '" + name + "'");
                }
            }
        }
        std::sort(s.central_set.begin(), s.central_set.end());
        return s;
    }

    /// Fills the central set of a rank-free canonical spec.
    SplittingSpec resolved(int cartan) const
    {
        if (mode == Mode::canonical && central_set.empty()) return canonical(cartan);
        return *this;
    }

    /// Stable text form; also the cache key.
    std::string key() const
    {
        if (mode == Mode::canonical) return "canonical";
        std::string out = "mixed:pairs=";
        for (std::size_t k = 0; k < pairs.size(); ++k)
            out += (k ? "," : "") + std::to_string(pairs[k].first) + "-" + std::to_string(pairs[k].second);
        out += ";central=";
        for (std::size_t k = 0; k < central_set.size(); ++k) out += (k ? "," : "") + std::to_string(central_set[k]);
        return out;
    }

    void validate(int cartan) const
    {
        std::vector<int> seen;
        for (auto [i, j] : pairs) {
            if (i == j) throw spec_error("pair (" + std::to_string(i) + "," + std::to_string(j) + ") repeats an index");
            seen.push_back(i);
            seen.push_back(j);
        }
        seen.insert(seen.end(), central_set.begin(), central_set.end());
        std::sort(seen.begin(), seen.end());
        std::vector<int> all(static_cast<std::size_t>(cartan));
        std::iota(all.begin(), all.end(), 1);
        if (seen != all)
            throw spec_error("spec '" + key() + "' does not partition the Cartan indices 1.." + std::to_string(cartan));
        if (mode == Mode::canonical && !pairs.empty()) throw spec_error("canonical spec cannot carry pairs");
        if ((cartan - static_cast<int>(central_set.size())) % 2 != 0)
            throw spec_error("number of non-central Cartan indices must be even");
    }

    friend bool operator==(const SplittingSpec&, const SplittingSpec&) = default;
};

/// Change of coordinates between the oscillator basis and the rotated basis.
/// forward: rotated generator ↦ combination of original generators;
/// inverse: original generator ↦ combination of rotated generators.
/// Generators absent from a map are shared by both bases.
struct CartanRotation {
    std::map<GeneratorId, Element> forward;
    std::map<GeneratorId, Element> inverse;

    Element to_original(const Element& e) const { return apply(forward, e); }
    Element to_rotated(const Element& e) const { return apply(inverse, e); }

private:
    static Element apply(const std::map<GeneratorId, Element>& m, const Element& e)
    {
        Element out;
        for (const auto& [g, c] : e) {
            auto it = m.find(g);
            if (it == m.end())
                out.add(g, c);
            else
                out.add(it->second, c);
        }
        return out;
    }
};

inline CartanRotation cartan_rotation(const SplittingSpec& spec)
{
    const Scalar h = Scalar::inv_sqrt2();               // 1/√2
    const Scalar hi = Scalar(0, 0, 0, Rational(1, 2));  // i/√2
    const Scalar inv_i_sqrt2 = -hi;                     // 1/(i√2)
    CartanRotation rot;
    for (auto [i, j] : spec.pairs) {
        rot.forward[Xp(i, j)] = h * elem(H(i)) + hi * elem(H(j));
        rot.forward[xm(i, j)] = h * elem(H(i)) - hi * elem(H(j));
        rot.inverse[H(i)] = h * (elem(Xp(i, j)) + elem(xm(i, j)));
        rot.inverse[H(j)] = inv_i_sqrt2 * (elem(Xp(i, j)) - elem(xm(i, j)));
    }
    for (int k : spec.central_set) {
        rot.forward[Xp(k)] = h * elem(H(k)) + hi * elem(I(k));
        rot.forward[xm(k)] = h * elem(H(k)) - hi * elem(I(k));
        rot.inverse[H(k)] = h * (elem(Xp(k)) + elem(xm(k)));
        rot.inverse[I(k)] = inv_i_sqrt2 * (elem(Xp(k)) - elem(xm(k)));
    }
    return rot;
}

/// Canonical rotation X_j = (H_j + i I_j)/√2, x^j = (H_j − i I_j)/√2.
inline CartanRotation cartan_rotation(const LieAlgebra& alg)
{
    return cartan_rotation(SplittingSpec::canonical(cartan_count(alg.series(), alg.rank())));
}

/// (s+, s-, double) with the pairing between the matched halves.
/// The rotated basis is s+ followed by s-, so position p in s+ and position
/// half()+p in s- are partners.
struct ManinTriple {
    LieAlgebra original;  // g ⊕ t_m over the oscillator basis
    SplittingSpec spec;
    CartanRotation rotation;
    LieAlgebra rotated;  // the same algebra over s+ ++ s-
    StructureTable f;    // [Z_p, Z_q] = f^r_{pq} Z_r
    StructureTable c;    // [z^p, z^q] = c^{pq}_r z^r
    Matrix pairing;      // pairing(p, q) = ⟨z^p, Z_q⟩

    std::size_t half() const { return f.dim(); }
    const GeneratorId& s_plus(Index p) const { return rotated.generator(p); }
    const GeneratorId& s_minus(Index p) const { return rotated.generator(half() + p); }

    std::vector<GeneratorId> s_plus_ids() const
    {
        return {rotated.basis().begin(), rotated.basis().begin() + static_cast<std::ptrdiff_t>(half())};
    }
    std::vector<GeneratorId> s_minus_ids() const
    {
        return {rotated.basis().begin() + static_cast<std::ptrdiff_t>(half()), rotated.basis().end()};
    }

    /// Original-basis element represented by a rotated basis position.
    Element original_of(Index k) const { return rotation.to_original(elem(rotated.generator(k))); }
};

namespace detail {

inline StructureTable sub_table(const StructureTable& t, Index begin, std::size_t m)
{
    StructureTable out(m);
    for (Index p = 0; p < m; ++p) {
        for (Index q = p + 1; q < m; ++q) {
            Vec v;
            for (const auto& [r, x] : t.at(begin + p, begin + q)) v.add(r - begin, x);
            out.set(p, q, std::move(v));
        }
    }
    return out;
}

/// First bracket of the block [begin, begin+m) leaving the block, if any.
inline std::optional<std::pair<Index, Index>> find_escape(const StructureTable& t, Index begin, std::size_t m)
{
    for (Index p = begin; p < begin + m; ++p)
        for (Index q = p + 1; q < begin + m; ++q)
            for (const auto& [r, x] : t.at(p, q))
                if (r < begin || r >= begin + m) return std::make_pair(p, q);
    return std::nullopt;
}

/// Bilinear form on the rotated basis induced by the pairing matrix, with
/// both halves isotropic.
inline Matrix rotated_form(const ManinTriple& t)
{
    const std::size_t m = t.half();
    Matrix b(2 * m);
    for (Index p = 0; p < m; ++p)
        for (Index q = 0; q < m; ++q) {
            b(m + p, q) = t.pairing(p, q);
            b(q, m + p) = t.pairing(p, q);
        }
    return b;
}

inline Scalar form_eval(const Matrix& b, const Vec& u, const Vec& v)
{
    Scalar s;
    for (const auto& [a, x] : u)
        for (const auto& [c, y] : v)
            if (!b(a, c).is_zero()) s += x * y * b(a, c);
    return s;
}

}  // namespace detail

/// Builds the Manin triple for a splitting. Closure of both halves is
/// certified here; a failing bracket raises closure_error.
inline ManinTriple split(const LieAlgebra& alg, const SplittingSpec& raw_spec)
{
    const int cartan = cartan_count(alg.series(), alg.rank());
    for (const auto& g : alg.basis())
        if (g.kind == Kind::Xplus || g.kind == Kind::xminus) throw spec_error("split expects the oscillator basis");
    const SplittingSpec spec = raw_spec.resolved(cartan);
    spec.validate(cartan);

    ManinTriple t;
    t.spec = spec;
    t.original = restrict_center(alg, spec.central_set);
    t.rotation = cartan_rotation(spec);

    std::vector<GeneratorId> plus, minus;
    for (auto [i, j] : spec.pairs) {
        plus.push_back(Xp(i, j));
        minus.push_back(xm(i, j));
    }
    for (int k : spec.central_set) {
        plus.push_back(Xp(k));
        minus.push_back(xm(k));
    }
    for (const auto& g : positive_roots(alg.series(), alg.rank())) {
        plus.push_back(g);
        minus.push_back(root_partner(g));
    }
    if (plus.size() * 2 != t.original.dim()) throw std::logic_error("split: halves do not cover the double");

    std::vector<GeneratorId> rot_basis = plus;
    rot_basis.insert(rot_basis.end(), minus.begin(), minus.end());
    std::map<GeneratorId, Index> rot_index;
    for (Index k = 0; k < rot_basis.size(); ++k) rot_index.emplace(rot_basis[k], k);

    std::vector<Vec> new_in_old, old_in_new;
    for (const auto& g : rot_basis) new_in_old.push_back(t.original.to_vec(t.rotation.to_original(elem(g))));
    for (const auto& g : t.original.basis()) {
        Vec v;
        for (const auto& [h, x] : t.rotation.to_rotated(elem(g))) v.add(rot_index.at(h), x);
        old_in_new.push_back(std::move(v));
    }
    t.rotated = change_basis(t.original, rot_basis, new_in_old, old_in_new);

    const std::size_t m = plus.size();
    for (Index begin : {Index{0}, m}) {
        if (auto bad = detail::find_escape(t.rotated.table(), begin, m)) {
            throw closure_error("s" + std::string(begin == 0 ? "+" : "-") + " is not closed: [" +
                                rot_basis[bad->first].label() + "," + rot_basis[bad->second].label() + "] = " +
                                to_string(t.rotated.to_element(t.rotated.table().at(bad->first, bad->second))));
        }
    }
    t.f = detail::sub_table(t.rotated.table(), 0, m);
    t.c = detail::sub_table(t.rotated.table(), m, m);

    // Pairing installed from the invariant form of the oscillator basis.
    const Matrix form = canonical_form(t.original);
    t.pairing = Matrix(m);
    for (Index p = 0; p < m; ++p)
        for (Index q = 0; q < m; ++q) t.pairing(p, q) = detail::form_eval(form, new_in_old[m + p], new_in_old[q]);
    return t;
}

/// Canonical triples are reused by every bialgebra check; cache by
/// (series, rank, spec key).
inline std::shared_ptr<const ManinTriple> cached_split(Series s, int rank, const SplittingSpec& spec)
{
    static std::mutex mu;
    static std::map<std::string, std::shared_ptr<const ManinTriple>> cache;
    const std::string key =
        std::string(1, to_char(s)) + std::to_string(rank) + "|" + spec.resolved(cartan_count(s, rank)).key();
    {
        std::lock_guard lock(mu);
        if (auto it = cache.find(key); it != cache.end()) return it->second;
    }
    auto triple = std::make_shared<const ManinTriple>(split(build_series(s, rank), spec));
    std::lock_guard lock(mu);
    return cache.emplace(key, std::move(triple)).first->second;
}

/// Rotated-basis coordinates of an element written over rotated ids,
/// original ids, or a mix of both. An id carried by both bases with
/// different meanings is read as an original id.
inline Vec rotated_coordinates(const ManinTriple& t, const Element& e)
{
    Vec v;
    for (const auto& [g, x] : e) {
        if (auto it = t.rotation.inverse.find(g); it != t.rotation.inverse.end()) {
            v.add(t.rotated.to_vec(it->second), x);
        } else if (auto k = t.rotated.find(g)) {
            v.add(*k, x);
        } else {
            throw foreign_generator_error("generator " + g.label() + " is not in the double");
        }
    }
    return v;
}

/// ⟨u, v⟩ with ⟨Z_p, Z_q⟩ = ⟨z^p, z^q⟩ = 0 and ⟨z^p, Z_q⟩ = pairing(p, q).
inline Scalar pairing_eval(const ManinTriple& t, const Element& u, const Element& v)
{
    return detail::form_eval(detail::rotated_form(t), rotated_coordinates(t, u), rotated_coordinates(t, v));
}

/// The double's bracket table over s+ ++ s- rebuilt from f, c and the
/// pairing alone: [z^p, Z_q] = f^p_{qr} z^r − c^{pr}_q Z_r in dual bases.
inline StructureTable crossed_brackets(const ManinTriple& t)
{
    const std::size_t m = t.half();
    StructureTable out(2 * m);
    for (Index p = 0; p < m; ++p)
        for (Index q = p + 1; q < m; ++q) {
            out.set(p, q, t.f.at(p, q));
            Vec v;
            for (const auto& [r, x] : t.c.at(p, q)) v.add(m + r, x);
            out.set(m + p, m + q, std::move(v));
        }

    const Matrix& M = t.pairing;
    const bool unit = M.is_identity();
    const Matrix Minv = unit ? M : M.inverse();
    for (Index p = 0; p < m; ++p) {
        for (Index q = 0; q < m; ++q) {
            // ⟨[z^p,Z_q], Z_r⟩ = ⟨z^p, [Z_q,Z_r]⟩ = Σ_s M(p,s) f^s_{qr} = Σ_s α_s M(s,r)
            // ⟨z^r, [z^p,Z_q]⟩ = ⟨[z^r,z^p], Z_q⟩ = Σ_s c^{rp}_s M(s,q) = Σ_s M(r,s) β_s
            std::vector<Scalar> g(m), h(m);
            for (Index r = 0; r < m; ++r) {
                for (const auto& [s, x] : t.f.at(q, r))
                    if (!M(p, s).is_zero()) g[r] += M(p, s) * x;
                for (const auto& [s, x] : t.c.at(r, p))
                    if (!M(s, q).is_zero()) h[r] += x * M(s, q);
            }
            Vec v;
            for (Index s = 0; s < m; ++s) {
                Scalar alpha, beta;
                if (unit) {
                    alpha = g[s];
                    beta = h[s];
                } else {
                    for (Index r = 0; r < m; ++r) {
                        alpha += g[r] * Minv(r, s);  // α = g M⁻¹
                        beta += Minv(s, r) * h[r];   // β = M⁻¹ h
                    }
                }
                v.add(m + s, alpha);
                v.add(s, beta);
            }
            out.set(m + p, q, std::move(v));
        }
    }
    return out;
}

/// Reconstructed table, rotated back to the oscillator basis, compared
/// entry by entry with the directly built table.
inline Report verify_reconstruction(const ManinTriple& t)
{
    const LieAlgebra crossed(t.original.series(), t.original.rank(), t.rotated.basis(), crossed_brackets(t));
    std::vector<Vec> new_in_old, old_in_new;
    for (const auto& g : t.original.basis()) new_in_old.push_back(rotated_coordinates(t, elem(g)));
    for (Index k = 0; k < t.rotated.dim(); ++k) old_in_new.push_back(t.original.to_vec(t.original_of(k)));
    const LieAlgebra back = change_basis(crossed, t.original.basis(), new_in_old, old_in_new);

    Report rep{"reconstruction", 0, {}};
    const std::size_t n = t.original.dim();
    for (Index p = 0; p < n; ++p)
        for (Index q = p + 1; q < n; ++q) {
            ++rep.checked;
            const Vec diff = back.table().at(p, q) - t.original.table().at(p, q);
            if (!diff.is_zero())
                rep.violations.push_back({{t.original.generator(p).label(), t.original.generator(q).label()},
                                          residual_terms(t.original.to_element(diff)),
                                          0.0});
        }
    return rep;
}

/// s- structure constants re-expressed in the basis dual to s+.
inline StructureTable dual_normalized_c(const ManinTriple& t)
{
    if (t.pairing.is_identity()) return t.c;
    const std::size_t m = t.half();
    const Matrix N = t.pairing.inverse();  // ẑ^p = Σ_a N(p,a) z^a,  z^e = Σ_r M(e,r) ẑ^r
    StructureTable out(m);
    for (Index p = 0; p < m; ++p)
        for (Index q = p + 1; q < m; ++q) {
            Vec v;
            for (Index a = 0; a < m; ++a) {
                if (N(p, a).is_zero()) continue;
                for (Index b = 0; b < m; ++b) {
                    if (N(q, b).is_zero() || a == b) continue;
                    const Scalar w = N(p, a) * N(q, b);
                    for (const auto& [e, x] : t.c.at(a, b))
                        for (Index r = 0; r < m; ++r)
                            if (!t.pairing(e, r).is_zero()) v.add(r, w * x * t.pairing(e, r));
                }
            }
            out.set(p, q, std::move(v));
        }
    return out;
}

/// c^{pq}_r f^r_{st} = c^{pr}_s f^q_{rt} + c^{rq}_s f^p_{rt} + c^{pr}_t f^q_{sr} + c^{rq}_t f^p_{sr}
/// for all p < q, s < t (both sides are antisymmetric in each pair).
inline Report verify_compatibility(const ManinTriple& t)
{
    const std::size_t m = t.half();
    const StructureTable c = dual_normalized_c(t);
    const StructureTable& f = t.f;
    // f_out[q][r] = {(u, f^q_{ru})}: component q of [Z_r, Z_u]
    std::vector<std::vector<std::vector<std::pair<Index, Scalar>>>> f_out(
        m, std::vector<std::vector<std::pair<Index, Scalar>>>(m));
    for (Index r = 0; r < m; ++r)
        for (Index u = 0; u < m; ++u)
            for (const auto& [q, x] : f.at(r, u)) f_out[q][r].emplace_back(u, x);

    Report rep{"compatibility", m * (m - 1) / 2 * (m * (m - 1) / 2), {}};
    rep.violations = parallel_collect<Violation>(m, [&](std::size_t p, std::vector<Violation>& out) {
        for (Index q = p + 1; q < m; ++q) {
            Tensor2 diff;  // LHS − RHS over ordered (s,t)
            for (const auto& [r, x] : c.at(p, q))
                for (Index s = 0; s < m; ++s)
                    for (const auto& [u, y] : f_out[r][s]) diff.add({s, u}, x * y);
            for (Index r = 0; r < m; ++r) {
                // c^{pr}_s f^q_{rt} and c^{pr}_t f^q_{sr}
                for (const auto& [s, x] : c.at(p, r))
                    for (const auto& [u, y] : f_out[q][r]) {
                        diff.add({s, u}, -(x * y));
                        diff.add({u, s}, x * y);  // c^{pr}_t f^q_{sr} = −c^{pr}_t f^q_{rs}
                    }
                // c^{rq}_s f^p_{rt} and c^{rq}_t f^p_{sr}
                for (const auto& [s, x] : c.at(r, q))
                    for (const auto& [u, y] : f_out[p][r]) {
                        diff.add({s, u}, -(x * y));
                        diff.add({u, s}, x * y);
                    }
            }
            for (const auto& [k, v] : diff) {
                if (k[0] >= k[1]) continue;
                out.push_back({{t.s_minus(p).label(), t.s_minus(q).label(), t.s_plus(k[0]).label(),
                                t.s_plus(k[1]).label()},
                               {{"lhs-rhs", v}},
                               0.0});
            }
        }
    });
    return rep;
}

/// c = −f (canonical) or c = −conj_i(f) (mixed) under the index matching of
/// s- to s+.
inline Report verify_self_duality(const ManinTriple& t)
{
    const bool conjugate = t.spec.mode == SplittingSpec::Mode::mixed;
    const std::size_t m = t.half();
    Report rep{"selfdual", 0, {}};
    for (Index p = 0; p < m; ++p)
        for (Index q = p + 1; q < m; ++q) {
            ++rep.checked;
            Vec expected = t.f.at(p, q).map_coefficients([&](const Scalar& x) { return conjugate ? -x.conj_i() : -x; });
            const Vec diff = t.c.at(p, q) - expected;
            if (!diff.is_zero())
                rep.violations.push_back({{t.s_minus(p).label(), t.s_minus(q).label()},
                                          residual_terms(diff, [&](Index r) { return t.s_minus(r).label(); }),
                                          0.0});
        }
    return rep;
}

/// Ad-invariance B([x,y],z) + B(y,[x,z]) = 0 of the form induced by the
/// pairing, over all rotated basis triples.
inline Report verify_form_invariance(const ManinTriple& t)
{
    const Matrix b = detail::rotated_form(t);
    const std::size_t n = t.rotated.dim();
    const auto& tab = t.rotated.table();
    Report rep{"forminv", n * n * n, {}};
    rep.violations = parallel_collect<Violation>(n, [&](std::size_t x, std::vector<Violation>& out) {
        for (Index y = 0; y < n; ++y)
            for (Index z = 0; z < n; ++z) {
                Scalar s;
                for (const auto& [k, v] : tab.at(x, y))
                    if (!b(k, z).is_zero()) s += v * b(k, z);
                for (const auto& [k, v] : tab.at(x, z))
                    if (!b(y, k).is_zero()) s += v * b(y, k);
                if (!s.is_zero())
                    out.push_back({{t.rotated.generator(x).label(), t.rotated.generator(y).label(),
                                    t.rotated.generator(z).label()},
                                   {{"residual", s}},
                                   0.0});
            }
    });
    return rep;
}

/// Re-checks that both halves close under the rotated table.
inline Report verify_closure(const ManinTriple& t)
{
    const std::size_t m = t.half();
    Report rep{"closure", 0, {}};
    const auto& tab = t.rotated.table();
    for (Index begin : {Index{0}, m})
        for (Index p = begin; p < begin + m; ++p)
            for (Index q = p + 1; q < begin + m; ++q) {
                ++rep.checked;
                Vec escape;
                for (const auto& [r, x] : tab.at(p, q))
                    if (r < begin || r >= begin + m) escape.add(r, x);
                if (!escape.is_zero())
                    rep.violations.push_back(
                        {{t.rotated.generator(p).label(), t.rotated.generator(q).label()},
                         residual_terms(escape, [&](Index r) { return t.rotated.generator(r).label(); }),
                         0.0});
            }
    return rep;
}

/// Isotropy of s± and ⟨z^p, Z_q⟩ = δ under the invariant form of the
/// oscillator basis, plus agreement with the installed pairing matrix.
inline Report verify_pairing(const ManinTriple& t)
{
    const Matrix form = canonical_form(t.original);
    const std::size_t m = t.half();
    Report rep{"pairing", 0, {}};
    std::vector<Vec> orig;
    for (Index k = 0; k < 2 * m; ++k) orig.push_back(t.original.to_vec(t.original_of(k)));
    for (Index a = 0; a < 2 * m; ++a)
        for (Index b = a; b < 2 * m; ++b) {
            ++rep.checked;
            const Scalar value = detail::form_eval(form, orig[a], orig[b]);
            Scalar expected;
            if (a < m && b >= m) expected = b - m == a ? Scalar(1) : Scalar(0);
            const bool installed_ok = !(a < m && b >= m) || t.pairing(b - m, a) == value;
            if (!(value == expected) || !installed_ok)
                rep.violations.push_back(
                    {{t.rotated.generator(a).label(), t.rotated.generator(b).label()}, {{"value", value}}, 0.0});
        }
    return rep;
}

/// The Cartan part of C_D: Σ_k (z^k⊗Z_k + Z_k⊗z^k) over the rotated Cartan
/// generators equals Σ_i H_i⊗H_i + Σ_{k central} I_k⊗I_k.
inline Report verify_cartan_casimir_identity(const ManinTriple& t)
{
    const std::size_t m = t.half();
    Tensor2 lhs, rhs;
    for (Index k = 0; k < m; ++k) {
        if (!t.s_plus(k).is_cartan()) continue;
        const Vec zp = t.original.to_vec(t.original_of(m + k));
        const Vec Zp = t.original.to_vec(t.original_of(k));
        lhs += outer(zp, Zp) + outer(Zp, zp);
    }
    for (Index a = 0; a < t.original.dim(); ++a)
        if (t.original.generator(a).kind == Kind::H || t.original.generator(a).kind == Kind::I) rhs.add({a, a}, Scalar(1));
    Report rep{"cartan-casimir", 1, {}};
    const Tensor2 diff = lhs - rhs;
    if (!diff.is_zero())
        rep.violations.push_back({{"cartan"},
                                  residual_terms(diff,
                                                 [&](const std::array<Index, 2>& k) {
                                                     return t.original.generator(k[0]).label() + "⊗" +
                                                            t.original.generator(k[1]).label();
                                                 }),
                                  0.0});
    return rep;
}

/// Rescales every s- basis vector by `factor` while keeping the pairing
/// matrix fixed (the invariant form is rescaled by 1/factor). The double is
/// unchanged; c picks up the factor.
inline ManinTriple rescaled_s_minus(const ManinTriple& t, const Scalar& factor)
{
    ManinTriple out = t;
    const std::size_t m = t.half();
    for (Index p = 0; p < m; ++p) {
        const GeneratorId& g = t.s_minus(p);
        out.rotation.forward[g] = t.original_of(m + p) * factor;
    }
    // inverse: original generators over the rescaled s- vectors
    const Scalar inv = factor.inv();
    for (const auto& g : t.original.basis()) {
        const Vec v = rotated_coordinates(t, elem(g));
        Element e;
        for (const auto& [k, x] : v) e.add(t.rotated.generator(k), k >= m ? x * inv : x);
        out.rotation.inverse[g] = e;
    }
    StructureTable c(m);
    for (Index p = 0; p < m; ++p)
        for (Index q = p + 1; q < m; ++q) c.set(p, q, t.c.at(p, q) * factor);
    out.c = std::move(c);

    std::vector<Vec> new_in_old, old_in_new;
    for (Index k = 0; k < 2 * m; ++k) new_in_old.push_back(out.original.to_vec(out.original_of(k)));
    for (const auto& g : out.original.basis()) old_in_new.push_back(out.rotated.to_vec(out.rotation.inverse.at(g)));
    out.rotated = change_basis(out.original, t.rotated.basis(), new_in_old, old_in_new);
    return out;
}

}  // namespace drinfeld
