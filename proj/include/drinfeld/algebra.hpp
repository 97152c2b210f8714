#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "generator.hpp"
#include "parallel.hpp"
#include "report.hpp"

namespace drinfeld {

/// Antisymmetric bracket table [e_p, e_q] = Σ_r t^r_{pq} e_r over an
/// ordered basis of dimension dim. Both orders are stored; set() keeps them
/// consistent.
class StructureTable {
public:
    StructureTable() = default;
    explicit StructureTable(std::size_t dim) : dim_(dim), cells_(dim * dim) {}

    std::size_t dim() const { return dim_; }

    const Vec& at(Index p, Index q) const { return cells_[p * dim_ + q]; }

    void set(Index p, Index q, Vec v)
    {
        if (p == q) {
            if (!v.is_zero()) throw std::invalid_argument("diagonal bracket must vanish");
            return;
        }
        cells_[q * dim_ + p] = -v;
        cells_[p * dim_ + q] = std::move(v);
    }

    /// out += coeff · [e_p, e_q]
    void accumulate(Index p, Index q, const Scalar& coeff, Vec& out) const { out.add(at(p, q), coeff); }

    Vec bracket(const Vec& x, const Vec& y) const
    {
        Vec out;
        for (const auto& [p, a] : x)
            for (const auto& [q, b] : y)
                if (p != q) out.add(at(p, q), a * b);
        return out;
    }

    /// Number of nonzero stored pairs p < q.
    std::size_t nonzero_pairs() const
    {
        std::size_t n = 0;
        for (Index p = 0; p < dim_; ++p)
            for (Index q = p + 1; q < dim_; ++q) n += !at(p, q).is_zero();
        return n;
    }

    friend bool operator==(const StructureTable&, const StructureTable&) = default;

private:
    std::size_t dim_ = 0;
    std::vector<Vec> cells_;
};

/// A finite-dimensional Lie algebra over ℚ(i,√2) with named basis.
class LieAlgebra {
public:
    LieAlgebra() = default;
    LieAlgebra(Series series, int rank, std::vector<GeneratorId> basis, StructureTable table)
        : series_(series), rank_(rank), basis_(std::move(basis)), table_(std::move(table))
    {
        if (table_.dim() != basis_.size()) throw std::invalid_argument("table dimension does not match basis");
        for (Index k = 0; k < basis_.size(); ++k) {
            if (!index_.emplace(basis_[k], k).second)
                throw std::invalid_argument("duplicate generator " + basis_[k].label());
        }
    }

    Series series() const { return series_; }
    int rank() const { return rank_; }
    std::size_t dim() const { return basis_.size(); }
    const std::vector<GeneratorId>& basis() const { return basis_; }
    const GeneratorId& generator(Index k) const { return basis_.at(k); }
    const StructureTable& table() const { return table_; }

    std::optional<Index> find(const GeneratorId& g) const
    {
        auto it = index_.find(g);
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

    bool contains(const GeneratorId& g) const { return index_.count(g) != 0; }

    Index index_of(const GeneratorId& g) const
    {
        auto it = index_.find(g);
        if (it == index_.end()) throw foreign_generator_error("generator " + g.label() + " is not in the basis");
        return it->second;
    }

    Vec to_vec(const Element& e) const
    {
        Vec v;
        for (const auto& [g, c] : e) v.add(index_of(g), c);
        return v;
    }

    Element to_element(const Vec& v) const
    {
        Element e;
        for (const auto& [k, c] : v) e.add(basis_.at(k), c);
        return e;
    }

    Vec unit(Index k) const { return Vec(k); }

    Vec bracket(const Vec& x, const Vec& y) const { return table_.bracket(x, y); }

    std::string name() const { return std::string(1, to_char(series_)) + std::to_string(rank_); }

private:
    Series series_ = Series::A;
    int rank_ = 0;
    std::vector<GeneratorId> basis_;
    std::map<GeneratorId, Index> index_;
    StructureTable table_;
};

/// Bilinear extension of the table. Throws foreign_generator_error for ids
/// outside the algebra's basis.
inline Element bracket(const Element& x, const Element& y, const LieAlgebra& alg)
{
    return alg.to_element(alg.bracket(alg.to_vec(x), alg.to_vec(y)));
}

/// Canonical ordering: H ascending, I ascending, positive roots
/// (F_ij i<j, then P_ij i<=j / S_ij i<j, then U_i), negative roots mirroring
/// them (F_ji, Q_ij / T_ij, V_i).
inline std::vector<GeneratorId> positive_roots(Series s, int rank)
{
    validate_rank(s, rank);
    const int n = cartan_count(s, rank);
    std::vector<GeneratorId> out;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) out.push_back(F(i, j));
    if (s == Series::C) {
        for (int i = 1; i <= n; ++i)
            for (int j = i; j <= n; ++j) out.push_back(P(i, j));
    }
    if (s == Series::B || s == Series::D) {
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j) out.push_back(S(i, j));
    }
    if (s == Series::B) {
        for (int i = 1; i <= n; ++i) out.push_back(U(i));
    }
    return out;
}

/// Negative root paired with a positive one: F_ij↔F_ji, P↔Q, S↔T, U↔V.
inline GeneratorId root_partner(const GeneratorId& g)
{
    switch (g.kind) {
    case Kind::F: return F(g.j, g.i);
    case Kind::P: return Q(g.i, g.j);
    case Kind::Q: return P(g.i, g.j);
    case Kind::S: return T(g.i, g.j);
    case Kind::T: return S(g.i, g.j);
    case Kind::U: return V(g.i);
    case Kind::V: return U(g.i);
    default: throw std::invalid_argument(g.label() + " is not a root generator");
    }
}

inline bool is_positive_root(const GeneratorId& g)
{
    switch (g.kind) {
    case Kind::F: return g.i < g.j;
    case Kind::P:
    case Kind::S:
    case Kind::U: return true;
    default: return false;
    }
}

inline std::vector<GeneratorId> enumerate_generators(Series s, int rank)
{
    validate_rank(s, rank);
    const int n = cartan_count(s, rank);
    std::vector<GeneratorId> out;
    for (int i = 1; i <= n; ++i) out.push_back(H(i));
    for (int i = 1; i <= n; ++i) out.push_back(I(i));
    const auto pos = positive_roots(s, rank);
    out.insert(out.end(), pos.begin(), pos.end());
    for (const auto& g : pos) out.push_back(root_partner(g));
    return out;
}

inline std::size_t expected_dimension(Series s, int rank)
{
    const std::size_t n = static_cast<std::size_t>(rank);
    switch (s) {
    case Series::A: return (n + 1) * (n + 1) + (n + 1);
    case Series::B:
    case Series::C: return n * (2 * n + 1) + n;
    case Series::D: return n * (2 * n - 1) + n;
    }
    return 0;
}

/// Cartan weight of an original-basis generator, one entry per Cartan index.
inline std::vector<int> weight(const GeneratorId& g, int modes)
{
    std::vector<int> w(static_cast<std::size_t>(modes), 0);
    auto bump = [&](int idx, int by) { w.at(static_cast<std::size_t>(idx - 1)) += by; };
    switch (g.kind) {
    case Kind::F: bump(g.i, 1), bump(g.j, -1); break;
    case Kind::P:
    case Kind::S: bump(g.i, 1), bump(g.j, 1); break;
    case Kind::Q:
    case Kind::T: bump(g.i, -1), bump(g.j, -1); break;
    case Kind::U: bump(g.i, 1); break;
    case Kind::V: bump(g.i, -1); break;
    default: break;
    }
    return w;
}

namespace detail {

inline int kd(int a, int b) { return a == b ? 1 : 0; }

/// Commutation rules of the oscillator basis. Symmetric-index references are
/// normalized; references to undefined diagonal generators (F_ii, and the
/// off-diagonal P_ii / Q_ii slots of the general rules) are dropped, the
/// diagonal contribution being carried by the explicit δδ terms.
class CommutationRules {
public:
    Element f(int i, int j) const { return i == j ? Element() : elem(F(i, j)); }
    Element p_off(int a, int b) const { return a == b ? Element() : elem(P(std::min(a, b), std::max(a, b))); }
    Element q_off(int a, int b) const { return a == b ? Element() : elem(Q(std::min(a, b), std::max(a, b))); }
    Element s_anti(int a, int b) const
    {
        if (a == b) return {};
        return a < b ? elem(S(a, b)) : elem(S(b, a), Scalar(-1));
    }
    Element t_anti(int a, int b) const
    {
        if (a == b) return {};
        return a < b ? elem(T(a, b)) : elem(T(b, a), Scalar(-1));
    }

    /// [x, y] when a rule for this ordered kind pair exists.
    std::optional<Element> rule(const GeneratorId& x, const GeneratorId& y) const
    {
        const Scalar r2 = Scalar::sqrt2();
        const int i = x.i, j = x.j;
        Element out;
        auto sc = [](int v) { return Scalar(v); };
        switch (x.kind) {
        case Kind::H:
            switch (y.kind) {
            case Kind::H: return out;
            case Kind::F: return sc(kd(i, y.i) - kd(i, y.j)) * elem(y);
            case Kind::P:
                if (y.i == y.j) return sc(2 * kd(i, y.i)) * elem(y);
                return sc(kd(i, y.i) + kd(i, y.j)) * elem(y);
            case Kind::Q:
                if (y.i == y.j) return sc(-2 * kd(i, y.i)) * elem(y);
                return sc(-(kd(i, y.i) + kd(i, y.j))) * elem(y);
            case Kind::S: return sc(kd(i, y.i) + kd(i, y.j)) * elem(y);
            case Kind::T: return sc(-(kd(i, y.i) + kd(i, y.j))) * elem(y);
            case Kind::U: return sc(kd(i, y.i)) * elem(y);
            case Kind::V: return sc(-kd(i, y.i)) * elem(y);
            default: return std::nullopt;
            }
        case Kind::F: {
            const int k = y.i, l = y.j;
            switch (y.kind) {
            case Kind::F:
                out.add(f(i, l), sc(kd(j, k)));
                out.add(f(k, j), sc(-kd(i, l)));
                if (kd(j, k) != 0 && kd(i, l) != 0) out.add(elem(H(i)) - elem(H(j)));
                return out;
            case Kind::P:
                if (k == l) return sc(kd(j, k)) * r2 * p_off(i, k);
                out.add(p_off(i, l), sc(kd(j, k)));
                out.add(p_off(i, k), sc(kd(j, l)));
                out.add(elem(P(i, i)), r2 * sc(kd(i, l) * kd(j, k) + kd(i, k) * kd(j, l)));
                return out;
            case Kind::Q:
                if (k == l) return sc(-kd(i, k)) * r2 * q_off(j, k);
                out.add(q_off(j, l), sc(-kd(i, k)));
                out.add(q_off(j, k), sc(-kd(i, l)));
                out.add(elem(Q(j, j)), -r2 * sc(kd(i, l) * kd(j, k) + kd(i, k) * kd(j, l)));
                return out;
            case Kind::S:
                out.add(s_anti(i, l), sc(kd(j, k)));
                out.add(s_anti(i, k), sc(-kd(j, l)));
                return out;
            case Kind::T:
                out.add(t_anti(j, l), sc(-kd(i, k)));
                out.add(t_anti(j, k), sc(kd(i, l)));
                return out;
            case Kind::U: return sc(kd(j, y.i)) * elem(U(i));
            case Kind::V: return sc(-kd(i, y.i)) * elem(V(j));
            default: return std::nullopt;
            }
        }
        case Kind::P: {
            if (y.kind == Kind::P) return out;
            if (y.kind != Kind::Q) return std::nullopt;
            const int k = y.i, l = y.j;
            if (i == j && k == l) return sc(2 * kd(i, k)) * elem(H(i));
            if (i == j) {
                // [P_ii, Q_jk] = √2(δ_ij F_ik + δ_ik F_ij)
                out.add(f(i, l), r2 * sc(kd(i, k)));
                out.add(f(i, k), r2 * sc(kd(i, l)));
                return out;
            }
            if (k == l) {
                // [P_ij, Q_kk] = √2(δ_ik F_jk + δ_jk F_ik)
                out.add(f(j, k), r2 * sc(kd(i, k)));
                out.add(f(i, k), r2 * sc(kd(j, k)));
                return out;
            }
            out.add(f(j, l), sc(kd(i, k)));
            out.add(f(i, k), sc(kd(j, l)));
            out.add(f(i, l), sc(kd(j, k)));
            out.add(f(j, k), sc(kd(i, l)));
            out.add(elem(H(i)) + elem(H(j)), sc(kd(i, k) * kd(j, l) + kd(j, k) * kd(i, l)));
            return out;
        }
        case Kind::Q:
            if (y.kind == Kind::Q) return out;
            return std::nullopt;
        case Kind::S: {
            const int k = y.i, l = y.j;
            switch (y.kind) {
            case Kind::S: return out;
            case Kind::T:
                out.add(f(i, l), sc(-kd(j, k)));
                out.add(f(j, k), sc(-kd(i, l)));
                out.add(f(j, l), sc(kd(i, k)));
                out.add(f(i, k), sc(kd(j, l)));
                out.add(elem(H(i)) + elem(H(j)), sc(kd(i, k) * kd(j, l) - kd(j, k) * kd(i, l)));
                return out;
            case Kind::U: return out;
            case Kind::V:
                out.add(elem(U(j)), sc(-kd(i, k)));
                out.add(elem(U(i)), sc(kd(j, k)));
                return out;
            default: return std::nullopt;
            }
        }
        case Kind::T:
            switch (y.kind) {
            case Kind::T: return out;
            case Kind::V: return out;
            case Kind::U:
                out.add(elem(V(j)), sc(kd(i, y.i)));
                out.add(elem(V(i)), sc(-kd(j, y.i)));
                return out;
            default: return std::nullopt;
            }
        case Kind::U:
            switch (y.kind) {
            case Kind::U: return s_anti(i, y.i);
            case Kind::V: return i == y.i ? elem(H(i)) : elem(F(i, y.i));
            default: return std::nullopt;
            }
        case Kind::V:
            if (y.kind == Kind::V) return -t_anti(i, y.i);
            return std::nullopt;
        case Kind::I: return out;
        default: return std::nullopt;
        }
    }

    /// [x, y] using the direct rule, else the reversed rule negated, else 0.
    Element bracket(const GeneratorId& x, const GeneratorId& y) const
    {
        if (auto r = rule(x, y)) return *r;
        if (auto r = rule(y, x)) return -*r;
        return {};
    }
};

}  // namespace detail

/// Bracket of two basis generators straight from the commutation rules,
/// before any table is materialized.
inline Element rule_bracket(const GeneratorId& x, const GeneratorId& y)
{
    return detail::CommutationRules{}.bracket(x, y);
}

/// g ⊕ t_n in the oscillator basis with all I_i central.
inline LieAlgebra build_series(Series s, int rank)
{
    auto basis = enumerate_generators(s, rank);
    detail::CommutationRules rules;
    std::map<GeneratorId, Index> index;
    for (Index k = 0; k < basis.size(); ++k) index.emplace(basis[k], k);
    StructureTable table(basis.size());
    for (Index p = 0; p < basis.size(); ++p) {
        for (Index q = p + 1; q < basis.size(); ++q) {
            const Element e = rules.bracket(basis[p], basis[q]);
            Vec v;
            for (const auto& [g, c] : e) {
                auto it = index.find(g);
                if (it == index.end())
                    throw std::logic_error("rule produced " + g.label() + " outside the basis for [" +
                                           basis[p].label() + "," + basis[q].label() + "]");
                v.add(it->second, c);
            }
            table.set(p, q, std::move(v));
        }
    }
    return LieAlgebra(s, rank, std::move(basis), std::move(table));
}

/// Exhaustive Jacobi check over all basis triples p < q < r.
inline Report verify_jacobi(const LieAlgebra& alg)
{
    const auto& t = alg.table();
    const std::size_t n = alg.dim();
    Report rep{"jacobi", 0, {}};
    rep.violations = parallel_collect<Violation>(n, [&](std::size_t p, std::vector<Violation>& out) {
        for (Index q = p + 1; q < n; ++q) {
            const Vec& pq = t.at(p, q);
            for (Index r = q + 1; r < n; ++r) {
                Vec sum;
                for (const auto& [s, c] : pq) t.accumulate(s, r, c, sum);
                for (const auto& [s, c] : t.at(q, r)) t.accumulate(s, p, c, sum);
                for (const auto& [s, c] : t.at(r, p)) t.accumulate(s, q, c, sum);
                if (!sum.is_zero()) {
                    out.push_back({{alg.generator(p).label(), alg.generator(q).label(), alg.generator(r).label()},
                                   residual_terms(alg.to_element(sum)),
                                   0.0});
                }
            }
        }
    });
    rep.checked = n * (n - 1) * (n - 2) / 6;
    return rep;
}

/// Re-expresses alg in a new basis. new_in_old[k] gives the k-th new basis
/// vector over the old basis; old_in_new[k] gives the k-th old basis vector
/// over the new one.
inline LieAlgebra change_basis(const LieAlgebra& alg, std::vector<GeneratorId> new_basis,
                               const std::vector<Vec>& new_in_old, const std::vector<Vec>& old_in_new)
{
    const std::size_t n = new_basis.size();
    if (new_in_old.size() != n || old_in_new.size() != alg.dim() || n != alg.dim())
        throw std::invalid_argument("change_basis: dimension mismatch");
    StructureTable table(n);
    for (Index a = 0; a < n; ++a) {
        for (Index b = a + 1; b < n; ++b) {
            const Vec old = alg.bracket(new_in_old[a], new_in_old[b]);
            Vec v;
            for (const auto& [k, c] : old) v.add(old_in_new[k], c);
            table.set(a, b, std::move(v));
        }
    }
    return LieAlgebra(alg.series(), alg.rank(), std::move(new_basis), std::move(table));
}

/// The algebra with the central generators I_k, k ∉ keep, removed.
inline LieAlgebra restrict_center(const LieAlgebra& alg, const std::vector<int>& keep)
{
    std::vector<GeneratorId> basis;
    for (const auto& g : alg.basis()) {
        if (g.kind == Kind::I && std::find(keep.begin(), keep.end(), g.i) == keep.end()) continue;
        basis.push_back(g);
    }
    StructureTable table(basis.size());
    for (Index a = 0; a < basis.size(); ++a) {
        for (Index b = a + 1; b < basis.size(); ++b) {
            const Vec& old = alg.table().at(alg.index_of(basis[a]), alg.index_of(basis[b]));
            Vec v;
            for (const auto& [k, c] : old) {
                const auto& g = alg.generator(k);
                auto pos = std::find(basis.begin(), basis.end(), g);
                if (pos == basis.end()) throw std::logic_error("dropped generator " + g.label() + " is not central");
                v.add(static_cast<Index>(pos - basis.begin()), c);
            }
            table.set(a, b, std::move(v));
        }
    }
    return LieAlgebra(alg.series(), alg.rank(), std::move(basis), std::move(table));
}

/// The invariant form of the oscillator basis: ⟨H_i,H_j⟩ = ⟨I_i,I_j⟩ = δ_ij,
/// and each positive root paired to its partner with value 1.
inline Matrix canonical_form(const LieAlgebra& alg)
{
    Matrix m(alg.dim());
    for (Index a = 0; a < alg.dim(); ++a) {
        const auto& g = alg.generator(a);
        if (g.kind == Kind::H || g.kind == Kind::I) {
            m(a, a) = Scalar(1);
        } else if (is_positive_root(g)) {
            const Index b = alg.index_of(root_partner(g));
            m(a, b) = Scalar(1);
            m(b, a) = Scalar(1);
        } else if (g.kind == Kind::Xplus || g.kind == Kind::xminus) {
            throw std::invalid_argument("canonical_form expects the oscillator basis");
        }
    }
    return m;
}

/// Order-preserving index relabeling i ↦ i + offset of a generator.
inline GeneratorId shift_indices(const GeneratorId& g, int offset)
{
    GeneratorId out = g;
    out.i += offset;
    if (out.j != 0) out.j += offset;
    return out;
}

}  // namespace drinfeld
