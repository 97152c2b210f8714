#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <map>
#include <sstream>
#include <string>
#include <tuple>
#include <type_traits>
#include <vector>

#include "drinfeld_double.hpp"

namespace drinfeld {

namespace detail {
template <class T>
T convert(const Scalar& s);
template <>
inline Scalar convert<Scalar>(const Scalar& s)
{
    return s;
}
template <>
inline std::complex<double> convert<std::complex<double>>(const Scalar& s)
{
    return s.to_complex();
}
inline bool is_exact_zero(const Scalar& s) { return s.is_zero(); }
inline bool is_exact_zero(const std::complex<double>& z) { return z == std::complex<double>(0.0, 0.0); }
inline double magnitude(const Scalar& s) { return std::abs(s.to_complex()); }
inline double magnitude(const std::complex<double>& z) { return std::abs(z); }
}  // namespace detail

/// Column-major sparse square matrix. `shift` bounds the change of total
/// occupation and `reach` the largest intermediate rise above the starting
/// occupation; both are only meaningful for bosonic operators.
template <class T>
class SparseMatrix {
public:
    SparseMatrix() = default;
    explicit SparseMatrix(std::size_t n) : cols_(n) {}

    static SparseMatrix identity(std::size_t n)
    {
        SparseMatrix m(n);
        for (Index k = 0; k < n; ++k) m.add(k, k, T(1));
        return m;
    }

    std::size_t dim() const { return cols_.size(); }
    int shift = 0;
    int reach = 0;

    void add(Index row, Index col, const T& v)
    {
        if (detail::is_exact_zero(v)) return;
        auto& c = cols_.at(col);
        auto [it, inserted] = c.emplace(row, v);
        if (!inserted) {
            it->second += v;
            if (detail::is_exact_zero(it->second)) c.erase(it);
        }
    }

    T at(Index row, Index col) const
    {
        const auto& c = cols_.at(col);
        auto it = c.find(row);
        return it == c.end() ? T(0) : it->second;
    }

    const std::map<Index, T>& column(Index col) const { return cols_.at(col); }

    bool is_zero() const
    {
        return std::all_of(cols_.begin(), cols_.end(), [](const auto& c) { return c.empty(); });
    }

    /// (row, col, value) in row-major order.
    std::vector<std::tuple<Index, Index, T>> entries() const
    {
        std::vector<std::tuple<Index, Index, T>> out;
        for (Index c = 0; c < dim(); ++c)
            for (const auto& [r, v] : cols_[c]) out.emplace_back(r, c, v);
        std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
            return std::tie(std::get<0>(a), std::get<1>(a)) < std::tie(std::get<0>(b), std::get<1>(b));
        });
        return out;
    }

    SparseMatrix& operator+=(const SparseMatrix& o)
    {
        for (Index c = 0; c < o.dim(); ++c)
            for (const auto& [r, v] : o.cols_[c]) add(r, c, v);
        absorb(o);
        return *this;
    }
    SparseMatrix& operator-=(const SparseMatrix& o)
    {
        for (Index c = 0; c < o.dim(); ++c)
            for (const auto& [r, v] : o.cols_[c]) add(r, c, -v);
        absorb(o);
        return *this;
    }
    SparseMatrix& operator*=(const T& s)
    {
        for (auto& c : cols_) {
            for (auto it = c.begin(); it != c.end();) {
                it->second *= s;
                it = detail::is_exact_zero(it->second) ? c.erase(it) : std::next(it);
            }
        }
        return *this;
    }

    friend SparseMatrix operator+(SparseMatrix a, const SparseMatrix& b) { return a += b; }
    friend SparseMatrix operator-(SparseMatrix a, const SparseMatrix& b) { return a -= b; }
    friend SparseMatrix operator*(const T& s, SparseMatrix a) { return a *= s; }

    /// a·b: b acts first.
    friend SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b)
    {
        SparseMatrix out(a.dim());
        for (Index c = 0; c < b.dim(); ++c)
            for (const auto& [k, x] : b.cols_[c])
                for (const auto& [r, y] : a.cols_[k]) out.add(r, c, y * x);
        out.shift = a.shift + b.shift;
        out.reach = std::max(b.reach, b.shift + a.reach);
        return out;
    }

    friend bool operator==(const SparseMatrix& a, const SparseMatrix& b) { return a.cols_ == b.cols_; }

private:
    void absorb(const SparseMatrix& o)
    {
        shift = std::max(shift, o.shift);
        reach = std::max(reach, o.reach);
    }

    std::vector<std::map<Index, T>> cols_;
};

template <class T>
SparseMatrix<T> commutator(const SparseMatrix<T>& a, const SparseMatrix<T>& b)
{
    return a * b - b * a;
}

template <class T>
SparseMatrix<T> anticommutator(const SparseMatrix<T>& a, const SparseMatrix<T>& b)
{
    return a * b + b * a;
}

enum class Statistics { fermionic, bosonic };

/// Occupation-number basis. Fermionic states are ordered by the binary
/// number Σ n_k 2^(k-1); bosonic states by total occupation, then
/// lexicographically.
struct FockBasis {
    int modes = 0;
    Statistics statistics = Statistics::fermionic;
    int cutoff = 0;
    std::vector<std::vector<int>> states;
    std::map<std::vector<int>, Index> index;

    std::size_t dim() const { return states.size(); }

    int total(Index k) const
    {
        int t = 0;
        for (int n : states[k]) t += n;
        return t;
    }

    static FockBasis fermionic(int modes)
    {
        if (modes < 1 || modes > 20) throw std::invalid_argument("fermionic mode count out of range");
        FockBasis b;
        b.modes = modes;
        for (Index k = 0; k < (Index{1} << modes); ++k) {
            std::vector<int> occ(static_cast<std::size_t>(modes));
            for (int m = 0; m < modes; ++m) occ[static_cast<std::size_t>(m)] = static_cast<int>((k >> m) & 1U);
            b.index.emplace(occ, k);
            b.states.push_back(std::move(occ));
        }
        return b;
    }

    static FockBasis bosonic(int modes, int cutoff)
    {
        if (modes < 1) throw std::invalid_argument("bosonic mode count must be positive");
        if (cutoff < 4) throw std::invalid_argument("bosonic cutoff must be at least 4, got " + std::to_string(cutoff));
        FockBasis b;
        b.modes = modes;
        b.statistics = Statistics::bosonic;
        b.cutoff = cutoff;
        std::vector<int> occ(static_cast<std::size_t>(modes), 0);
        std::vector<std::vector<int>> all;
        for (;;) {
            all.push_back(occ);
            // odometer over tuples with total ≤ cutoff
            int m = modes - 1;
            for (; m >= 0; --m) {
                ++occ[static_cast<std::size_t>(m)];
                int t = 0;
                for (int x : occ) t += x;
                if (t <= cutoff) break;
                occ[static_cast<std::size_t>(m)] = 0;
            }
            if (m < 0) break;
        }
        std::stable_sort(all.begin(), all.end(), [](const auto& x, const auto& y) {
            int tx = 0, ty = 0;
            for (int v : x) tx += v;
            for (int v : y) ty += v;
            return tx != ty ? tx < ty : x < y;
        });
        for (auto& s : all) {
            b.index.emplace(s, b.states.size());
            b.states.push_back(std::move(s));
        }
        return b;
    }
};

/// a_k on the fermionic basis, with the sign string over lower modes.
inline SparseMatrix<Scalar> fermion_annihilator(const FockBasis& b, int k)
{
    SparseMatrix<Scalar> m(b.dim());
    const auto mode = static_cast<std::size_t>(k - 1);
    for (Index c = 0; c < b.dim(); ++c) {
        auto occ = b.states[c];
        if (occ[mode] == 0) continue;
        int below = 0;
        for (std::size_t l = 0; l < mode; ++l) below += occ[l];
        occ[mode] = 0;
        m.add(b.index.at(occ), c, Scalar(below % 2 ? -1 : 1));
    }
    return m;
}

inline SparseMatrix<Scalar> fermion_creator(const FockBasis& b, int k)
{
    SparseMatrix<Scalar> m(b.dim());
    const auto mode = static_cast<std::size_t>(k - 1);
    for (Index c = 0; c < b.dim(); ++c) {
        auto occ = b.states[c];
        if (occ[mode] == 1) continue;
        int below = 0;
        for (std::size_t l = 0; l < mode; ++l) below += occ[l];
        occ[mode] = 1;
        m.add(b.index.at(occ), c, Scalar(below % 2 ? -1 : 1));
    }
    return m;
}

using Complex = std::complex<double>;

/// b_k on the truncated bosonic basis: √n_k |n_k − 1⟩.
inline SparseMatrix<Complex> boson_annihilator(const FockBasis& b, int k)
{
    SparseMatrix<Complex> m(b.dim());
    const auto mode = static_cast<std::size_t>(k - 1);
    for (Index c = 0; c < b.dim(); ++c) {
        auto occ = b.states[c];
        const int n = occ[mode];
        if (n == 0) continue;
        occ[mode] = n - 1;
        m.add(b.index.at(occ), c, Complex(std::sqrt(static_cast<double>(n)), 0.0));
    }
    m.shift = -1;
    m.reach = 0;
    return m;
}

/// b_k†: √(n_k + 1) |n_k + 1⟩, zero on states at the cutoff.
inline SparseMatrix<Complex> boson_creator(const FockBasis& b, int k)
{
    SparseMatrix<Complex> m(b.dim());
    const auto mode = static_cast<std::size_t>(k - 1);
    for (Index c = 0; c < b.dim(); ++c) {
        if (b.total(c) >= b.cutoff) continue;
        auto occ = b.states[c];
        const int n = occ[mode];
        occ[mode] = n + 1;
        m.add(b.index.at(occ), c, Complex(std::sqrt(static_cast<double>(n + 1)), 0.0));
    }
    m.shift = 1;
    m.reach = 1;
    return m;
}

/// Generator matrices on a Fock space; ρ(I_i) = λ_i · identity.
template <class T>
struct MatrixRep {
    FockBasis basis;
    Series series = Series::A;
    int rank = 0;
    std::map<GeneratorId, SparseMatrix<T>> gens;
    std::map<int, Rational> central_values;

    bool exact() const { return basis.statistics == Statistics::fermionic; }

    const SparseMatrix<T>& of(const GeneratorId& g) const
    {
        auto it = gens.find(g);
        if (it == gens.end()) throw foreign_generator_error("generator " + g.label() + " is not represented");
        return it->second;
    }

    SparseMatrix<T> of(const Element& e) const
    {
        SparseMatrix<T> out(basis.dim());
        for (const auto& [g, c] : e) out += detail::convert<T>(c) * of(g);
        return out;
    }
};

namespace detail {

inline std::map<int, Rational> default_central(int modes, std::map<int, Rational> given)
{
    for (int k = 1; k <= modes; ++k) given.emplace(k, Rational(1));
    return given;
}

template <class T>
void add_central(MatrixRep<T>& rep, int modes)
{
    for (int k = 1; k <= modes; ++k)
        rep.gens[I(k)] = detail::convert<T>(Scalar(rep.central_values.at(k))) * SparseMatrix<T>::identity(rep.basis.dim());
}

}  // namespace detail

/// Exact fermionic representation of A_n (n+1 modes), B_n or D_n (n modes):
/// H = a†a − ½, F_ij = a_i†a_j, S_ij = a_i†a_j†, T_ij = −a_i a_j,
/// U_i = a_i†/√2, V_i = a_i/√2.
inline MatrixRep<Scalar> fermionic_rep(Series s, int rank, std::map<int, Rational> central_values = {})
{
    validate_rank(s, rank);
    if (s == Series::C) throw std::invalid_argument("the C series has no fermionic realization");
    const int modes = cartan_count(s, rank);
    MatrixRep<Scalar> rep{FockBasis::fermionic(modes), s, rank, {}, detail::default_central(modes, std::move(central_values))};
    const std::size_t dim = rep.basis.dim();
    std::vector<SparseMatrix<Scalar>> a(static_cast<std::size_t>(modes) + 1), ad(static_cast<std::size_t>(modes) + 1);
    for (int k = 1; k <= modes; ++k) {
        a[static_cast<std::size_t>(k)] = fermion_annihilator(rep.basis, k);
        ad[static_cast<std::size_t>(k)] = fermion_creator(rep.basis, k);
    }
    auto A = [&](int k) -> const SparseMatrix<Scalar>& { return a[static_cast<std::size_t>(k)]; };
    auto Ad = [&](int k) -> const SparseMatrix<Scalar>& { return ad[static_cast<std::size_t>(k)]; };
    const auto id = SparseMatrix<Scalar>::identity(dim);
    for (const auto& g : enumerate_generators(s, rank)) {
        switch (g.kind) {
        case Kind::H: rep.gens[g] = Ad(g.i) * A(g.i) - Scalar(Rational(1, 2)) * id; break;
        case Kind::F: rep.gens[g] = Ad(g.i) * A(g.j); break;
        case Kind::S: rep.gens[g] = Ad(g.i) * Ad(g.j); break;
        case Kind::T: rep.gens[g] = Scalar(-1) * (A(g.i) * A(g.j)); break;
        case Kind::U: rep.gens[g] = Scalar::inv_sqrt2() * Ad(g.i); break;
        case Kind::V: rep.gens[g] = Scalar::inv_sqrt2() * A(g.i); break;
        default: break;
        }
    }
    detail::add_central(rep, modes);
    return rep;
}

/// Truncated bosonic representation of A_n (n+1 modes) or C_n (n modes):
/// H = b†b + ½, F_ij = b_i†b_j, P_ii = b_i†²/√2, P_ij = b_i†b_j†,
/// Q_ii = −b_i²/√2, Q_ij = −b_i b_j.
inline MatrixRep<Complex> bosonic_rep(Series s, int rank, int cutoff, std::map<int, Rational> central_values = {})
{
    validate_rank(s, rank);
    if (s == Series::B || s == Series::D) throw std::invalid_argument("bosonic realization covers the A and C series");
    const int modes = cartan_count(s, rank);
    MatrixRep<Complex> rep{FockBasis::bosonic(modes, cutoff), s, rank, {}, detail::default_central(modes, std::move(central_values))};
    const std::size_t dim = rep.basis.dim();
    std::vector<SparseMatrix<Complex>> b(static_cast<std::size_t>(modes) + 1), bd(static_cast<std::size_t>(modes) + 1);
    for (int k = 1; k <= modes; ++k) {
        b[static_cast<std::size_t>(k)] = boson_annihilator(rep.basis, k);
        bd[static_cast<std::size_t>(k)] = boson_creator(rep.basis, k);
    }
    auto B = [&](int k) -> const SparseMatrix<Complex>& { return b[static_cast<std::size_t>(k)]; };
    auto Bd = [&](int k) -> const SparseMatrix<Complex>& { return bd[static_cast<std::size_t>(k)]; };
    const Complex r = 1.0 / std::sqrt(2.0);
    const auto id = SparseMatrix<Complex>::identity(dim);
    for (const auto& g : enumerate_generators(s, rank)) {
        switch (g.kind) {
        case Kind::H: rep.gens[g] = Bd(g.i) * B(g.i) + Complex(0.5) * id; break;
        case Kind::F: rep.gens[g] = Bd(g.i) * B(g.j); break;
        case Kind::P: rep.gens[g] = (g.i == g.j ? r : Complex(1)) * (Bd(g.i) * Bd(g.j)); break;
        case Kind::Q: rep.gens[g] = (g.i == g.j ? -r : Complex(-1)) * (B(g.i) * B(g.j)); break;
        default: break;
        }
    }
    detail::add_central(rep, modes);
    return rep;
}

namespace detail {

/// Columns whose total occupation leaves room for `reach` more quanta; on
/// them truncated products equal untruncated ones.
inline std::vector<bool> protected_columns(const FockBasis& b, int reach)
{
    std::vector<bool> ok(b.dim(), true);
    if (b.statistics == Statistics::bosonic)
        for (Index c = 0; c < b.dim(); ++c) ok[c] = b.total(c) + reach <= b.cutoff;
    return ok;
}

/// Nonzero entries of `m` on the allowed columns: exact, or above `tol` in
/// magnitude for floating-point reps.
template <class T>
Violation residual_violation(const SparseMatrix<T>& m, const std::vector<bool>& cols, bool exact, double tol,
                             std::vector<std::string> indices)
{
    Violation v{std::move(indices), {}, 0.0};
    for (Index c = 0; c < m.dim(); ++c) {
        if (!cols[c]) continue;
        for (const auto& [r, x] : m.column(c)) {
            const double mag = magnitude(x);
            if (!exact && mag <= tol) continue;
            v.magnitude = std::max(v.magnitude, mag);
            if (v.residual.size() >= 8) continue;
            const std::string at = std::to_string(r) + "," + std::to_string(c);
            if constexpr (std::is_same_v<T, Scalar>) {
                v.residual.emplace_back(at, x);
            } else {
                std::ostringstream os;
                os << at << "=" << x;
                v.residual.emplace_back(os.str(), Scalar(0));
            }
        }
    }
    if (v.magnitude == 0.0) v.indices.clear();
    return v;
}

}  // namespace detail

inline constexpr double bosonic_tolerance = 1e-12;

/// [ρ(x), ρ(y)] = ρ([x,y]) for every basis pair of alg: exact for
/// fermionic reps, within 1e-12 per entry on the protected subspace for
/// bosonic ones.
template <class T>
Report verify_rep_homomorphism(const MatrixRep<T>& rep, const LieAlgebra& alg, double tol = bosonic_tolerance)
{
    const std::size_t n = alg.dim();
    Report rep_out{"rep", n * (n - 1) / 2, {}};
    std::vector<SparseMatrix<T>> mats;
    for (const auto& g : alg.basis()) mats.push_back(rep.of(g));
    rep_out.violations = parallel_collect<Violation>(n, [&](std::size_t p, std::vector<Violation>& out) {
        for (Index q = p + 1; q < n; ++q) {
            const SparseMatrix<T> lhs = commutator(mats[p], mats[q]);
            SparseMatrix<T> rhs(rep.basis.dim());
            for (const auto& [k, c] : alg.table().at(p, q)) rhs += detail::convert<T>(c) * mats[k];
            const SparseMatrix<T> diff = lhs - rhs;
            const auto cols = detail::protected_columns(rep.basis, std::max(diff.reach, 0));
            Violation v = detail::residual_violation(diff, cols, rep.exact(), tol,
                                                     {alg.generator(p).label(), alg.generator(q).label()});
            if (!v.indices.empty()) out.push_back(std::move(v));
        }
    });
    return rep_out;
}

/// Quadratic element Σ products of the listed pairs, each term either the
/// anticommutator [a,b]_+ or the square a·a (b ignored).
struct CasimirElement {
    enum class Product { anticommutator, square };
    struct Term {
        Element a;
        Element b;
        Product kind;
    };
    std::vector<Term> terms;
};

/// C_D = Σ_p [z^p, Z_p]_+ over the triple, written in the original basis.
inline CasimirElement drinfeld_casimir(const ManinTriple& t)
{
    CasimirElement c;
    for (Index p = 0; p < t.half(); ++p)
        c.terms.push_back({t.original_of(t.half() + p), t.original_of(p), CasimirElement::Product::anticommutator});
    return c;
}

/// C_2 = Σ H_i² + Σ_{positive roots} [X⁺, X⁻]_+.
inline CasimirElement cartan_weyl_casimir(Series s, int rank)
{
    CasimirElement c;
    for (int i = 1; i <= cartan_count(s, rank); ++i)
        c.terms.push_back({elem(H(i)), elem(H(i)), CasimirElement::Product::square});
    for (const auto& g : positive_roots(s, rank))
        c.terms.push_back({elem(g), elem(root_partner(g)), CasimirElement::Product::anticommutator});
    return c;
}

template <class T>
SparseMatrix<T> evaluate(const MatrixRep<T>& rep, const CasimirElement& c)
{
    SparseMatrix<T> out(rep.basis.dim());
    for (const auto& term : c.terms) {
        const SparseMatrix<T> a = rep.of(term.a);
        if (term.kind == CasimirElement::Product::square)
            out += a * a;
        else
            out += anticommutator(a, rep.of(term.b));
    }
    return out;
}

/// [ρ(C), ρ(x)] = 0 for every represented generator x of alg.
template <class T>
Report casimir_check(const MatrixRep<T>& rep, const CasimirElement& cas, const LieAlgebra& alg,
                     double tol = bosonic_tolerance)
{
    const SparseMatrix<T> c = evaluate(rep, cas);
    Report out{"casimir", alg.dim(), {}};
    for (const auto& g : alg.basis()) {
        const SparseMatrix<T> diff = commutator(c, rep.of(g));
        const auto cols = detail::protected_columns(rep.basis, std::max(diff.reach, 0));
        Violation v = detail::residual_violation(diff, cols, rep.exact(), tol, {g.label()});
        if (!v.indices.empty()) out.violations.push_back(std::move(v));
    }
    return out;
}

/// Coordinate-list dump: "row col a b c d" for exact entries.
inline std::string dump_matrix(const SparseMatrix<Scalar>& m)
{
    std::ostringstream os;
    for (const auto& [r, c, v] : m.entries()) {
        const auto s = v.to_strings();
        os << r << ' ' << c << ' ' << s[0] << ' ' << s[1] << ' ' << s[2] << ' ' << s[3] << '\n';
    }
    return os.str();
}

/// "row col value" for floating-point entries; an imaginary part, when
/// present, follows the value.
inline std::string dump_matrix(const SparseMatrix<Complex>& m)
{
    std::ostringstream os;
    os.precision(17);
    for (const auto& [r, c, v] : m.entries()) {
        os << r << ' ' << c << ' ' << v.real();
        if (v.imag() != 0.0) os << ' ' << v.imag();
        os << '\n';
    }
    return os.str();
}

}  // namespace drinfeld
