#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "scalar.hpp"

namespace drinfeld {

/// Sparse formal linear combination over an ordered key set.
/// Zero coefficients are never stored, so two combinations are equal iff
/// their term maps are equal.
template <class Key>
class LinearCombination {
public:
    using key_type = Key;
    using map_type = std::map<Key, Scalar>;
    using const_iterator = typename map_type::const_iterator;

    LinearCombination() = default;
    explicit LinearCombination(const Key& k, const Scalar& coeff = Scalar(1)) { add(k, coeff); }
    LinearCombination(std::initializer_list<std::pair<const Key, Scalar>> init)
    {
        for (const auto& [k, v] : init) add(k, v);
    }

    void add(const Key& k, const Scalar& coeff)
    {
        if (coeff.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(k, coeff);
        if (!inserted) {
            it->second += coeff;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    void add(const LinearCombination& other, const Scalar& coeff = Scalar(1))
    {
        if (coeff.is_zero()) return;
        if (coeff.is_one()) {
            for (const auto& [k, v] : other.terms_) add(k, v);
        } else {
            for (const auto& [k, v] : other.terms_) add(k, v * coeff);
        }
    }

    Scalar coeff(const Key& k) const
    {
        auto it = terms_.find(k);
        return it == terms_.end() ? Scalar() : it->second;
    }

    void erase(const Key& k) { terms_.erase(k); }

    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const_iterator begin() const { return terms_.begin(); }
    const_iterator end() const { return terms_.end(); }
    const map_type& terms() const { return terms_; }

    LinearCombination& operator+=(const LinearCombination& o)
    {
        add(o);
        return *this;
    }
    LinearCombination& operator-=(const LinearCombination& o)
    {
        add(o, Scalar(-1));
        return *this;
    }
    LinearCombination& operator*=(const Scalar& s)
    {
        if (s.is_zero()) {
            terms_.clear();
            return *this;
        }
        for (auto& [k, v] : terms_) v *= s;
        return *this;
    }

    friend LinearCombination operator+(LinearCombination x, const LinearCombination& y) { return x += y; }
    friend LinearCombination operator-(LinearCombination x, const LinearCombination& y) { return x -= y; }
    friend LinearCombination operator-(LinearCombination x) { return x *= Scalar(-1); }
    friend LinearCombination operator*(const Scalar& s, LinearCombination x) { return x *= s; }
    friend LinearCombination operator*(LinearCombination x, const Scalar& s) { return x *= s; }
    friend bool operator==(const LinearCombination& x, const LinearCombination& y) { return x.terms_ == y.terms_; }

    /// Applies f to every coefficient, dropping results that vanish.
    template <class F>
    LinearCombination map_coefficients(F f) const
    {
        LinearCombination out;
        for (const auto& [k, v] : terms_) out.add(k, f(v));
        return out;
    }

private:
    map_type terms_;
};

using Index = std::size_t;
using Vec = LinearCombination<Index>;
using Tensor2 = LinearCombination<std::array<Index, 2>>;
using Tensor3 = LinearCombination<std::array<Index, 3>>;

/// a⊗b as a tensor key.
inline std::array<Index, 2> key(Index a, Index b) { return {a, b}; }

/// u⊗v for sparse vectors u, v.
inline Tensor2 outer(const Vec& u, const Vec& v)
{
    Tensor2 t;
    for (const auto& [a, x] : u)
        for (const auto& [b, y] : v) t.add({a, b}, x * y);
    return t;
}

/// u∧v = u⊗v − v⊗u.
inline Tensor2 wedge(const Vec& u, const Vec& v)
{
    Tensor2 t = outer(u, v);
    t.add(outer(v, u), Scalar(-1));
    return t;
}

/// Slot swap τ(a⊗b) = b⊗a.
inline Tensor2 flip(const Tensor2& t)
{
    Tensor2 out;
    for (const auto& [k, v] : t) out.add({k[1], k[0]}, v);
    return out;
}

/// Antisymmetrization ½(t − τt).
inline Tensor2 antisymmetrize(const Tensor2& t)
{
    Tensor2 out = t - flip(t);
    return out * Scalar::rational(1, 2);
}

inline bool is_antisymmetric(const Tensor2& t) { return t == -flip(t); }

/// Wedge normal form of an antisymmetric tensor: coefficient w of a∧b with a < b.
inline Tensor2 wedge_coefficients(const Tensor2& t)
{
    Tensor2 out;
    for (const auto& [k, v] : t)
        if (k[0] < k[1]) out.add(k, v);
    return out;
}

/// Applies a linear map given per basis index to both tensor legs.
template <class MapFn>
Tensor2 transform(const Tensor2& t, MapFn&& image)
{
    Tensor2 out;
    for (const auto& [k, v] : t) out.add(outer(image(k[0]), image(k[1])), v);
    return out;
}

/// Dense square matrix over Scalar. Used for pairing matrices and small solves.
class Matrix {
public:
    Matrix() = default;
    explicit Matrix(std::size_t n) : n_(n), data_(n * n) {}

    static Matrix identity(std::size_t n)
    {
        Matrix m(n);
        for (std::size_t k = 0; k < n; ++k) m(k, k) = Scalar(1);
        return m;
    }

    std::size_t size() const { return n_; }
    Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * n_ + c]; }
    const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * n_ + c]; }

    bool is_identity() const
    {
        for (std::size_t r = 0; r < n_; ++r)
            for (std::size_t c = 0; c < n_; ++c)
                if (!((*this)(r, c) == Scalar(r == c ? 1 : 0))) return false;
        return true;
    }

    Matrix transpose() const
    {
        Matrix t(n_);
        for (std::size_t r = 0; r < n_; ++r)
            for (std::size_t c = 0; c < n_; ++c) t(c, r) = (*this)(r, c);
        return t;
    }

    /// Gauss-Jordan inverse. Throws division_by_zero when singular.
    Matrix inverse() const
    {
        Matrix a = *this;
        Matrix inv = identity(n_);
        for (std::size_t col = 0; col < n_; ++col) {
            std::size_t piv = col;
            while (piv < n_ && a(piv, col).is_zero()) ++piv;
            if (piv == n_) throw division_by_zero("singular matrix");
            if (piv != col) {
                for (std::size_t c = 0; c < n_; ++c) {
                    std::swap(a(piv, c), a(col, c));
                    std::swap(inv(piv, c), inv(col, c));
                }
            }
            const Scalar s = a(col, col).inv();
            for (std::size_t c = 0; c < n_; ++c) {
                a(col, c) *= s;
                inv(col, c) *= s;
            }
            for (std::size_t r = 0; r < n_; ++r) {
                if (r == col || a(r, col).is_zero()) continue;
                const Scalar f = a(r, col);
                for (std::size_t c = 0; c < n_; ++c) {
                    a(r, c) -= f * a(col, c);
                    inv(r, c) -= f * inv(col, c);
                }
            }
        }
        return inv;
    }

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t n_ = 0;
    std::vector<Scalar> data_;
};

/// Basis of the annihilator {φ : φ(s) = 0 ∀ s ∈ span(rows)} inside the dual of a
/// dim-dimensional space, computed by row reduction.
inline std::vector<Vec> annihilator(const std::vector<Vec>& rows, std::size_t dim)
{
    std::vector<std::vector<Scalar>> m;
    for (const auto& r : rows) {
        std::vector<Scalar> dense(dim);
        for (const auto& [k, v] : r) dense.at(k) = v;
        m.push_back(std::move(dense));
    }
    std::vector<std::size_t> pivot_cols;
    std::size_t row = 0;
    for (std::size_t col = 0; col < dim && row < m.size(); ++col) {
        std::size_t piv = row;
        while (piv < m.size() && m[piv][col].is_zero()) ++piv;
        if (piv == m.size()) continue;
        std::swap(m[piv], m[row]);
        const Scalar s = m[row][col].inv();
        for (auto& x : m[row]) x *= s;
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == row || m[r][col].is_zero()) continue;
            const Scalar f = m[r][col];
            for (std::size_t c = 0; c < dim; ++c) m[r][c] -= f * m[row][c];
        }
        pivot_cols.push_back(col);
        ++row;
    }
    std::vector<bool> is_pivot(dim, false);
    for (auto c : pivot_cols) is_pivot[c] = true;
    // One null vector per free column.
    std::vector<Vec> out;
    for (std::size_t free = 0; free < dim; ++free) {
        if (is_pivot[free]) continue;
        Vec phi(free, Scalar(1));
        for (std::size_t r = 0; r < pivot_cols.size(); ++r) phi.add(pivot_cols[r], -m[r][free]);
        out.push_back(std::move(phi));
    }
    return out;
}

inline Scalar dot(const Vec& phi, const Vec& v)
{
    Scalar s;
    for (const auto& [k, x] : v) {
        auto c = phi.coeff(k);
        if (!c.is_zero()) s += c * x;
    }
    return s;
}

}  // namespace drinfeld
