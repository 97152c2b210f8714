#pragma once

#include <array>
#include <complex>
#include <ostream>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace drinfeld {

using Rational = mpq_class;

class division_by_zero : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Element a + b·i + c·√2 + d·i√2 of the field ℚ(i,√2).
///
/// Components are GMP rationals kept in canonical (lowest-terms, positive
/// denominator) form, so equality is component-wise.
class Scalar {
public:
    Scalar() = default;
    Scalar(int v) : a_(v) {}
    explicit Scalar(Rational a, Rational b = 0, Rational c = 0, Rational d = 0)
        : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d))
    {
        a_.canonicalize();
        b_.canonicalize();
        c_.canonicalize();
        d_.canonicalize();
    }

    static Scalar rational(long num, long den = 1) { return Scalar(Rational(num, den)); }
    static Scalar i() { return Scalar(0, 1); }
    static Scalar sqrt2() { return Scalar(0, 0, 1); }
    static Scalar i_sqrt2() { return Scalar(0, 0, 0, 1); }
    /// 1/√2 = √2/2
    static Scalar inv_sqrt2() { return Scalar(0, 0, Rational(1, 2)); }

    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }
    const Rational& c() const { return c_; }
    const Rational& d() const { return d_; }

    bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0 && sgn(c_) == 0 && sgn(d_) == 0; }
    bool is_one() const { return a_ == 1 && sgn(b_) == 0 && sgn(c_) == 0 && sgn(d_) == 0; }

    /// Every component is in lowest terms with a positive denominator.
    bool is_canonical() const
    {
        auto ok = [](const Rational& q) {
            Rational r = q;
            r.canonicalize();
            return r.get_num() == q.get_num() && r.get_den() == q.get_den();
        };
        return ok(a_) && ok(b_) && ok(c_) && ok(d_);
    }

    Scalar& operator+=(const Scalar& y)
    {
        a_ += y.a_;
        b_ += y.b_;
        c_ += y.c_;
        d_ += y.d_;
        return *this;
    }
    Scalar& operator-=(const Scalar& y)
    {
        a_ -= y.a_;
        b_ -= y.b_;
        c_ -= y.c_;
        d_ -= y.d_;
        return *this;
    }
    Scalar& operator*=(const Scalar& y)
    {
        *this = *this * y;
        return *this;
    }
    Scalar& operator/=(const Scalar& y)
    {
        *this = *this * y.inv();
        return *this;
    }

    friend Scalar operator+(Scalar x, const Scalar& y) { return x += y; }
    friend Scalar operator-(Scalar x, const Scalar& y) { return x -= y; }
    friend Scalar operator-(const Scalar& x)
    {
        Scalar r;
        r.a_ = -x.a_;
        r.b_ = -x.b_;
        r.c_ = -x.c_;
        r.d_ = -x.d_;
        return r;
    }

    // i² = −1, (√2)² = 2
    friend Scalar operator*(const Scalar& x, const Scalar& y)
    {
        Scalar r;
        r.a_ = x.a_ * y.a_ - x.b_ * y.b_ + 2 * (x.c_ * y.c_ - x.d_ * y.d_);
        r.b_ = x.a_ * y.b_ + x.b_ * y.a_ + 2 * (x.c_ * y.d_ + x.d_ * y.c_);
        r.c_ = x.a_ * y.c_ + x.c_ * y.a_ - x.b_ * y.d_ - x.d_ * y.b_;
        r.d_ = x.a_ * y.d_ + x.d_ * y.a_ + x.b_ * y.c_ + x.c_ * y.b_;
        return r;
    }
    friend Scalar operator/(const Scalar& x, const Scalar& y) { return x * y.inv(); }

    friend bool operator==(const Scalar& x, const Scalar& y)
    {
        return x.a_ == y.a_ && x.b_ == y.b_ && x.c_ == y.c_ && x.d_ == y.d_;
    }

    /// i ↦ −i. A field automorphism fixing ℚ(√2).
    Scalar conj_i() const
    {
        Scalar r = *this;
        r.b_ = -r.b_;
        r.d_ = -r.d_;
        return r;
    }

    /// √2 ↦ −√2. A field automorphism fixing ℚ(i).
    Scalar conj_sqrt2() const
    {
        Scalar r = *this;
        r.c_ = -r.c_;
        r.d_ = -r.d_;
        return r;
    }

    /// Rationalizes against the i-conjugate and then the √2-conjugate.
    Scalar inv() const
    {
        if (is_zero()) throw division_by_zero("inverse of zero scalar");
        const Scalar ci = conj_i();
        const Scalar n1 = *this * ci;  // in ℚ(√2)
        const Scalar cs = n1.conj_sqrt2();
        const Scalar n2 = n1 * cs;  // in ℚ
        const Rational norm_inv = 1 / n2.a_;
        Scalar r = ci * cs;
        r.a_ *= norm_inv;
        r.b_ *= norm_inv;
        r.c_ *= norm_inv;
        r.d_ *= norm_inv;
        return r;
    }

    std::complex<double> to_complex() const
    {
        const double s = 1.4142135623730950488;
        return {a_.get_d() + s * c_.get_d(), b_.get_d() + s * d_.get_d()};
    }

    /// Four canonical "p/q" strings (integers without a slash).
    std::array<std::string, 4> to_strings() const
    {
        return {a_.get_str(), b_.get_str(), c_.get_str(), d_.get_str()};
    }

    static Scalar from_strings(const std::array<std::string, 4>& s)
    {
        std::array<Rational, 4> q;
        for (std::size_t k = 0; k < 4; ++k) {
            if (q[k].set_str(s[k], 10) != 0 || q[k].get_den() == 0)
                throw std::invalid_argument("bad rational component: " + s[k]);
        }
        return Scalar(q[0], q[1], q[2], q[3]);
    }

    /// Human-readable form, e.g. "1/2 - 1/2*i*r2". r2 stands for √2.
    std::string to_string() const
    {
        if (is_zero()) return "0";
        std::string out;
        auto emit = [&out](const Rational& q, const char* unit) {
            if (sgn(q) == 0) return;
            Rational mag = abs(q);
            if (out.empty())
                out += sgn(q) < 0 ? "-" : "";
            else
                out += sgn(q) < 0 ? " - " : " + ";
            if (*unit == '\0')
                out += mag.get_str();
            else if (mag == 1)
                out += unit;
            else
                out += mag.get_str() + "*" + unit;
        };
        emit(a_, "");
        emit(b_, "i");
        emit(c_, "r2");
        emit(d_, "i*r2");
        return out;
    }

    friend std::ostream& operator<<(std::ostream& os, const Scalar& x) { return os << x.to_string(); }

private:
    Rational a_, b_, c_, d_;
};

}  // namespace drinfeld
