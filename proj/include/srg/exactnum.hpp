#pragma once

// Exact arithmetic over Q and real quadratic fields Q(sqrt d).
//
// Rational is a value wrapper over GMP's mpq_class, always kept in lowest
// terms with a positive denominator. QuadNum is a + b*sqrt(d) with rational
// a, b and squarefree d; it is kept canonical so that structural equality is
// numeric equality.

#include "error.hpp"

#include <gmpxx.h>

#include <cmath>
#include <compare>
#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <utility>

namespace srg {

using Integer = mpz_class;

class Rational {
public:
    Rational() = default;
    Rational(long v) : v_(v) {}
    Rational(int v) : v_(v) {}
    Rational(long long v) : v_(Integer(std::to_string(v))) {}
    Rational(const Integer & v) : v_(v) {}
    explicit Rational(const mpq_class & v) : v_(v) { v_.canonicalize(); }

    Rational(const Integer & num, const Integer & den)
    {
        if (den == 0)
            throw Error(ErrorKind::DivisionByZero, "rational with zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }

    Integer num() const { return v_.get_num(); }
    Integer den() const { return v_.get_den(); }
    const mpq_class & raw() const { return v_; }

    int sign() const { return sgn(v_); }
    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }

    Integer floor() const
    {
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
        return q;
    }

    Integer ceil() const
    {
        Integer q;
        mpz_cdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
        return q;
    }

    double to_double() const { return v_.get_d(); }

    /// "p" for integers, "p/q" otherwise.
    std::string to_string() const
    {
        if (is_integer())
            return v_.get_num().get_str();
        return v_.get_num().get_str() + "/" + v_.get_den().get_str();
    }

    Rational operator-() const { return Rational(mpq_class(-v_)); }

    Rational & operator+=(const Rational & o) { v_ += o.v_; return *this; }
    Rational & operator-=(const Rational & o) { v_ -= o.v_; return *this; }
    Rational & operator*=(const Rational & o) { v_ *= o.v_; return *this; }
    Rational & operator/=(const Rational & o)
    {
        if (o.is_zero())
            throw Error(ErrorKind::DivisionByZero, "rational division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational & b) { return a += b; }
    friend Rational operator-(Rational a, const Rational & b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational & b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational & b) { return a /= b; }

    friend bool operator==(const Rational & a, const Rational & b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Rational & a, const Rational & b)
    {
        int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
    }

    friend std::ostream & operator<<(std::ostream & os, const Rational & r) { return os << r.to_string(); }

private:
    mpq_class v_{0};
};

namespace detail {

/// Splits D = s^2 * d with d squarefree.
inline std::pair<std::uint64_t, std::uint64_t> squarefree_split(std::uint64_t value)
{
    if (value == 0)
        return {0, 0};
    std::uint64_t root = 1;
    std::uint64_t free = 1;
    std::uint64_t rest = value;
    for (std::uint64_t p = 2; p <= rest / p; ++p) {
        unsigned exponent = 0;
        while (rest % p == 0) {
            rest /= p;
            ++exponent;
        }
        for (unsigned i = 0; i < exponent / 2; ++i)
            root *= p;
        if (exponent % 2 == 1)
            free *= p;
    }
    free *= rest;
    return {root, free};
}

} // namespace detail

/// a + b*sqrt(d). Canonical form: d squarefree, d == 0 iff b == 0.
class QuadNum {
public:
    QuadNum() = default;
    QuadNum(int v) : a_(v) {}
    QuadNum(long v) : a_(v) {}
    QuadNum(long long v) : a_(v) {}
    QuadNum(const Rational & a) : a_(a) {}

    /// Builds a + b*sqrt(radicand) in canonical form, folding square factors
    /// of the radicand into b (and into a when sqrt is rational).
    static QuadNum make(const Rational & a, const Rational & b, std::uint64_t radicand)
    {
        auto [root, d] = detail::squarefree_split(radicand);
        QuadNum q;
        if (radicand == 0 || b.is_zero()) {
            q.a_ = a;
            return q;
        }
        Rational scaled = b * Rational(static_cast<long>(root));
        if (d == 1) {
            q.a_ = a + scaled;
            return q;
        }
        q.a_ = a;
        q.b_ = scaled;
        q.d_ = d;
        return q;
    }

    const Rational & rational_part() const { return a_; }
    const Rational & irrational_part() const { return b_; }
    std::uint64_t radicand() const { return d_; }

    bool is_rational() const { return d_ == 0; }
    bool is_zero() const { return d_ == 0 && a_.is_zero(); }
    bool is_integer() const { return d_ == 0 && a_.is_integer(); }

    /// Exact sign of a + b*sqrt(d), decided by comparing a^2 with b^2 d.
    int sign() const
    {
        int sa = a_.sign();
        int sb = d_ == 0 ? 0 : b_.sign();
        if (sb == 0)
            return sa;
        if (sa == 0)
            return sb;
        if (sa == sb)
            return sa;
        Rational a2 = a_ * a_;
        Rational b2d = b_ * b_ * Rational(static_cast<long>(d_));
        int c = a2 < b2d ? -1 : (a2 > b2d ? 1 : 0);
        // |a| vs |b| sqrt(d): the larger magnitude decides
        return c > 0 ? sa : (c < 0 ? sb : 0);
    }

    QuadNum conjugate() const
    {
        QuadNum q = *this;
        q.b_ = -q.b_;
        return q;
    }

    /// a^2 - b^2 d, the field norm.
    Rational norm() const { return a_ * a_ - b_ * b_ * Rational(static_cast<long>(d_)); }

    /// Exact floor, located by a floating estimate and corrected by exact comparisons.
    Integer floor() const
    {
        if (is_rational())
            return a_.floor();
        Integer f(static_cast<long>(std::floor(approx())));
        while (*this < QuadNum(Rational(f)))
            f -= 1;
        while (!(*this < QuadNum(Rational(Integer(f + 1)))))
            f += 1;
        return f;
    }

    Integer ceil() const
    {
        Integer f = floor();
        if (*this == QuadNum(Rational(f)))
            return f;
        return f + 1;
    }

    double approx() const
    {
        double v = a_.to_double();
        if (d_ != 0)
            v += b_.to_double() * std::sqrt(static_cast<double>(d_));
        return v;
    }

    /// "p/q" for rationals, "(p+q√d)/r" (or "p+q√d" when r = 1) otherwise.
    std::string to_string() const
    {
        if (is_rational())
            return a_.to_string();
        Integer r = lcm(a_.den(), b_.den());
        Integer p = a_.num() * (r / a_.den());
        Integer q = b_.num() * (r / b_.den());
        std::string root = "√" + std::to_string(d_);
        std::string irr;
        if (q == 1)
            irr = root;
        else if (q == -1)
            irr = "-" + root;
        else
            irr = q.get_str() + root;
        std::string body;
        if (p == 0)
            body = irr;
        else
            body = p.get_str() + (q > 0 ? "+" : "") + irr;
        if (r == 1)
            return body;
        if (p == 0)
            return body + "/" + r.get_str();
        return "(" + body + ")/" + r.get_str();
    }

    QuadNum operator-() const
    {
        QuadNum q = *this;
        q.a_ = -q.a_;
        q.b_ = -q.b_;
        return q;
    }

    QuadNum & operator+=(const QuadNum & o)
    {
        std::uint64_t d = common_field(*this, o);
        a_ += o.a_;
        b_ += o.b_;
        d_ = d;
        normalize();
        return *this;
    }

    QuadNum & operator-=(const QuadNum & o)
    {
        std::uint64_t d = common_field(*this, o);
        a_ -= o.a_;
        b_ -= o.b_;
        d_ = d;
        normalize();
        return *this;
    }

    QuadNum & operator*=(const QuadNum & o)
    {
        std::uint64_t d = common_field(*this, o);
        if (d == 0) {
            a_ *= o.a_;
        }
        else {
            Rational a = a_ * o.a_ + b_ * o.b_ * Rational(static_cast<long>(d));
            Rational b = a_ * o.b_ + b_ * o.a_;
            a_ = std::move(a);
            b_ = std::move(b);
            d_ = d;
        }
        normalize();
        return *this;
    }

    QuadNum & operator/=(const QuadNum & o)
    {
        if (o.is_zero())
            throw Error(ErrorKind::DivisionByZero, "division by zero in Q(sqrt d)");
        common_field(*this, o);
        if (o.is_rational()) {
            a_ /= o.a_;
            b_ /= o.a_;
            normalize();
            return *this;
        }
        Rational n = o.norm();
        *this *= o.conjugate();
        a_ /= n;
        b_ /= n;
        normalize();
        return *this;
    }

    friend QuadNum operator+(QuadNum a, const QuadNum & b) { return a += b; }
    friend QuadNum operator-(QuadNum a, const QuadNum & b) { return a -= b; }
    friend QuadNum operator*(QuadNum a, const QuadNum & b) { return a *= b; }
    friend QuadNum operator/(QuadNum a, const QuadNum & b) { return a /= b; }

    friend bool operator==(const QuadNum & x, const QuadNum & y)
    {
        return x.d_ == y.d_ && x.a_ == y.a_ && x.b_ == y.b_;
    }

    friend std::strong_ordering operator<=>(const QuadNum & x, const QuadNum & y)
    {
        int s = (x - y).sign();
        return s < 0 ? std::strong_ordering::less : s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
    }

    friend std::ostream & operator<<(std::ostream & os, const QuadNum & q) { return os << q.to_string(); }

    /// Radicand shared by x and y, or MixedFields when both are irrational
    /// in different fields.
    static std::uint64_t common_field(const QuadNum & x, const QuadNum & y)
    {
        if (x.d_ == 0)
            return y.d_;
        if (y.d_ == 0 || x.d_ == y.d_)
            return x.d_;
        throw Error(ErrorKind::MixedFields,
            "Q(sqrt " + std::to_string(x.d_) + ") vs Q(sqrt " + std::to_string(y.d_) + ")");
    }

private:
    void normalize()
    {
        if (d_ == 0 || b_.is_zero()) {
            b_ = Rational();
            d_ = 0;
        }
    }

    Rational a_;
    Rational b_;
    std::uint64_t d_ = 0;
};

inline QuadNum quad_make(const Rational & a, const Rational & b, std::uint64_t radicand)
{
    return QuadNum::make(a, b, radicand);
}

inline int quad_sign(const QuadNum & x) { return x.sign(); }

enum class QuadOp { Add, Sub, Mul, Div };

inline QuadNum quad_arith(const QuadNum & x, const QuadNum & y, QuadOp op)
{
    switch (op) {
    case QuadOp::Add: return x + y;
    case QuadOp::Sub: return x - y;
    case QuadOp::Mul: return x * y;
    case QuadOp::Div: return x / y;
    }
    return {};
}

} // namespace srg

template <>
struct std::hash<srg::QuadNum> {
    std::size_t operator()(const srg::QuadNum & q) const noexcept
    {
        std::hash<std::string> h;
        return h(q.to_string());
    }
};
