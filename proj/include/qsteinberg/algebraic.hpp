#ifndef QSTEINBERG_ALGEBRAIC_HPP
#define QSTEINBERG_ALGEBRAIC_HPP

#include <cmath>
#include <ostream>
#include <stdexcept>
#include <string>

#include "integer.hpp"

namespace qsteinberg {

/// Raised when a sum or product would need two different radicals.
struct IncompatibleRadicals : std::logic_error {
    using std::logic_error::logic_error;
};

/// Exact number a + b * i^e * sqrt(m) with a, b rational, e in {0, 1} and m a
/// squarefree positive integer. Every character value handled by this
/// library has this shape.
///
/// Canonical form: b == 0 implies e == 0 and m == 1, and the radical term is
/// never the rational sqrt(1). Two values are equal iff their fields are.
class AlgValue {
public:
    AlgValue() : m_(1) {}
    AlgValue(const Rational& a) : a_(a), m_(1) {} // NOLINT: rationals embed implicitly
    AlgValue(const BigInt& a) : a_(a), m_(1) {}   // NOLINT
    AlgValue(long long a) : a_(a), m_(1) {}       // NOLINT

    /// a + b * i^e * sqrt(m) for any integer e and m >= 1, canonicalized.
    static AlgValue make(const Rational& a, const Rational& b, long long e, const BigInt& m)
    {
        if (m < 1)
            throw DomainError("AlgValue::make: radicand must be positive");
        AlgValue v;
        v.a_ = a;
        v.b_ = b;
        const long long e4 = ((e % 4) + 4) % 4;
        if (e4 >= 2)
            v.b_ = -v.b_;
        v.e_ = static_cast<int>(e4 % 2);
        v.m_ = m;
        v.extract_squares();
        v.normalize();
        return v;
    }

    const Rational& a() const noexcept { return a_; }
    const Rational& b() const noexcept { return b_; }
    int e() const noexcept { return e_; }
    const BigInt& m() const noexcept { return m_; }

    bool is_zero() const { return a_ == 0 && b_ == 0; }
    bool is_rational() const { return b_ == 0; }
    bool is_real() const { return b_ == 0 || e_ == 0; }

    /// Radical parts agree, or one side has none.
    bool compatible(const AlgValue& o) const
    {
        return b_ == 0 || o.b_ == 0 || (e_ == o.e_ && m_ == o.m_);
    }

    friend AlgValue operator+(const AlgValue& x, const AlgValue& y)
    {
        if (!x.compatible(y))
            throw IncompatibleRadicals("cannot add " + x.str() + " and " + y.str());
        const AlgValue& r = x.b_ == 0 ? y : x;
        return make(x.a_ + y.a_, x.b_ + y.b_, r.e_, r.m_);
    }

    friend AlgValue operator-(const AlgValue& x) { return x.scaled(Rational(-1)); }
    friend AlgValue operator-(const AlgValue& x, const AlgValue& y) { return x + (-y); }

    /// Product, defined when one factor is rational, both share a radical,
    /// or both are pure radical terms.
    friend AlgValue operator*(const AlgValue& x, const AlgValue& y)
    {
        if (x.b_ == 0)
            return y.scaled(x.a_);
        if (y.b_ == 0)
            return x.scaled(y.a_);
        if (x.e_ == y.e_ && x.m_ == y.m_) {
            // (a1 + b1 r)(a2 + b2 r) with r^2 = (-1)^e m
            Rational r2 = Rational(x.m_) * (x.e_ ? -1 : 1);
            return make(x.a_ * y.a_ + x.b_ * y.b_ * r2, x.a_ * y.b_ + y.a_ * x.b_, x.e_, x.m_);
        }
        if (x.a_ == 0 && y.a_ == 0)
            return make(0, x.b_ * y.b_, x.e_ + y.e_, x.m_ * y.m_);
        throw IncompatibleRadicals("cannot multiply " + x.str() + " and " + y.str());
    }

    AlgValue scaled(const Rational& q) const
    {
        if (q == 0)
            return {};
        AlgValue v = *this;
        v.a_ *= q;
        v.b_ *= q;
        return v;
    }

    /// Complex conjugate: flips the sign of an imaginary radical term.
    AlgValue conj() const
    {
        AlgValue v = *this;
        if (v.e_ == 1)
            v.b_ = -v.b_;
        return v;
    }

    /// Floating approximation of |x|; used only by tests as a witness.
    double approx_abs() const
    {
        const double a = a_.convert_to<double>();
        const double rad = b_.convert_to<double>() * std::sqrt(m_.convert_to<double>());
        return e_ == 0 ? std::fabs(a + rad) : std::hypot(a, rad);
    }

    friend bool operator==(const AlgValue& x, const AlgValue& y)
    {
        return x.a_ == y.a_ && x.b_ == y.b_ && x.e_ == y.e_ && x.m_ == y.m_;
    }

    /// Exact text with a common denominator, e.g. "(1 + √5)/2", "-i√3", "7/2".
    std::string str() const
    {
        if (b_ == 0)
            return rational_str(a_);
        using boost::multiprecision::denominator;
        using boost::multiprecision::lcm;
        using boost::multiprecision::numerator;
        const BigInt den = lcm(denominator(a_), denominator(b_));
        const BigInt anum = numerator(a_) * (den / denominator(a_));
        const BigInt bnum = numerator(b_) * (den / denominator(b_));

        std::string radical;
        const BigInt mag = bnum < 0 ? BigInt(-bnum) : bnum;
        if (mag != 1)
            radical += mag.str();
        if (e_ == 1)
            radical += "i";
        if (m_ != 1)
            radical += "√" + m_.str();

        std::string body;
        if (anum != 0) {
            body = anum.str() + (bnum < 0 ? " - " : " + ") + radical;
        } else {
            body = (bnum < 0 ? "-" : "") + radical;
        }
        if (den == 1)
            return body;
        if (anum != 0)
            return "(" + body + ")/" + den.str();
        return body + "/" + den.str();
    }

    friend std::ostream& operator<<(std::ostream& os, const AlgValue& v) { return os << v.str(); }

    static std::string rational_str(const Rational& q)
    {
        using boost::multiprecision::denominator;
        using boost::multiprecision::numerator;
        if (denominator(q) == 1)
            return numerator(q).str();
        return numerator(q).str() + "/" + denominator(q).str();
    }

private:
    void extract_squares()
    {
        BigInt rest = m_;
        BigInt factor = 1;
        for (BigInt d = 2; d * d <= rest; ++d) {
            while (rest % (d * d) == 0) {
                rest /= d * d;
                factor *= d;
            }
        }
        m_ = rest;
        b_ *= factor;
    }

    void normalize()
    {
        if (b_ != 0 && e_ == 0 && m_ == 1) {
            a_ += b_;
            b_ = 0;
        }
        if (b_ == 0) {
            e_ = 0;
            m_ = 1;
        }
    }

    Rational a_;
    Rational b_;
    int e_ = 0;
    BigInt m_;
};

} // namespace qsteinberg

#endif // QSTEINBERG_ALGEBRAIC_HPP
