#ifndef TYK_RATIONAL_HPP
#define TYK_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

#include "tyk/errors.hpp"

namespace tyk {

using Int = boost::multiprecision::cpp_int;

// Exact rational number. Invariants: gcd(|num|, den) = 1 and den > 0.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long n) : num_(n), den_(1) {}
    Rational(Int n) : num_(std::move(n)), den_(1) {}
    Rational(Int n, Int d) : num_(std::move(n)), den_(std::move(d)) { normalize(); }
    Rational(long n, long d) : num_(n), den_(d) { normalize(); }

    static Rational parse(const std::string& s);

    const Int& num() const { return num_; }
    const Int& den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }
    bool is_half_integer() const { return den_ == 1 || den_ == 2; }
    int sign() const { return num_ == 0 ? 0 : (num_ > 0 ? 1 : -1); }

    Rational operator-() const { return Rational(raw{}, -num_, den_); }

    Rational& operator+=(const Rational& o) {
        num_ = num_ * o.den_ + o.num_ * den_;
        den_ *= o.den_;
        normalize();
        return *this;
    }
    Rational& operator-=(const Rational& o) { return *this += -o; }
    Rational& operator*=(const Rational& o) {
        num_ *= o.num_;
        den_ *= o.den_;
        normalize();
        return *this;
    }
    Rational& operator/=(const Rational& o) {
        if (o.num_ == 0) throw Error("DivisionByZero", "rational division by zero");
        num_ *= o.den_;
        den_ *= o.num_;
        normalize();
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return a.num_ * b.den_ < b.num_ * a.den_;
    }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    Rational abs() const { return num_ < 0 ? -*this : *this; }
    Rational inv() const { return Rational(1) / *this; }

    // Largest integer <= *this.
    Int floor() const {
        Int q = num_ / den_;
        if (num_ < 0 && q * den_ != num_) --q;
        return q;
    }

    Rational pow(unsigned e) const {
        Rational r(1), b = *this;
        for (; e; e >>= 1) {
            if (e & 1) r *= b;
            b *= b;
        }
        return r;
    }

    // "p/q", or "p" when q = 1.
    std::string str() const;

private:
    struct raw {};
    Rational(raw, Int n, Int d) : num_(std::move(n)), den_(std::move(d)) {}

    void normalize() {
        if (den_ == 0) throw Error("DivisionByZero", "rational with zero denominator");
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        Int g = boost::multiprecision::gcd(num_ < 0 ? Int(-num_) : num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
        if (num_ == 0) den_ = 1;
    }

    Int num_, den_;
};

inline Rational half(long n) { return Rational(n, 2); }

} // namespace tyk

#endif
