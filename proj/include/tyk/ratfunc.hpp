#ifndef TYK_RATFUNC_HPP
#define TYK_RATFUNC_HPP

#include <vector>

#include "tyk/unipoly.hpp"

namespace tyk {

// Reduced fraction of univariate polynomials: gcd(num, den) = 1, den monic.
class RatFunc {
public:
    RatFunc() : num_(0), den_(1) {}
    RatFunc(const Rational& c) : num_(c), den_(1) {}
    RatFunc(long c) : num_(c), den_(1) {}
    RatFunc(UniPoly num) : num_(std::move(num)), den_(1) {}
    RatFunc(UniPoly num, UniPoly den) : num_(std::move(num)), den_(std::move(den)) { reduce(); }

    static RatFunc variable() { return RatFunc(UniPoly::variable()); }

    const UniPoly& num() const { return num_; }
    const UniPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }

    RatFunc operator-() const { return RatFunc(raw{}, -num_, den_); }
    friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
        if (b.is_zero()) throw Error("DivisionByZero", "rational-function division by zero");
        return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
    }
    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

    RatFunc inv() const { return RatFunc(1) / *this; }

    // f(eps*u + b), eps in {1,-1}
    RatFunc compose_affine(int eps, const Rational& b) const {
        return RatFunc(num_.compose_affine(eps, b), den_.compose_affine(eps, b));
    }
    RatFunc shift(const Rational& c) const { return compose_affine(1, c); }
    // f(-u + l)
    RatFunc reflect_arg(const Rational& l) const { return compose_affine(-1, l); }

    Rational eval(const Rational& x) const; // throws on a pole

    bool proper_at_infinity() const { return num_.degree() <= den_.degree(); }
    // Value at u = infinity (0 when deg num < deg den).
    Rational value_at_infinity() const;
    // First k coefficients of the u^{-1}-expansion, starting at u^0.
    std::vector<Rational> series_at_infinity(int k) const;

    std::string str(const std::string& var = "u") const;

private:
    struct raw {};
    RatFunc(raw, UniPoly n, UniPoly d) : num_(std::move(n)), den_(std::move(d)) {}

    void reduce();
    UniPoly num_, den_;
};

} // namespace tyk

#endif
