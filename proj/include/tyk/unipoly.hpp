#ifndef TYK_UNIPOLY_HPP
#define TYK_UNIPOLY_HPP

#include <map>
#include <utility>
#include <vector>

#include "tyk/rational.hpp"

namespace tyk {

// Dense univariate polynomial over the rationals. Coefficients are stored in
// ascending order with no trailing zero; the zero polynomial has an empty
// coefficient vector.
class UniPoly {
public:
    UniPoly() = default;
    UniPoly(const Rational& c) {
        if (!c.is_zero()) c_.push_back(c);
    }
    UniPoly(long c) : UniPoly(Rational(c)) {}
    explicit UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

    static UniPoly variable() { return UniPoly(std::vector<Rational>{Rational(0), Rational(1)}); }
    // Monic product of (u - r)^m over the root multiset.
    static UniPoly from_roots(const std::map<Rational, int>& roots);
    // c * u^k
    static UniPoly monomial(const Rational& c, int k);

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; } // -1 for zero
    const std::vector<Rational>& coeffs() const { return c_; }
    Rational at(int k) const {
        return (k >= 0 && k < static_cast<int>(c_.size())) ? c_[k] : Rational(0);
    }
    const Rational& lc() const { return c_.back(); } // undefined on zero
    bool is_monic() const { return !c_.empty() && c_.back() == Rational(1); }
    bool is_one() const { return c_.size() == 1 && c_[0] == Rational(1); }

    Rational eval(const Rational& x) const;

    UniPoly operator-() const;
    friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
    UniPoly operator*(const Rational& s) const;
    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }

    // Quotient and remainder; divisor must be nonzero.
    std::pair<UniPoly, UniPoly> divmod(const UniPoly& d) const;
    // Exact division; throws if the remainder is nonzero.
    UniPoly divexact(const UniPoly& d) const;

    UniPoly monic() const;
    static UniPoly gcd(UniPoly a, UniPoly b);

    // P(u + c)
    UniPoly shift(const Rational& c) const;
    // P(eps*u + b) with eps in {1,-1}
    UniPoly compose_affine(int eps, const Rational& b) const;
    // (-1)^deg * P(-u + l); monic when P is monic
    UniPoly reflect(const Rational& l) const;

    // All rational roots with multiplicity. The polynomial must split over Q
    // (total multiplicity = degree), otherwise NonRationalRoot is thrown.
    std::map<Rational, int> rational_roots() const;

    std::string str(const std::string& var = "u") const;

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    std::vector<Rational> c_;
};

inline UniPoly operator*(const Rational& s, const UniPoly& p) { return p * s; }

} // namespace tyk

#endif
