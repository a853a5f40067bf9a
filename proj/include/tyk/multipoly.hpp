#ifndef TYK_MULTIPOLY_HPP
#define TYK_MULTIPOLY_HPP

#include <array>
#include <map>

#include "tyk/ratfunc.hpp"

namespace tyk {

enum class Var : int { u = 0, v = 1, a = 2 };

// Monomial u^e0 v^e1 a^e2. Map order is graded-lex descending (u > v > a),
// so begin() of a term map is the leading term.
struct Mono {
    std::array<int, 3> e{0, 0, 0};
    int total() const { return e[0] + e[1] + e[2]; }
    friend bool operator<(const Mono& x, const Mono& y) {
        if (x.total() != y.total()) return x.total() > y.total();
        return x.e > y.e;
    }
    friend bool operator==(const Mono& x, const Mono& y) { return x.e == y.e; }
    Mono operator*(const Mono& o) const {
        Mono m;
        for (int i = 0; i < 3; ++i) m.e[i] = e[i] + o.e[i];
        return m;
    }
    bool divides(const Mono& o) const {
        for (int i = 0; i < 3; ++i)
            if (e[i] > o.e[i]) return false;
        return true;
    }
    Mono quot(const Mono& o) const { // *this / o
        Mono m;
        for (int i = 0; i < 3; ++i) m.e[i] = e[i] - o.e[i];
        return m;
    }
};

// Sparse polynomial over Q in the fixed variables (u, v, a).
class MultiPoly {
public:
    MultiPoly() = default;
    MultiPoly(const Rational& c) {
        if (!c.is_zero()) t_[Mono{}] = c;
    }
    MultiPoly(long c) : MultiPoly(Rational(c)) {}

    static MultiPoly variable(Var x, int e = 1) {
        MultiPoly p;
        Mono m;
        m.e[static_cast<int>(x)] = e;
        p.t_[m] = Rational(1);
        return p;
    }
    static MultiPoly from_unipoly(const UniPoly& p, Var x);

    bool is_zero() const { return t_.empty(); }
    bool is_constant() const { return t_.empty() || (t_.size() == 1 && t_.begin()->first == Mono{}); }
    const std::map<Mono, Rational>& terms() const { return t_; }
    int degree_in(Var x) const;
    bool uses(Var x) const { return degree_in(x) > 0; }

    const Mono& lead_mono() const { return t_.begin()->first; }     // nonzero only
    const Rational& lead_coeff() const { return t_.begin()->second; } // nonzero only

    MultiPoly operator-() const;
    friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    MultiPoly operator*(const Rational& s) const;
    friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.t_ == b.t_; }
    friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

    // Exact division; throws when not exact.
    MultiPoly divexact(const MultiPoly& d) const;

    // Monic normalization over Q: leading graded-lex coefficient becomes 1.
    MultiPoly normalized() const;
    static MultiPoly gcd(const MultiPoly& a, const MultiPoly& b);

    // Substitute variable x by a polynomial.
    MultiPoly subst(Var x, const MultiPoly& value) const;
    // Rename variable x to y (y must be absent).
    MultiPoly rename(Var x, Var y) const;

    Rational eval(const Rational& ru, const Rational& rv, const Rational& ra) const;
    // Conversion to a univariate polynomial in x; all other variables must be absent.
    UniPoly to_unipoly(Var x) const;

    std::string str() const;

private:
    void add_term(const Mono& m, const Rational& c) {
        auto it = t_.find(m);
        if (it == t_.end()) {
            if (!c.is_zero()) t_[m] = c;
        } else {
            it->second += c;
            if (it->second.is_zero()) t_.erase(it);
        }
    }
    std::map<Mono, Rational> t_;
};

inline MultiPoly operator*(const Rational& s, const MultiPoly& p) { return p * s; }

// Reduced fraction of multivariate polynomials. Canonical form: gcd(num, den)
// constant and the denominator's leading graded-lex coefficient equal to 1.
class MultiRatFunc {
public:
    MultiRatFunc() : num_(0), den_(1) {}
    MultiRatFunc(const Rational& c) : num_(c), den_(1) {}
    MultiRatFunc(long c) : num_(c), den_(1) {}
    MultiRatFunc(MultiPoly num) : num_(std::move(num)), den_(1) {}
    MultiRatFunc(MultiPoly num, MultiPoly den) : num_(std::move(num)), den_(std::move(den)) {
        reduce();
    }
    static MultiRatFunc variable(Var x) { return MultiRatFunc(MultiPoly::variable(x)); }
    static MultiRatFunc from_ratfunc(const RatFunc& f, Var x) {
        return MultiRatFunc(MultiPoly::from_unipoly(f.num(), x), MultiPoly::from_unipoly(f.den(), x));
    }

    const MultiPoly& num() const { return num_; }
    const MultiPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    MultiRatFunc operator-() const { return MultiRatFunc(raw{}, -num_, den_); }
    friend MultiRatFunc operator+(const MultiRatFunc& a, const MultiRatFunc& b) {
        return MultiRatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend MultiRatFunc operator-(const MultiRatFunc& a, const MultiRatFunc& b) { return a + (-b); }
    friend MultiRatFunc operator*(const MultiRatFunc& a, const MultiRatFunc& b) {
        return MultiRatFunc(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend MultiRatFunc operator/(const MultiRatFunc& a, const MultiRatFunc& b) {
        if (b.is_zero()) throw Error("DivisionByZero", "division by zero");
        return MultiRatFunc(a.num_ * b.den_, a.den_ * b.num_);
    }
    friend bool operator==(const MultiRatFunc& a, const MultiRatFunc& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const MultiRatFunc& a, const MultiRatFunc& b) { return !(a == b); }

    MultiRatFunc subst(Var x, const MultiPoly& value) const {
        return MultiRatFunc(num_.subst(x, value), den_.subst(x, value));
    }
    MultiRatFunc rename(Var x, Var y) const {
        return MultiRatFunc(num_.rename(x, y), den_.rename(x, y));
    }
    Rational eval(const Rational& ru, const Rational& rv, const Rational& ra) const {
        Rational d = den_.eval(ru, rv, ra);
        if (d.is_zero()) throw Error("PoleEvaluation", "evaluation at a pole");
        return num_.eval(ru, rv, ra) / d;
    }
    bool den_vanishes_at(const Rational& ru, const Rational& rv, const Rational& ra) const {
        return den_.eval(ru, rv, ra).is_zero();
    }

    std::string str() const { return "(" + num_.str() + ")/(" + den_.str() + ")"; }

private:
    struct raw {};
    MultiRatFunc(raw, MultiPoly n, MultiPoly d) : num_(std::move(n)), den_(std::move(d)) {}
    void reduce();
    MultiPoly num_, den_;
};

// Identity test through canonical forms of the reduced cross difference.
bool mrf_equal(const MultiRatFunc& f, const MultiRatFunc& g);

} // namespace tyk

#endif
