#include "tyk/ratfunc.hpp"

namespace tyk {

void RatFunc::reduce() {
    if (den_.is_zero()) throw Error("DivisionByZero", "rational function with zero denominator");
    if (num_.is_zero()) {
        den_ = UniPoly(1);
        return;
    }
    UniPoly g = UniPoly::gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = num_.divexact(g);
        den_ = den_.divexact(g);
    }
    Rational l = den_.lc();
    if (l != Rational(1)) {
        num_ = num_ * l.inv();
        den_ = den_ * l.inv();
    }
}

Rational RatFunc::eval(const Rational& x) const {
    Rational d = den_.eval(x);
    if (d.is_zero()) throw Error("PoleEvaluation", "evaluation at a pole");
    return num_.eval(x) / d;
}

Rational RatFunc::value_at_infinity() const {
    if (!proper_at_infinity()) throw ImproperAtInfinity("deg num > deg den");
    if (num_.degree() < den_.degree()) return Rational(0);
    return num_.lc() / den_.lc();
}

std::vector<Rational> RatFunc::series_at_infinity(int k) const {
    if (!proper_at_infinity())
        throw ImproperAtInfinity("series_at_infinity requires deg num <= deg den");
    std::vector<Rational> out(k, Rational(0));
    if (num_.is_zero() || k <= 0) return out;
    int dn = num_.degree(), dd = den_.degree();
    int shift = dd - dn;
    // In x = 1/u: f = x^shift * rev(num)(x) / rev(den)(x).
    auto rev = [](const UniPoly& p, int deg) {
        std::vector<Rational> v(deg + 1);
        for (int i = 0; i <= deg; ++i) v[i] = p.at(deg - i);
        return v;
    };
    std::vector<Rational> n = rev(num_, dn), d = rev(den_, dd);
    std::vector<Rational> q(k, Rational(0));
    for (int t = 0; t + shift < k; ++t) {
        Rational acc = t < static_cast<int>(n.size()) ? n[t] : Rational(0);
        for (int j = 1; j <= t && j < static_cast<int>(d.size()); ++j) acc -= d[j] * q[t - j];
        q[t] = acc / d[0];
    }
    for (int t = 0; t + shift < k; ++t) out[t + shift] = q[t];
    return out;
}

std::string RatFunc::str(const std::string& var) const {
    if (den_.is_one()) return num_.str(var);
    return "(" + num_.str(var) + ")/(" + den_.str(var) + ")";
}

} // namespace tyk
