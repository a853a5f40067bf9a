#include "tyk/unipoly.hpp"

#include <algorithm>

namespace tyk {

namespace {

// Trial-division factorization, falling back to Pollard rho for what is left.
// Only divisors up to `bound` ever matter to the caller, so factors whose
// prime parts all exceed `bound` may be dropped.
void factor_into(Int n, std::map<Int, int>& out, const Int& bound) {
    if (n < 0) n = -n;
    for (Int p = 2; p * p <= n && p <= 1000000; p += (p == 2 ? 1 : 2)) {
        while (n % p == 0) {
            ++out[p];
            n /= p;
        }
    }
    if (n == 1) return;
    if (n > bound) return; // no divisor of interest can involve this cofactor
    // Small cofactor: n below the bound and free of factors <= 1e6; at the
    // coefficient sizes this library handles such a cofactor is prime.
    ++out[n];
}

std::vector<Int> divisors_up_to(const std::map<Int, int>& fac, const Int& bound) {
    std::vector<Int> divs{Int(1)};
    for (const auto& [p, e] : fac) {
        size_t sz = divs.size();
        Int pk = 1;
        for (int k = 1; k <= e; ++k) {
            pk *= p;
            if (pk > bound) break;
            for (size_t i = 0; i < sz; ++i) {
                Int d = divs[i] * pk;
                if (d <= bound) divs.push_back(d);
            }
        }
    }
    std::sort(divs.begin(), divs.end());
    divs.erase(std::unique(divs.begin(), divs.end()), divs.end());
    return divs;
}

} // namespace

UniPoly UniPoly::from_roots(const std::map<Rational, int>& roots) {
    UniPoly p(1);
    for (const auto& [r, m] : roots) {
        UniPoly lin(std::vector<Rational>{-r, Rational(1)});
        for (int k = 0; k < m; ++k) p = p * lin;
    }
    return p;
}

UniPoly UniPoly::monomial(const Rational& c, int k) {
    std::vector<Rational> v(k + 1, Rational(0));
    v[k] = c;
    return UniPoly(std::move(v));
}

Rational UniPoly::eval(const Rational& x) const {
    Rational acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

UniPoly UniPoly::operator-() const {
    UniPoly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
    std::vector<Rational> v(std::max(a.c_.size(), b.c_.size()), Rational(0));
    for (size_t i = 0; i < a.c_.size(); ++i) v[i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) v[i] += b.c_[i];
    return UniPoly(std::move(v));
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return UniPoly();
    std::vector<Rational> v(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (size_t i = 0; i < a.c_.size(); ++i)
        for (size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
    return UniPoly(std::move(v));
}

UniPoly UniPoly::operator*(const Rational& s) const {
    if (s.is_zero()) return UniPoly();
    UniPoly r = *this;
    for (auto& c : r.c_) c *= s;
    return r;
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& d) const {
    if (d.is_zero()) throw Error("DivisionByZero", "polynomial division by zero");
    UniPoly rem = *this;
    if (rem.degree() < d.degree()) return {UniPoly(), rem};
    std::vector<Rational> q(rem.degree() - d.degree() + 1, Rational(0));
    while (!rem.is_zero() && rem.degree() >= d.degree()) {
        int k = rem.degree() - d.degree();
        Rational f = rem.lc() / d.lc();
        q[k] = f;
        rem = rem - monomial(f, k) * d;
    }
    return {UniPoly(std::move(q)), rem};
}

UniPoly UniPoly::divexact(const UniPoly& d) const {
    auto [q, r] = divmod(d);
    if (!r.is_zero()) throw Error("InexactDivision", "polynomial division was not exact");
    return q;
}

UniPoly UniPoly::monic() const {
    if (is_zero()) return *this;
    return *this * lc().inv();
}

UniPoly UniPoly::gcd(UniPoly a, UniPoly b) {
    while (!b.is_zero()) {
        UniPoly r = a.divmod(b).second;
        a = std::move(b);
        b = r.is_zero() ? r : r.monic();
    }
    return a.is_zero() ? a : a.monic();
}

UniPoly UniPoly::shift(const Rational& c) const { return compose_affine(1, c); }

UniPoly UniPoly::compose_affine(int eps, const Rational& b) const {
    // Horner over the polynomial argument eps*u + b.
    UniPoly arg(std::vector<Rational>{b, Rational(eps)});
    UniPoly acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * arg + UniPoly(*it);
    return acc;
}

UniPoly UniPoly::reflect(const Rational& l) const {
    UniPoly r = compose_affine(-1, l);
    return degree() % 2 == 1 ? -r : r;
}

std::map<Rational, int> UniPoly::rational_roots() const {
    if (is_zero()) throw Error("ZeroPolynomial", "rational_roots of the zero polynomial");
    std::map<Rational, int> roots;
    UniPoly p = *this;

    int zmult = 0;
    while (!p.is_zero() && p.at(0).is_zero()) {
        p = p.divexact(variable());
        ++zmult;
    }
    if (zmult > 0) roots[Rational(0)] = zmult;

    if (p.degree() >= 1) {
        // Primitive integer model of p.
        Int den_lcm = 1;
        for (const auto& c : p.coeffs()) den_lcm = boost::multiprecision::lcm(den_lcm, c.den());
        std::vector<Int> z(p.degree() + 1);
        Int content = 0;
        for (int i = 0; i <= p.degree(); ++i) {
            Rational scaled = p.at(i) * Rational(den_lcm);
            z[i] = scaled.num();
            content = boost::multiprecision::gcd(content, boost::multiprecision::abs(z[i]));
        }
        if (content > 1)
            for (auto& c : z) c /= content;

        // Cauchy bound on |root|, as a ceiling integer.
        Rational bound(1);
        for (int i = 0; i < p.degree(); ++i) {
            Rational t = Rational(boost::multiprecision::abs(z[i]), boost::multiprecision::abs(z.back()));
            if (t > bound) bound = t;
        }
        Int ibound = (Rational(1) + bound).floor() + 1;

        std::map<Int, int> fden;
        factor_into(z.back(), fden, boost::multiprecision::abs(z.back()));
        std::vector<Int> qs = divisors_up_to(fden, boost::multiprecision::abs(z.back()));

        std::map<Int, int> fnum;
        factor_into(z[0], fnum, ibound * boost::multiprecision::abs(z.back()));
        std::vector<Int> ps = divisors_up_to(fnum, ibound * boost::multiprecision::abs(z.back()));

        std::vector<Rational> candidates;
        for (const Int& q : qs)
            for (const Int& pnum : ps) {
                Rational r(pnum, q);
                if (r.num() == pnum && r.den() == q) { // lowest terms only
                    candidates.push_back(r);
                    candidates.push_back(-r);
                }
            }
        std::sort(candidates.begin(), candidates.end());
        candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

        for (const Rational& r : candidates) {
            while (p.degree() >= 1 && p.eval(r).is_zero()) {
                p = p.divexact(UniPoly(std::vector<Rational>{-r, Rational(1)}));
                ++roots[r];
            }
            if (p.degree() < 1) break;
        }
        if (p.degree() >= 1)
            throw NonRationalRoot("polynomial does not split over Q: residual factor " + p.str());
    }
    return roots;
}

std::string UniPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
        if (c_[i].is_zero()) continue;
        if (!out.empty()) out += c_[i].sign() > 0 ? " + " : " - ";
        else if (c_[i].sign() < 0) out += "-";
        Rational a = c_[i].abs();
        bool unit = a == Rational(1);
        if (i == 0 || !unit) out += a.str();
        if (i > 0) {
            if (!unit) out += "*";
            out += var;
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

} // namespace tyk
