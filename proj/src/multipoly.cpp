#include "tyk/multipoly.hpp"

#include <algorithm>

namespace tyk {

MultiPoly MultiPoly::from_unipoly(const UniPoly& p, Var x) {
    MultiPoly out;
    for (int i = 0; i <= p.degree(); ++i) {
        if (p.at(i).is_zero()) continue;
        Mono m;
        m.e[static_cast<int>(x)] = i;
        out.t_[m] = p.at(i);
    }
    return out;
}

int MultiPoly::degree_in(Var x) const {
    int d = 0;
    for (const auto& [m, c] : t_) d = std::max(d, m.e[static_cast<int>(x)]);
    return d;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r = *this;
    for (auto& [m, c] : r.t_) c = -c;
    return r;
}

MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly r = a;
    for (const auto& [m, c] : b.t_) r.add_term(m, c);
    return r;
}

MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) { return a + (-b); }

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly r;
    for (const auto& [ma, ca] : a.t_)
        for (const auto& [mb, cb] : b.t_) r.add_term(ma * mb, ca * cb);
    return r;
}

MultiPoly MultiPoly::operator*(const Rational& s) const {
    if (s.is_zero()) return MultiPoly();
    MultiPoly r = *this;
    for (auto& [m, c] : r.t_) c *= s;
    return r;
}

MultiPoly MultiPoly::divexact(const MultiPoly& d) const {
    if (d.is_zero()) throw Error("DivisionByZero", "multivariate division by zero");
    MultiPoly rem = *this, quot;
    while (!rem.is_zero()) {
        const Mono& lm = rem.lead_mono();
        if (!d.lead_mono().divides(lm))
            throw Error("InexactDivision", "multivariate division was not exact");
        Mono q = lm.quot(d.lead_mono());
        Rational c = rem.lead_coeff() / d.lead_coeff();
        MultiPoly term;
        term.t_[q] = c;
        quot = quot + term;
        rem = rem - term * d;
    }
    return quot;
}

MultiPoly MultiPoly::normalized() const {
    if (is_zero()) return *this;
    return *this * lead_coeff().inv();
}

namespace {

// View of a polynomial as univariate in `x` with MultiPoly coefficients.
std::vector<MultiPoly> coeffs_in(const MultiPoly& p, Var x) {
    std::vector<MultiPoly> cs(p.degree_in(x) + 1);
    for (const auto& [m, c] : p.terms()) {
        int k = m.e[static_cast<int>(x)];
        MultiPoly term(c);
        for (int i = 0; i < 3; ++i)
            if (i != static_cast<int>(x) && m.e[i] > 0)
                term = term * MultiPoly::variable(static_cast<Var>(i), m.e[i]);
        cs[k] = cs[k] + term;
    }
    return cs;
}

MultiPoly assemble(const std::vector<MultiPoly>& cs, Var x) {
    MultiPoly out;
    for (size_t k = 0; k < cs.size(); ++k) {
        if (cs[k].is_zero()) continue;
        out = out + (k == 0 ? cs[k] : cs[k] * MultiPoly::variable(x, static_cast<int>(k)));
    }
    return out;
}

int deg_of(const std::vector<MultiPoly>& cs) {
    for (int i = static_cast<int>(cs.size()) - 1; i >= 0; --i)
        if (!cs[i].is_zero()) return i;
    return -1;
}

// Pseudo-remainder of A by B, both univariate in x over Q[rest].
std::vector<MultiPoly> prem(std::vector<MultiPoly> A, const std::vector<MultiPoly>& B) {
    int db = deg_of(B);
    const MultiPoly& lb = B[db];
    int da = deg_of(A);
    while (da >= db && da >= 0) {
        MultiPoly la = A[da];
        std::vector<MultiPoly> next(std::max<size_t>(A.size(), 1));
        for (int i = 0; i <= da; ++i) next[i] = A[i] * lb;
        for (int i = 0; i <= db; ++i)
            next[i + da - db] = next[i + da - db] - B[i] * la;
        next[da] = MultiPoly();
        A = std::move(next);
        da = deg_of(A);
    }
    A.resize(std::max(da + 1, 1));
    return A;
}

MultiPoly content_of(const std::vector<MultiPoly>& cs) {
    MultiPoly g;
    for (const auto& c : cs)
        if (!c.is_zero()) g = MultiPoly::gcd(g, c);
    return g;
}

} // namespace

namespace {

// Scale to integer coefficients and divide by the integer content; the
// leading graded-lex coefficient is made positive.
MultiPoly int_primitive(const MultiPoly& p) {
    if (p.is_zero()) return p;
    Int l = 1;
    for (const auto& [m, c] : p.terms()) l = boost::multiprecision::lcm(l, c.den());
    Int g = 0;
    for (const auto& [m, c] : p.terms())
        g = boost::multiprecision::gcd(g, boost::multiprecision::abs(c.num() * (l / c.den())));
    MultiPoly out = p * Rational(l, g);
    if (out.lead_coeff().sign() < 0) out = -out;
    return out;
}

Int maxnorm(const MultiPoly& p) {
    Int m = 0;
    for (const auto& [mono, c] : p.terms()) {
        Int a = boost::multiprecision::abs(c.num());
        if (a > m) m = a;
    }
    return m;
}

bool divides_exactly(const MultiPoly& d, const MultiPoly& p, MultiPoly* quot = nullptr) {
    try {
        MultiPoly q = p.divexact(d);
        if (quot) *quot = std::move(q);
        return true;
    } catch (const Error&) {
        return false;
    }
}

Int icontent(const MultiPoly& p) {
    Int g = 0;
    for (const auto& [m, c] : p.terms()) g = boost::multiprecision::gcd(g, c.num());
    return g < 0 ? Int(-g) : g;
}

// Heuristic gcd of integer-coefficient polynomials: evaluation at a large
// integer, balanced xi-adic reconstruction, exact trial division. A failure
// falls through to the remainder-sequence path.
bool heur_gcd(const MultiPoly& a, const MultiPoly& b, MultiPoly& out) {
    std::optional<Var> x;
    for (Var t : {Var::u, Var::v, Var::a})
        if (a.uses(t) || b.uses(t)) {
            x = t;
            break;
        }
    if (a.is_zero() || b.is_zero()) return false; // unlucky evaluation upstream
    if (!x) { // integer base case
        Int g = boost::multiprecision::gcd(a.lead_coeff().num(), b.lead_coeff().num());
        out = MultiPoly(Rational(g));
        return true;
    }
    Int ca = icontent(a), cb = icontent(b);
    Int cg = boost::multiprecision::gcd(ca, cb);
    MultiPoly ap = a * Rational(Int(1), ca), bp = b * Rational(Int(1), cb);
    Int na = maxnorm(ap), nb = maxnorm(bp);
    Int xi = 2 * (na < nb ? na : nb) + 29;
    for (int round = 0; round < 6; ++round) {
        MultiPoly ea = ap.subst(*x, MultiPoly(Rational(xi)));
        MultiPoly eb = bp.subst(*x, MultiPoly(Rational(xi)));
        MultiPoly gamma;
        if (!ea.is_zero() && !eb.is_zero() && heur_gcd(ea, eb, gamma) && !gamma.is_zero()) {
            // balanced xi-adic digits of every coefficient
            MultiPoly g;
            bool clean = true;
            for (int k = 0; !gamma.is_zero(); ++k) {
                if (k > 512) {
                    clean = false;
                    break;
                }
                MultiPoly digit;
                for (const auto& [m, c] : gamma.terms()) {
                    Int r = c.num() % xi;
                    if (r < 0) r += xi;
                    if (2 * r > xi) r -= xi;
                    if (r != 0) {
                        MultiPoly term{Rational(r)};
                        for (int i = 0; i < 3; ++i)
                            if (m.e[i] > 0)
                                term = term * MultiPoly::variable(static_cast<Var>(i), m.e[i]);
                        digit = digit + term;
                    }
                }
                g = g + digit * MultiPoly::variable(*x, k);
                gamma = (gamma - digit) * Rational(Int(1), xi);
            }
            if (clean && !g.is_zero()) {
                g = int_primitive(g);
                if (divides_exactly(g, ap) && divides_exactly(g, bp)) {
                    out = g * Rational(cg);
                    return true;
                }
            }
        }
        xi = xi * 73794 / 27011 + 37;
    }
    return false;
}

} // namespace

MultiPoly MultiPoly::gcd(const MultiPoly& a, const MultiPoly& b) {
    if (a.is_zero()) return b.normalized();
    if (b.is_zero()) return a.normalized();
    Var main = Var::u;
    bool found = false;
    for (Var x : {Var::u, Var::v, Var::a}) {
        if (a.uses(x) || b.uses(x)) {
            main = x;
            found = true;
            break;
        }
    }
    if (!found) return MultiPoly(1); // both nonzero constants

    MultiPoly heur;
    if (heur_gcd(int_primitive(a), int_primitive(b), heur)) return heur.normalized();

    auto A = coeffs_in(a, main), B = coeffs_in(b, main);
    MultiPoly ca = content_of(A), cb = content_of(B);
    MultiPoly gamma = gcd(ca, cb);
    // primitive parts
    for (auto& c : A)
        if (!c.is_zero()) c = c.divexact(ca);
    for (auto& c : B)
        if (!c.is_zero()) c = c.divexact(cb);

    // Primitive PRS in the main variable.
    if (deg_of(A) < deg_of(B)) std::swap(A, B);
    while (deg_of(B) >= 0) {
        auto R = prem(A, B);
        if (deg_of(R) >= 0) {
            MultiPoly cr = content_of(R);
            for (auto& c : R)
                if (!c.is_zero()) c = c.divexact(cr);
        }
        A = std::move(B);
        B = std::move(R);
    }

    MultiPoly pp = assemble(A, main);
    return (gamma * pp).normalized();
}

MultiPoly MultiPoly::subst(Var x, const MultiPoly& value) const {
    int ix = static_cast<int>(x);
    // Cache powers of the replacement.
    std::vector<MultiPoly> pows{MultiPoly(1)};
    MultiPoly out;
    for (const auto& [m, c] : t_) {
        int k = m.e[ix];
        while (static_cast<int>(pows.size()) <= k) pows.push_back(pows.back() * value);
        Mono rest = m;
        rest.e[ix] = 0;
        MultiPoly term(c);
        for (int i = 0; i < 3; ++i)
            if (rest.e[i] > 0) term = term * MultiPoly::variable(static_cast<Var>(i), rest.e[i]);
        out = out + term * pows[k];
    }
    return out;
}

MultiPoly MultiPoly::rename(Var x, Var y) const {
    if (uses(y)) throw Error("BadRename", "target variable already present");
    MultiPoly out;
    int ix = static_cast<int>(x), iy = static_cast<int>(y);
    for (const auto& [m, c] : t_) {
        Mono moved = m;
        moved.e[iy] = moved.e[ix];
        moved.e[ix] = 0;
        out.t_[moved] = c;
    }
    return out;
}

Rational MultiPoly::eval(const Rational& ru, const Rational& rv, const Rational& ra) const {
    Rational acc(0);
    for (const auto& [m, c] : t_)
        acc += c * ru.pow(m.e[0]) * rv.pow(m.e[1]) * ra.pow(m.e[2]);
    return acc;
}

UniPoly MultiPoly::to_unipoly(Var x) const {
    std::vector<Rational> cs(degree_in(x) + 1, Rational(0));
    int ix = static_cast<int>(x);
    for (const auto& [m, c] : t_) {
        for (int i = 0; i < 3; ++i)
            if (i != ix && m.e[i] != 0)
                throw Error("NotUnivariate", "polynomial involves another variable");
        cs[m.e[ix]] = c;
    }
    return UniPoly(std::move(cs));
}

std::string MultiPoly::str() const {
    if (is_zero()) return "0";
    static const char* names[3] = {"u", "v", "a"};
    std::string out;
    for (const auto& [m, c] : t_) {
        if (!out.empty()) out += c.sign() > 0 ? " + " : " - ";
        else if (c.sign() < 0) out += "-";
        Rational ab = c.abs();
        bool wrote = false;
        if (ab != Rational(1) || m == Mono{}) {
            out += ab.str();
            wrote = true;
        }
        for (int i = 0; i < 3; ++i) {
            if (m.e[i] == 0) continue;
            if (wrote) out += "*";
            out += names[i];
            if (m.e[i] > 1) out += "^" + std::to_string(m.e[i]);
            wrote = true;
        }
    }
    return out;
}

void MultiRatFunc::reduce() {
    if (den_.is_zero()) throw Error("DivisionByZero", "fraction with zero denominator");
    if (num_.is_zero()) {
        den_ = MultiPoly(1);
        return;
    }
    // Repeat until the gcd degenerates, so that normalization is idempotent
    // even if one pass extracts only part of the common factor.
    for (;;) {
        MultiPoly g = MultiPoly::gcd(num_, den_);
        if (g.is_constant()) break;
        num_ = num_.divexact(g);
        den_ = den_.divexact(g);
    }
    Rational l = den_.lead_coeff();
    if (l != Rational(1)) {
        num_ = num_ * l.inv();
        den_ = den_ * l.inv();
    }
}

bool mrf_equal(const MultiRatFunc& f, const MultiRatFunc& g) {
    return f.num() * g.den() == g.num() * f.den();
}

} // namespace tyk
