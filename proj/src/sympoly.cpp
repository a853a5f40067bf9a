#include "tyk/sympoly.hpp"

#include <algorithm>

namespace tyk {

SymPoly::SymPoly(std::map<Rational, int> roots, Rational center)
    : roots_(std::move(roots)), center_(std::move(center)) {
    for (auto it = roots_.begin(); it != roots_.end();) {
        if (it->second == 0) it = roots_.erase(it);
        else if (it->second < 0) throw MalformedInput("negative root multiplicity");
        else ++it;
    }
    for (const auto& [r, mult] : roots_)
        if (multiplicity(center_ - r) != mult)
            throw MalformedInput("root multiset is not symmetric about " + center_.str());
}

int SymPoly::degree() const {
    int d = 0;
    for (const auto& [r, m] : roots_) d += m;
    return d;
}

SymPoly SymPoly::shift_arg(const Rational& s) const {
    std::map<Rational, int> out;
    for (const auto& [r, m] : roots_) out[r - s] = m;
    return SymPoly(std::move(out), center_ - s * Rational(2));
}

SymPoly operator*(const SymPoly& a, const SymPoly& b) {
    if (!a.roots_.empty() && !b.roots_.empty() && a.center_ != b.center_)
        throw MalformedInput("product of symmetric polynomials with different centers");
    std::map<Rational, int> out = a.roots_;
    for (const auto& [r, m] : b.roots_) out[r] += m;
    return SymPoly(std::move(out), a.roots_.empty() ? b.center_ : a.center_);
}

bool SymPoly::divisible_by(const SymPoly& d) const {
    for (const auto& [r, m] : d.roots_)
        if (multiplicity(r) < m) return false;
    return true;
}

SymPoly SymPoly::divide_exact(const SymPoly& d) const {
    if (!divisible_by(d)) throw NoSolution("polynomial division of root multisets not exact");
    std::map<Rational, int> out = roots_;
    for (const auto& [r, m] : d.roots_) {
        out[r] -= m;
        if (out[r] == 0) out.erase(r);
    }
    return SymPoly(std::move(out), center_);
}

std::string SymPoly::str() const {
    if (roots_.empty()) return "1";
    std::string out;
    for (const auto& [r, m] : roots_)
        for (int k = 0; k < m; ++k) {
            out += "(u";
            if (r.sign() > 0) out += "-" + r.str();
            else if (r.sign() < 0) out += "+" + (-r).str();
            else out += "-0";
            out += ")";
        }
    return out;
}

Rational DrinfeldTuple::center_of(const SymmetricPair& pair, int i) {
    if (i == 1) return pair.kappa() + Rational(pair.orthogonal() ? 1 : 2);
    return Rational(pair.n() - i + 2);
}

DrinfeldTuple DrinfeldTuple::trivial(const SymmetricPair& pair) {
    std::vector<SymPoly> polys;
    for (int i = 1; i <= pair.n(); ++i) polys.push_back(SymPoly::one(center_of(pair, i)));
    std::optional<Rational> alpha;
    if (pair.q() > 0) alpha = Rational(pair.N(), 4);
    return make(pair, alpha, std::move(polys));
}

DrinfeldTuple DrinfeldTuple::make(SymmetricPair pair, std::optional<Rational> alpha,
                                  std::vector<SymPoly> polys) {
    DrinfeldTuple t{std::move(pair), std::move(alpha), std::move(polys)};
    t.validate();
    return t;
}

void DrinfeldTuple::validate() const {
    if (polys.size() != static_cast<size_t>(pair.n()))
        throw MalformedInput("tuple needs n = " + std::to_string(pair.n()) + " polynomials");
    for (int i = 1; i <= pair.n(); ++i)
        if (!polys[i - 1].is_one() && polys[i - 1].center() != center_of(pair, i))
            throw MalformedInput("P_" + std::to_string(i) + " has the wrong symmetry center");
    if (pair.is_bcd0()) {
        if (alpha) throw MalformedInput("BCD0 tuples carry no alpha");
        return;
    }
    if (!alpha) throw MalformedInput("tuple requires alpha for q > 0");
    if (P(pair.kay() + 1).has_root(*alpha))
        throw MalformedInput("alpha must avoid the zero set of P_" +
                             std::to_string(pair.kay() + 1));
}

std::string DrinfeldTuple::str() const {
    std::string out = "(";
    out += alpha ? alpha->str() : std::string("-");
    for (const auto& p : polys) out += "; " + p.str();
    return out + ")";
}

std::pair<int, SymPoly> poly2_reduce(const SymPoly& p, const Rational& alpha, const Rational& m) {
    SymPoly q = p;
    const Rational& l = p.center();
    int steps = 0;
    while (q.has_root(alpha - m * Rational(steps))) {
        Rational r1 = alpha - m * Rational(steps);
        Rational r2 = l - r1;
        std::map<Rational, int> div{{r1, 1}};
        ++div[r2];
        q = q.divide_exact(SymPoly(std::move(div), l));
        ++steps;
    }
    return {steps, q};
}

namespace {

// Multiset chain matching for reduced g = A/B = P(u+m)/P(u): numerator roots
// are chain starts minus m, denominator roots are chain ends.
std::optional<std::map<Rational, int>> chains_from(const std::map<Rational, int>& aroots,
                                                   const std::map<Rational, int>& broots,
                                                   const Rational& m) {
    // Partition by residue class of r/m mod 1.
    auto key_of = [&](const Rational& r) {
        Rational t = r / m;
        return t - Rational(t.floor());
    };
    std::map<Rational, std::pair<std::vector<Rational>, std::vector<Rational>>> classes;
    for (const auto& [r, mult] : aroots)
        for (int k = 0; k < mult; ++k) classes[key_of(r)].first.push_back(r);
    for (const auto& [r, mult] : broots)
        for (int k = 0; k < mult; ++k) classes[key_of(r)].second.push_back(r);

    std::map<Rational, int> roots;
    for (auto& [key, ab] : classes) {
        auto& [as, bs] = ab;
        if (as.size() != bs.size()) return std::nullopt;
        std::sort(as.begin(), as.end());
        std::sort(bs.begin(), bs.end());
        for (size_t i = 0; i < as.size(); ++i) {
            Rational len = (bs[i] - as[i]) / m;
            if (!len.is_integer() || len < Rational(1)) return std::nullopt;
            for (Rational r = as[i] + m; r <= bs[i]; r += m) ++roots[r];
        }
    }
    return roots;
}

bool verify_plain(const RatFunc& g, const UniPoly& p, const Rational& m) {
    return g.num() * p == g.den() * p.shift(m);
}

std::optional<SymPoly> solve_plain(const RatFunc& f, const Rational& m, const Rational& l) {
    if (f.num().degree() != f.den().degree()) return std::nullopt;
    if (f.num().lc() != f.den().lc()) return std::nullopt;
    auto aroots = f.num().monic().rational_roots();
    auto broots = f.den().rational_roots();
    auto chained = chains_from(aroots, broots, m);
    if (!chained) return std::nullopt;
    // True symmetry about l: the multiset is closed and the self-centered
    // root has even multiplicity, so that P(u) = P(-u+l) holds literally.
    // (Without the evenness constraint the factorization is not unique.)
    auto central = chained->find(l / Rational(2));
    if (central != chained->end() && central->second % 2 != 0) return std::nullopt;
    SymPoly cand;
    try {
        cand = SymPoly(*chained, l);
    } catch (const MalformedInput&) {
        return std::nullopt;
    }
    if (!verify_plain(f, cand.expand(), m)) return std::nullopt;
    return cand;
}

} // namespace

ShiftQuotientSolution solve_shift_quotient(const RatFunc& f, const Rational& m, const Rational& l,
                                           bool with_alpha) {
    if (f.is_zero()) throw NoSolution("zero ratio");
    if (!with_alpha) {
        auto p = solve_plain(f, m, l);
        if (!p) throw NoSolution("ratio is not a symmetric shift quotient");
        return {*p, std::nullopt};
    }
    if (f.num().degree() != f.den().degree() || f.num().lc() != -f.den().lc())
        throw NoSolution("ratio with alpha factor must have leading coefficient -1");

    std::vector<Rational> candidates;
    for (const auto& [r, mult] : f.num().monic().rational_roots()) candidates.push_back(r);
    candidates.push_back((l - m) / Rational(2)); // the case alpha = l - m - alpha
    RatFunc u = RatFunc::variable();

    std::optional<ShiftQuotientSolution> found;
    for (const Rational& a : candidates) {
        RatFunc factor = (RatFunc(a) - u) / (RatFunc(a - l + m) + u);
        if (factor.is_zero()) continue;
        auto p = solve_plain(f / factor, m, l);
        if (!p || p->has_root(a)) continue;
        if (found && !(found->P == *p && found->alpha == a))
            throw Error("InternalCheck", "shift-quotient solution is not unique");
        found = ShiftQuotientSolution{*p, a};
    }
    if (!found) throw NoSolution("no (P, alpha) factorization over Q");
    return *found;
}

} // namespace tyk
