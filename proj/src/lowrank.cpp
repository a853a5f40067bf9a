#include "tyk/lowrank.hpp"

#include "tyk/reflection.hpp"

namespace tyk {

bool y2_check(const Y2Data& d) {
    if (!d.p_circ.is_monic() && !d.p_circ.is_one()) return false;
    if (d.p_circ != d.p_circ.reflect(Rational(1))) return false;
    if (d.p_circ.eval(d.gamma_circ).is_zero()) return false;
    RatFunc u = RatFunc::variable();
    RatFunc lhs = d.mu_circ.compose_affine(-1, Rational(0)) / d.mu_circ;
    RatFunc rhs = (u * Rational(2) + RatFunc(Rational(1))) /
                  (u * Rational(2) - RatFunc(Rational(1))) *
                  (RatFunc(d.p_circ.shift(Rational(1))) / RatFunc(d.p_circ)) *
                  ((u - RatFunc(d.gamma_circ)) / (u + RatFunc(d.gamma_circ)));
    return lhs == rhs;
}

HighestWeight ev_so3_weight(const Rational& mu) {
    SymmetricPair sp = SymmetricPair::make(true, 3, 1);
    Rational d(1, 4);
    UniPoly u = UniPoly::variable();
    UniPoly den = (u - UniPoly(d)) * (u + UniPoly(d)); // u^2 - d^2
    UniPoly num0 = UniPoly(-1) * den + UniPoly(d * Rational(2)) *
                                           (UniPoly(mu * mu * Rational(2)) - (u + UniPoly(d)));
    UniPoly num1 = den + UniPoly(mu * Rational(2)) * (u + UniPoly(d * mu * Rational(2)));
    return HighestWeight(sp, {RatFunc(num0, den), RatFunc(num1, den)});
}

MatN ev_so3_matrix(const std::optional<Rational>& mu) {
    SymmetricPair sp = SymmetricPair::make(true, 3, 1);
    MultiRatFunc f11 = mu ? MultiRatFunc(*mu * Rational(2))
                          : MultiRatFunc::variable(Var::a) * Rational(2);
    MultiRatFunc u = MultiRatFunc::variable(Var::u);
    Rational d(1, 4);
    MatN S(sp);
    for (int i : sp.indices()) {
        MultiRatFunc f = f11 * Rational(i); // F^rho_ii = 2 mu * sign(i), zero at i = 0
        MultiRatFunc val =
            (u * sp.g_entry(i) - MultiRatFunc(d) + (f11 * f11 * d + u * f) / (u + MultiRatFunc(d))) /
            (u - MultiRatFunc(d));
        S.set(i, i, val);
    }
    return S;
}

HighestWeight ev_so4_weight(const Rational& mu1, const Rational& mu2) {
    SymmetricPair sp = SymmetricPair::make(true, 4, 2);
    UniPoly u = UniPoly::variable();
    UniPoly u2 = u * u;
    Rational c = mu1 * mu1 - mu2 * mu2;
    auto comp = [&](const Rational& g, const Rational& m) {
        UniPoly num = u2 * g + u * (g * m * Rational(2)) + UniPoly(c);
        return RatFunc(num, u2);
    };
    return HighestWeight(sp, {comp(sp.g_entry(1), mu1), comp(sp.g_entry(2), mu2)});
}

MatN ev_so4_matrix(const std::optional<Rational>& mu1, const std::optional<Rational>& mu2) {
    if (!mu1 && !mu2) throw MalformedInput("at most one evaluation parameter may be symbolic");
    SymmetricPair sp = SymmetricPair::make(true, 4, 2);
    MultiRatFunc m1 = mu1 ? MultiRatFunc(*mu1) : MultiRatFunc::variable(Var::a);
    MultiRatFunc m2 = mu2 ? MultiRatFunc(*mu2) : MultiRatFunc::variable(Var::a);
    MultiRatFunc u = MultiRatFunc::variable(Var::u);
    MultiRatFunc c = m1 * m1 - m2 * m2;
    MatN S(sp);
    for (int i : sp.indices()) {
        MultiRatFunc f = (std::abs(i) == 1 ? m1 : m2) * Rational(i > 0 ? 1 : -1);
        Rational g = sp.g_entry(i);
        S.set(i, i, MultiRatFunc(g) + f * (g * Rational(2)) / u + c / (u * u));
    }
    return S;
}

So3Data so3_tuple(const HighestWeight& w) {
    if (w.pair().family() != Family::SO3)
        throw UnsupportedPair("so3 classification data needs the pair (so3, so2)");
    if (!check_nontrivial(w))
        throw NotClassifiable("weight fails the non-triviality relations");
    TildeWeight t = tilde(w);
    try {
        auto sol = solve_shift_quotient(t.at(0) / t.at(1), Rational(1, 2), Rational(3, 2), true);
        return So3Data{sol.P, *sol.alpha};
    } catch (const NoSolution& e) {
        throw NotClassifiable(e.what());
    }
}

So4Data so4_tuple(const HighestWeight& w) {
    if (w.pair().family() != Family::SO4)
        throw UnsupportedPair("so4 classification data needs the pair (so4, so2+so2)");
    if (!check_nontrivial(w))
        throw NotClassifiable("weight fails the non-triviality relations");
    TildeWeight t = tilde(w);
    RatFunc u = RatFunc::variable();
    try {
        auto sol1 = solve_shift_quotient(t.at(1) / t.at(2), Rational(1), Rational(2), true);
        RatFunc f2 = t.at(1).reflect_arg(Rational(1)) / t.at(2) *
                     ((RatFunc(Rational(1)) - u) / u);
        auto sol2 = solve_shift_quotient(f2, Rational(1), Rational(2), true);
        return So4Data{sol2.P, sol1.P, *sol1.alpha, *sol2.alpha};
    } catch (const NoSolution& e) {
        throw NotClassifiable(e.what());
    }
}

Y2Data y2_from_ev_so3(const Rational& mu) {
    UniPoly u = UniPoly::variable();
    RatFunc mc(u + UniPoly(mu * Rational(2) + Rational(1, 2)), u + UniPoly(Rational(1, 2)));
    return Y2Data{mc, UniPoly(1), mu * Rational(2) + Rational(1, 2)};
}

Y2Data y2_from_so3_tuple(const So3Data& d, RatFunc mu_circ) {
    std::map<Rational, int> roots;
    for (const auto& [r, m] : d.P.roots()) roots[r * Rational(2) - Rational(1)] = m;
    return Y2Data{std::move(mu_circ), UniPoly::from_roots(roots),
                  d.alpha * Rational(2) - Rational(1)};
}

OneDimCatalog onedim_catalog(const SymmetricPair& pair) {
    switch (pair.family()) {
        case Family::SO3:
            return {OneDimKind::So3Family, 1,
                    "one-parameter family V(mu); V(G) is the member mu = 0"};
        case Family::SO4:
            return {OneDimKind::So4Family, 2,
                    "two-parameter family V(mu1, mu2); V(G) is the member (0, 0)"};
        default:
            break;
    }
    if (pair.q_is_so2())
        return {OneDimKind::OneParameter, 1,
                "one-parameter family V(a) with tuple (kappa - a, 1, ..., 1)"};
    return {OneDimKind::TrivialOnly, 0,
            "only the trivial representation V(G), up to even twists"};
}

HighestWeight onedim_weight(const SymmetricPair& pair, const std::vector<Rational>& params) {
    OneDimCatalog cat = onedim_catalog(pair);
    if (static_cast<int>(params.size()) != cat.params)
        throw MalformedInput("this family takes " + std::to_string(cat.params) + " parameter(s)");
    switch (cat.kind) {
        case OneDimKind::TrivialOnly: return trivial_weight(pair);
        case OneDimKind::OneParameter: return kmatrix_weight(pair, params[0]);
        case OneDimKind::So3Family: return ev_so3_weight(params[0]);
        case OneDimKind::So4Family: return ev_so4_weight(params[0], params[1]);
    }
    throw Error("Internal", "unreachable");
}

} // namespace tyk
