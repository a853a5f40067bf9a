#include "tyk/reflection.hpp"

namespace tyk {

namespace {

MultiPoly poly_u() { return MultiPoly::variable(Var::u); }
MultiPoly poly_v() { return MultiPoly::variable(Var::v); }

} // namespace

IdentityReport check_reflection_equation(const SymmetricPair& pair, const MatN& S) {
    IdentityReport rep;
    rep.identity = "RE";
    MatN Sv = S.rename_var(Var::u, Var::v);
    MatNN S1 = MatNN::embed_first(S);
    MatNN S2 = MatNN::embed_second(Sv);
    MatNN Rm = rmatrix_at(pair, poly_u() - poly_v());
    MatNN Rp = rmatrix_at(pair, poly_u() + poly_v());
    MatNN lhs = Rm * S1 * Rp * S2;
    MatNN rhs = S2 * Rp * S1 * Rm;
    MatNN diff = lhs - rhs;
    auto w = diff.first_nonzero();
    rep.holds = !w.has_value();
    if (w) {
        auto [r, c, val] = *w;
        rep.witness = {r.first, r.second, c.first, c.second};
        rep.witness_value = val.str();
    }
    return rep;
}

IdentityReport check_symmetry_relation(const SymmetricPair& pair, const MatN& S) {
    IdentityReport rep;
    rep.identity = "SYM";
    Rational k = pair.kappa();
    MultiPoly refl = MultiPoly(k) - poly_u();
    MatN Sk = S.subst_u(refl);
    MultiRatFunc inv1(MultiPoly(1), poly_u() * Rational(2) - MultiPoly(k));
    MultiRatFunc inv2(MultiPoly(1), poly_u() * Rational(2) - MultiPoly(k * Rational(2)));
    MultiRatFunc trg = MultiRatFunc::from_ratfunc(trace_g_u(pair), Var::u);
    MatN rhs = Sk + (S - Sk) * (inv1 * Rational(pair.pm())) +
               (Sk * trg - MatN::identity(pair) * S.trace()) * inv2;
    MatN diff = S.transpose_t() - rhs;
    rep.holds = diff.is_zero();
    if (!rep.holds) {
        const auto& [key, val] = *diff.entries().begin();
        rep.witness = {key.first, key.second};
        rep.witness_value = val.str();
    }
    return rep;
}

IdentityReport check_trace_identity(const SymmetricPair& pair, const MatN& S) {
    IdentityReport rep;
    rep.identity = "TRACE";
    Rational k = pair.kappa();
    MultiRatFunc p = MultiRatFunc::from_ratfunc(p_function(pair), Var::u);
    MultiRatFunc pI = MultiRatFunc::from_ratfunc(p_identity(pair), Var::u);
    MultiRatFunc lhs = p * S.subst_u(MultiPoly(k) - poly_u()).trace();
    MultiRatFunc rhs = pI * S.trace();
    rep.holds = (lhs - rhs).is_zero();
    if (!rep.holds) rep.witness_value = (lhs - rhs).str();
    return rep;
}

bool trace_identity_check(const SymmetricPair& pair, const MatN& S) {
    return check_trace_identity(pair, S).holds;
}

IdentityReport check_unitarity(const SymmetricPair& /*pair*/, const MatN& S) {
    IdentityReport rep;
    rep.identity = "UNITARITY";
    MatN M = S * S.subst_u(-poly_u());
    auto scalar = M.as_scalar_identity();
    if (!scalar) {
        rep.holds = false;
        auto it = M.entries().begin();
        if (it != M.entries().end()) {
            rep.witness = {it->first.first, it->first.second};
            rep.witness_value = it->second.str();
        }
        return rep;
    }
    bool even = (*scalar - scalar->subst(Var::u, -poly_u())).is_zero();
    // w(u) must be 1 + O(u^{-2}): the difference w - 1 vanishes at u = infinity
    MultiRatFunc wm1 = *scalar - MultiRatFunc(1);
    bool normalized =
        wm1.is_zero() || wm1.num().degree_in(Var::u) < wm1.den().degree_in(Var::u);
    rep.holds = even && normalized;
    rep.scalar = scalar->str();
    if (!rep.holds) rep.witness_value = scalar->str();
    return rep;
}

std::vector<IdentityReport> verify_solution(const SymmetricPair& pair, const MatN& S) {
    return {check_reflection_equation(pair, S), check_symmetry_relation(pair, S),
            check_trace_identity(pair, S), check_unitarity(pair, S)};
}

MatN trivial_solution(const SymmetricPair& pair) { return gmatrix_u(pair); }

MatN kmatrix(const SymmetricPair& pair, const std::optional<Rational>& a) {
    if (!pair.q_is_so2())
        throw UnsupportedPair("the one-parameter solution needs (so_N, so_{N-2}+so_2), N >= 5");
    MultiRatFunc av = a ? MultiRatFunc(*a) : MultiRatFunc::variable(Var::a);
    MultiRatFunc u = MultiRatFunc::variable(Var::u);
    Rational d = pair.d(); // = N/4 - 1
    MultiRatFunc um_a = u - av;
    MultiRatFunc up_a = u + av - MultiRatFunc(d * Rational(2));
    MultiRatFunc dmu = MultiRatFunc(d) - u;
    MultiRatFunc kfac = um_a * up_a / (dmu * dmu);
    int n = pair.n();
    MatN K(pair);
    for (int i : pair.indices()) {
        MultiRatFunc val = kfac;
        if (i == -n) val = kfac * (MultiRatFunc(1) - u * Rational(2) / um_a);
        if (i == n) val = kfac * (MultiRatFunc(1) - u * Rational(2) / up_a);
        K.set(i, i, val);
    }
    return K;
}

HighestWeight kmatrix_weight(const SymmetricPair& pair, const Rational& a) {
    if (!pair.q_is_so2())
        throw UnsupportedPair("the one-parameter family needs (so_N, so_{N-2}+so_2), N >= 5");
    Rational d = pair.d();
    std::vector<RatFunc> comps;
    UniPoly u = UniPoly::variable();
    UniPoly den = (u - UniPoly(d)) * (u - UniPoly(d));
    for (int i : pair.indices_plus()) {
        int sgn = (i == pair.n()) ? -1 : 1;
        UniPoly num = (u - UniPoly(a)) * (u * Rational(sgn) + UniPoly(a - d * Rational(2)));
        comps.emplace_back(num, den);
    }
    return HighestWeight(pair, std::move(comps));
}

} // namespace tyk
