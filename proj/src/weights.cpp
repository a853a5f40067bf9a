#include "tyk/weights.hpp"

#include "tyk/scalars.hpp"

namespace tyk {

// ------------------------------------------------------------ scalars -----

RatFunc trace_g_u(const SymmetricPair& pair) {
    // sum of (d - u g_ii)/(d - u) = (N d - (p-q) u)/(d - u)
    Rational d = pair.d();
    UniPoly num(std::vector<Rational>{Rational(pair.N()) * d, Rational(pair.q() - pair.p())});
    UniPoly den(std::vector<Rational>{d, Rational(-1)});
    return RatFunc(num, den);
}

namespace {

RatFunc p_of(const SymmetricPair& pair, const RatFunc& trace) {
    Rational k = pair.kappa();
    RatFunc u = RatFunc::variable();
    RatFunc two_u_k = u * Rational(2) - RatFunc(k);
    RatFunc two_u_2k = u * Rational(2) - RatFunc(k * Rational(2));
    RatFunc p = RatFunc(1) - RatFunc(Rational(pair.pm())) / two_u_k + trace / two_u_2k;
    RatFunc expected = RatFunc(1) - (RatFunc(1) / (two_u_k * two_u_k));
    if (p * p.reflect_arg(k) != expected)
        throw Error("InternalCheck", "p(u) p(kappa-u) identity failed");
    return p;
}

} // namespace

RatFunc p_function(const SymmetricPair& pair) { return p_of(pair, trace_g_u(pair)); }

RatFunc p_identity(const SymmetricPair& pair) {
    return p_of(pair, RatFunc(Rational(pair.N())));
}

RatFunc scr_g_total(const SymmetricPair& pair) {
    int p = pair.p(), q = pair.q();
    UniPoly num(std::vector<Rational>{Rational(p + q), Rational(-4)});
    UniPoly den(std::vector<Rational>{Rational(p - q), Rational(-4)});
    RatFunc g(num, den);
    return pair.lower_bracket() ? -g : g;
}

RatFunc scr_g(const SymmetricPair& pair) {
    if (pair.p() == pair.q())
        throw DegeneratePQ("g(u) is reserved for pairs with p != q");
    RatFunc g = scr_g_total(pair);
    if (g.reflect_arg(pair.kappa()) / g != g_ratio(pair))
        throw Error("InternalCheck", "g-ratio expansion failed");
    return g;
}

RatFunc g_ratio(const SymmetricPair& pair) {
    Rational k = pair.kappa();
    Rational q(pair.q());
    int s = pair.pm();
    auto lin = [](const Rational& c) { // 2u + c
        return UniPoly(std::vector<Rational>{c, Rational(2)});
    };
    UniPoly num = lin(-k + Rational(s)) * lin(q - k - Rational(s));
    UniPoly den = lin(-k - Rational(s)) * lin(-q - k + Rational(s));
    return RatFunc(num, den);
}

RatFunc h_shift(const SymmetricPair& pair, int m) {
    SymmetricPair red = pair.reduced(m); // validates the range of m
    Rational mh(m, 2);
    RatFunc u = RatFunc::variable();
    RatFunc h = u / (u + RatFunc(mh)) * scr_g_total(red) / scr_g_total(pair).shift(mh);
    RatFunc lhs = h / h.compose_affine(-1, pair.kappa() - Rational(m));
    RatFunc rhs = p_function(red) / p_function(pair).shift(mh);
    if (lhs != rhs) throw Error("InternalCheck", "h_m quotient condition failed");
    return h;
}

// ------------------------------------------------------------- weights ----

HighestWeight::HighestWeight(SymmetricPair pair, std::vector<RatFunc> comps)
    : pair_(std::move(pair)), comps_(std::move(comps)) {
    size_t expect = pair_.n() + (pair_.odd_N() ? 1 : 0);
    if (comps_.size() != expect)
        throw MalformedInput("weight needs " + std::to_string(expect) + " components");
    for (int i : pair_.indices_plus()) {
        const RatFunc& f = at(i);
        if (!f.proper_at_infinity() || f.value_at_infinity() != pair_.g_entry(i))
            throw MalformedInput("component " + std::to_string(i) +
                                 " must tend to g_ii at infinity");
    }
}

YangianWeight::YangianWeight(SymmetricPair pair, std::vector<RatFunc> comps)
    : pair_(std::move(pair)), comps_(std::move(comps)) {
    if (comps_.size() != static_cast<size_t>(2 * pair_.n() + 1))
        throw MalformedInput("extended-Yangian weight needs 2n+1 slots");
    for (int i : pair_.indices()) {
        const RatFunc& f = at(i);
        if (!f.proper_at_infinity() || f.value_at_infinity() != Rational(1))
            throw MalformedInput("lambda components must tend to 1 at infinity");
    }
}

TildeWeight tilde(const HighestWeight& w) {
    const SymmetricPair& sp = w.pair();
    std::vector<RatFunc> out;
    RatFunc u = RatFunc::variable();
    for (int i : sp.indices_plus()) {
        RatFunc acc = (u * Rational(2) + RatFunc(Rational(i - sp.n()))) * w.at(i);
        for (int l = i + 1; l <= sp.n(); ++l) acc = acc + w.at(l);
        out.push_back(acc);
    }
    return TildeWeight(sp, std::move(out));
}

HighestWeight untilde(const TildeWeight& t) {
    const SymmetricPair& sp = t.pair();
    int n = sp.n();
    std::vector<RatFunc> mu(n + (sp.odd_N() ? 1 : 0));
    RatFunc u = RatFunc::variable();
    auto slot = [&](int i) -> RatFunc& { return mu.at(i - (sp.odd_N() ? 0 : 1)); };
    RatFunc tail; // sum of mu_l for l > i
    for (int i = n; i >= (sp.odd_N() ? 0 : 1); --i) {
        RatFunc denom = u * Rational(2) + RatFunc(Rational(i - n));
        slot(i) = (t.at(i) - tail) / denom;
        tail = tail + slot(i);
    }
    return HighestWeight(sp, std::move(mu));
}

HighestWeight trivial_weight(const SymmetricPair& pair) {
    std::vector<RatFunc> comps;
    Rational d = pair.d();
    for (int i : pair.indices_plus()) {
        UniPoly num(std::vector<Rational>{d, -pair.g_entry(i)});
        UniPoly den(std::vector<Rational>{d, Rational(-1)});
        comps.emplace_back(num, den);
    }
    return HighestWeight(pair, std::move(comps));
}

bool check_nontrivial(const HighestWeight& w) {
    const SymmetricPair& sp = w.pair();
    TildeWeight t = tilde(w);
    for (int i : sp.indices_plus()) {
        if (i == sp.n()) continue;
        Rational refl(sp.n() - i); // u -> -u + n - i
        RatFunc lhs = t.at(i) * t.at(i).reflect_arg(refl);
        RatFunc rhs = t.at(i + 1) * t.at(i + 1).reflect_arg(refl);
        if (lhs != rhs) return false;
    }
    if (sp.odd_N()) {
        RatFunc g = scr_g_total(sp);
        RatFunc u = RatFunc::variable();
        Rational k = sp.kappa();
        RatFunc lhs = u * g * t.at(0).reflect_arg(k);
        RatFunc rhs = (RatFunc(k) - u) * g.reflect_arg(k) * t.at(0);
        if (lhs != rhs) return false;
    }
    return true;
}

bool check_nontrivial_X(const YangianWeight& lam) {
    const SymmetricPair& sp = lam.pair();
    for (int i : sp.indices_plus()) {
        if (i == sp.n()) continue;
        Rational shift = -sp.kappa() + Rational(sp.n() - i); // u -> u - kappa + n - i
        RatFunc lhs = lam.at(-i) / lam.at(-i - 1);
        RatFunc rhs = lam.at(i + 1).shift(shift) / lam.at(i).shift(shift);
        if (lhs != rhs) return false;
    }
    return true;
}

HighestWeight nu_twist(const HighestWeight& w, const RatFunc& g) {
    if (g != g.compose_affine(-1, Rational(0)) || !g.proper_at_infinity() ||
        g.value_at_infinity() != Rational(1))
        throw MalformedInput("nu twist requires an even g with g(inf) = 1");
    RatFunc factor = g.shift(-w.pair().kappa() / Rational(2));
    std::vector<RatFunc> comps;
    for (const RatFunc& f : w.comps()) comps.push_back(f * factor);
    return HighestWeight(w.pair(), std::move(comps));
}

namespace {

// Unique series a(u) = 1 + ... with a(u) a(u+kappa) = c(u), to `len` terms.
std::vector<Rational> solve_half_series(const RatFunc& c, const Rational& kappa, int len) {
    std::vector<Rational> cs = c.series_at_infinity(len);
    std::vector<Rational> a(len, Rational(0));
    a[0] = Rational(1);
    // B_s = sum_{r<=s} a_r binom(-r, s-r) kappa^{s-r}
    auto binom_neg = [](int r, int j) {
        // binom(-r, j) = (-1)^j binom(r+j-1, j)
        Rational acc(1);
        for (int t = 0; t < j; ++t) acc *= Rational(r + t);
        for (int t = 1; t <= j; ++t) acc /= Rational(t);
        return (j % 2 == 1) ? -acc : acc;
    };
    for (int t = 1; t < len; ++t) {
        // c_t = sum_{i+s=t} a_i B_s with the a_t terms appearing twice
        Rational known(0);
        for (int i = 0; i <= t; ++i) {
            int s = t - i;
            for (int r = 0; r <= s; ++r) {
                if (i == t || (r == s && r == t)) continue; // skip a_t contributions
                known += a[i] * a[r] * binom_neg(r, s - r) * kappa.pow(s - r);
            }
        }
        a[t] = (cs[t] - known) / Rational(2);
    }
    return a;
}

// Rational reconstruction of a power series in u^{-1} via Pade approximants.
bool pade_reconstruct(const std::vector<Rational>& s, int K, RatFunc& out) {
    // Find q (deg<=K, q0=1) and p (deg<=K) with q*s = p mod x^{2K+1}.
    int rows = K; // equations for coefficients K+1..2K of q*s
    std::vector<std::vector<Rational>> m(rows, std::vector<Rational>(K + 1, Rational(0)));
    for (int r = 0; r < rows; ++r)
        for (int j = 0; j <= K; ++j) {
            int idx = K + 1 + r - j;
            if (idx >= 0 && idx < static_cast<int>(s.size())) m[r][j] = s[idx];
        }
    // Solve m * q = 0 with q[0] = 1 -> move column 0 to rhs.
    std::vector<Rational> q(K + 1, Rational(0));
    q[0] = Rational(1);
    std::vector<std::vector<Rational>> aug(rows, std::vector<Rational>(K + 1, Rational(0)));
    for (int r = 0; r < rows; ++r) {
        for (int j = 1; j <= K; ++j) aug[r][j - 1] = m[r][j];
        aug[r][K] = -m[r][0];
    }
    std::vector<int> pivot_col;
    int rank = 0;
    for (int col = 0; col < K && rank < rows; ++col) {
        int piv = -1;
        for (int r = rank; r < rows; ++r)
            if (!aug[r][col].is_zero()) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        std::swap(aug[rank], aug[piv]);
        Rational inv = aug[rank][col].inv();
        for (int j = col; j <= K; ++j) aug[rank][j] *= inv;
        for (int r = 0; r < rows; ++r) {
            if (r == rank || aug[r][col].is_zero()) continue;
            Rational f = aug[r][col];
            for (int j = col; j <= K; ++j) aug[r][j] -= f * aug[rank][j];
        }
        pivot_col.push_back(col);
        ++rank;
    }
    for (int r = rank; r < rows; ++r)
        if (!aug[r][K].is_zero()) return false; // inconsistent system
    // Particular solution with free variables set to zero (RREF rows).
    std::vector<Rational> x(K, Rational(0));
    for (int r = 0; r < rank; ++r) x[pivot_col[r]] = aug[r][K];
    for (int j = 1; j <= K; ++j) q[j] = x[j - 1];
    // p = (q*s) truncated to degree K
    std::vector<Rational> p(K + 1, Rational(0));
    for (int i = 0; i <= K; ++i)
        for (int j = 0; j <= K - i && j < static_cast<int>(s.size()); ++j)
            if (i + j <= K) p[i + j] += q[i] * s[j];
    // Convert from series variable x = 1/u back to u.
    std::vector<Rational> pn(K + 1), qn(K + 1);
    for (int i = 0; i <= K; ++i) {
        pn[K - i] = p[i];
        qn[K - i] = q[i];
    }
    out = RatFunc(UniPoly(pn), UniPoly(qn));
    return true;
}

} // namespace

NormalizeResult normalize_w1(const HighestWeight& w) {
    const SymmetricPair& sp = w.pair();
    Rational k = sp.kappa();
    const RatFunc& mun = w.at(sp.n());
    RatFunc nu = mun * mun.compose_affine(-1, Rational(0));
    RatFunc c = nu.inv();

    NormalizeResult res;
    int len = 2 * std::max(c.num().degree() + c.den().degree(), 4) + 10;
    std::vector<Rational> a = solve_half_series(c, k, len);
    for (int K = 0; 2 * K + 1 < len; ++K) {
        RatFunc cand;
        if (!pade_reconstruct(a, K, cand)) continue;
        if (cand * cand.shift(k) == c) {
            RatFunc g = cand.shift(k / Rational(2));
            if (g == g.compose_affine(-1, Rational(0))) {
                res.rational = true;
                res.g = g;
                for (const RatFunc& f : w.comps()) res.twisted.push_back(f * cand);
                return res;
            }
        }
    }
    // Not rational: report g's truncated series, g(u) = a(u + kappa/2).
    std::vector<Rational> gs(a.size(), Rational(0));
    // g_t = sum_r a_r binom(-r, t-r) (k/2)^{t-r}
    for (size_t t = 0; t < a.size(); ++t) {
        Rational acc(0);
        for (size_t r = 0; r <= t; ++r) {
            Rational b(1);
            for (size_t j = 0; j < t - r; ++j) b *= Rational(static_cast<long>(r + j));
            for (size_t j = 1; j <= t - r; ++j) b /= Rational(static_cast<long>(j));
            if ((t - r) % 2 == 1) b = -b;
            acc += a[r] * b * (k / Rational(2)).pow(static_cast<unsigned>(t - r));
        }
        gs[t] = acc;
    }
    res.series = std::move(gs);
    return res;
}

HighestWeight restrict_weight(const HighestWeight& w, int m) {
    const SymmetricPair& sp = w.pair();
    SymmetricPair red = sp.reduced(m);
    RatFunc h = h_shift(sp, m);
    TildeWeight t = tilde(w);
    std::vector<RatFunc> comps;
    for (int i : red.indices_plus()) comps.push_back(h * t.at(i).shift(Rational(m, 2)));
    return untilde(TildeWeight(red, std::move(comps)));
}

std::vector<Rational> string_set(const Rational& alpha, const Rational& beta) {
    std::vector<Rational> out;
    Rational diff = alpha - beta;
    if (!diff.is_integer() || diff <= Rational(0)) return out;
    for (Rational x = beta; x < alpha; x += Rational(1)) out.push_back(x);
    return out;
}

} // namespace tyk
