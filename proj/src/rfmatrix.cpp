#include "tyk/rfmatrix.hpp"

namespace tyk {

MatN MatN::identity(const SymmetricPair& pair) {
    MatN m(pair);
    for (int i : pair.indices()) m.set(i, i, MultiRatFunc(1));
    return m;
}

MatN MatN::unit(const SymmetricPair& pair, int i, int j, MultiRatFunc value) {
    MatN m(pair);
    m.set(i, j, std::move(value));
    return m;
}

MatN operator+(const MatN& x, const MatN& y) {
    MatN r = x;
    for (const auto& [k, val] : y.e_) r.add(k.first, k.second, val);
    return r;
}

MatN operator-(const MatN& x, const MatN& y) {
    MatN r = x;
    for (const auto& [k, val] : y.e_) r.add(k.first, k.second, -val);
    return r;
}

MatN operator*(const MatN& x, const MatN& y) {
    MatN r(x.pair_);
    for (const auto& [kx, vx] : x.e_)
        for (const auto& [ky, vy] : y.e_)
            if (kx.second == ky.first) r.add(kx.first, ky.second, vx * vy);
    return r;
}

MatN MatN::operator*(const MultiRatFunc& s) const {
    MatN r(pair_);
    for (const auto& [k, v] : e_) r.set(k.first, k.second, v * s);
    return r;
}

MatN MatN::transpose_t() const {
    MatN r(pair_);
    for (const auto& [k, v] : e_) {
        auto [i, j] = k;
        r.add(-j, -i, v * Rational(pair_.theta(i, j)));
    }
    return r;
}

MultiRatFunc MatN::trace() const {
    MultiRatFunc t;
    for (const auto& [k, v] : e_)
        if (k.first == k.second) t = t + v;
    return t;
}

MatN MatN::subst_u(const MultiPoly& value) const {
    MatN r(pair_);
    for (const auto& [k, v] : e_) r.set(k.first, k.second, v.subst(Var::u, value));
    return r;
}

MatN MatN::rename_var(Var from, Var to) const {
    MatN r(pair_);
    for (const auto& [k, v] : e_) r.set(k.first, k.second, v.rename(from, to));
    return r;
}

bool MatN::is_diagonal() const {
    for (const auto& [k, v] : e_)
        if (k.first != k.second) return false;
    return true;
}

std::optional<MultiRatFunc> MatN::as_scalar_identity() const {
    if (!is_diagonal()) return std::nullopt;
    MultiRatFunc s = get(pair_.indices().front(), pair_.indices().front());
    for (int i : pair_.indices())
        if (!(get(i, i) - s).is_zero()) return std::nullopt;
    return s;
}

MatNN operator-(const MatNN& x, const MatNN& y) {
    MatNN r = x;
    for (const auto& [rk, row] : y.rows_)
        for (const auto& [ck, v] : row) r.add(rk, ck, -v);
    return r;
}

MatNN operator*(const MatNN& x, const MatNN& y) {
    MatNN r(x.pair_);
    for (const auto& [rk, row] : x.rows_) {
        for (const auto& [mk, xv] : row) {
            auto it = y.rows_.find(mk);
            if (it == y.rows_.end()) continue;
            for (const auto& [ck, yv] : it->second) r.add(rk, ck, xv * yv);
        }
    }
    return r;
}

bool MatNN::is_zero() const {
    for (const auto& [rk, row] : rows_)
        if (!row.empty()) return false;
    return true;
}

std::optional<std::tuple<MatNN::Lbl, MatNN::Lbl, MultiRatFunc>> MatNN::first_nonzero() const {
    for (const auto& [rk, row] : rows_)
        for (const auto& [ck, v] : row)
            if (!v.is_zero()) return std::make_tuple(rk, ck, v);
    return std::nullopt;
}

MatNN MatNN::embed_first(const MatN& s) {
    MatNN r(s.pair());
    for (const auto& [k, v] : s.entries())
        for (int c : s.pair().indices()) r.add({k.first, c}, {k.second, c}, v);
    return r;
}

MatNN MatNN::embed_second(const MatN& s) {
    MatNN r(s.pair());
    for (const auto& [k, v] : s.entries())
        for (int c : s.pair().indices()) r.add({c, k.first}, {c, k.second}, v);
    return r;
}

MatNN perm_operator(const SymmetricPair& pair) {
    MatNN p(pair);
    for (int i : pair.indices())
        for (int j : pair.indices()) p.add({i, j}, {j, i}, MultiRatFunc(1));
    return p;
}

MatNN proj_operator(const SymmetricPair& pair) {
    MatNN q(pair);
    for (int j : pair.indices())
        for (int i : pair.indices())
            q.add({-j, j}, {-i, i}, MultiRatFunc(Rational(pair.theta(i, j))));
    return q;
}

MatNN rmatrix_at(const SymmetricPair& pair, const MultiPoly& x) {
    MatNN r(pair);
    MultiRatFunc inv_x = MultiRatFunc(MultiPoly(1), x);
    MultiRatFunc inv_xk = MultiRatFunc(MultiPoly(1), x - MultiPoly(pair.kappa()));
    for (int i : pair.indices())
        for (int j : pair.indices()) {
            r.add({i, j}, {i, j}, MultiRatFunc(1));
            r.add({i, j}, {j, i}, -inv_x);
        }
    for (int j : pair.indices())
        for (int i : pair.indices())
            r.add({-j, j}, {-i, i}, inv_xk * Rational(pair.theta(i, j)));
    return r;
}

MatN gmatrix(const SymmetricPair& pair) {
    MatN g(pair);
    for (int i : pair.indices()) g.set(i, i, MultiRatFunc(pair.g_entry(i)));
    return g;
}

MatN gmatrix_u(const SymmetricPair& pair, Var var) {
    MatN g(pair);
    MultiPoly x = MultiPoly::variable(var);
    MultiPoly d(pair.d());
    for (int i : pair.indices())
        g.set(i, i, MultiRatFunc(d - x * pair.g_entry(i), d - x));
    return g;
}

} // namespace tyk
