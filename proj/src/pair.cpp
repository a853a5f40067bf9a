#include "tyk/pair.hpp"

#include <algorithm>

namespace tyk {

std::string family_name(Family f) {
    switch (f) {
        case Family::BI: return "BI";
        case Family::CII: return "CII";
        case Family::DIa: return "DIa";
        case Family::BCD0: return "BCD0";
        case Family::SO4: return "CI-so4";
        case Family::SO3: return "BI-so3";
    }
    return "?";
}

Family family_from_name(const std::string& s) {
    if (s == "BI") return Family::BI;
    if (s == "CII") return Family::CII;
    if (s == "DIa" || s == "DI" || s == "DI(a)") return Family::DIa;
    if (s == "BCD0") return Family::BCD0;
    if (s == "CI-so4" || s == "so4") return Family::SO4;
    if (s == "BI-so3" || s == "so3") return Family::SO3;
    throw MalformedInput("unknown family '" + s + "'");
}

SymmetricPair SymmetricPair::make(bool orthogonal, int N, int q) {
    // q is the literal block size of the table matrix; restriction chains of
    // lower-bracket pairs legitimately pass through q > N - q.
    if (N < 2 || (!orthogonal && N % 2 == 1))
        throw UnsupportedPair("invalid algebra dimension N=" + std::to_string(N));
    if (q < 0 || q >= N) throw UnsupportedPair("q outside [0, N)");
    if (!orthogonal && q % 2 == 1)
        throw UnsupportedPair("symplectic pairs require even q");
    if (orthogonal && N % 2 == 0 && q % 2 == 1)
        throw UnsupportedPair("pairs of type DI(b) (both factors odd) are not supported");
    if (orthogonal && N == 2) throw UnsupportedPair("so2 is not a valid ambient algebra");

    SymmetricPair sp;
    sp.orthogonal_ = orthogonal;
    sp.N_ = N;
    sp.n_ = N / 2;
    sp.q_ = q;
    sp.p_ = N - q;
    sp.kappa_ = Rational(N, 2) + Rational(orthogonal ? -1 : 1);
    sp.d_ = Rational(sp.p_ - sp.q_, 4);
    bool bib = orthogonal && N % 2 == 1 && q % 2 == 1;
    sp.ell_ = bib ? (N - q) / 2 : q / 2;
    sp.kay_ = sp.n_ - sp.ell_;

    if (q == 0) sp.family_ = Family::BCD0;
    else if (!orthogonal) sp.family_ = Family::CII;
    else if (N == 3) sp.family_ = Family::SO3;
    else if (N == 4) sp.family_ = Family::SO4;
    else if (N % 2 == 1) sp.family_ = Family::BI;
    else sp.family_ = Family::DIa;
    return sp;
}

SymmetricPair SymmetricPair::build(Family f, int N, int q, bool orthogonal_for_bcd0) {
    if (q > N - q && q < N) q = N - q; // user-facing normalization to p >= q
    bool orth = true;
    switch (f) {
        case Family::BCD0:
            orth = orthogonal_for_bcd0;
            if (q != 0) throw UnsupportedPair("BCD0 requires q = 0");
            break;
        case Family::CII:
            orth = false;
            if (q < 2) throw UnsupportedPair("CII requires q >= 2");
            break;
        case Family::BI:
            if (N % 2 == 0) throw UnsupportedPair("BI requires odd N");
            if (q < 1 || q > N - 1) throw UnsupportedPair("BI requires 0 < q < N");
            break;
        case Family::DIa:
            if (N % 2 == 1) throw UnsupportedPair("DI(a) requires even N");
            if (q < 2) throw UnsupportedPair("DI(a) requires q >= 2");
            break;
        case Family::SO4:
            if (N != 4 || std::min(q, N - q) != 2)
                throw UnsupportedPair("the so4 pair is (so4, so2+so2)");
            break;
        case Family::SO3:
            if (N != 3 || std::min(q, N - q) != 1)
                throw UnsupportedPair("the so3 pair is (so3, so2)");
            break;
    }
    return make(orth, N, q);
}

SymmetricPair SymmetricPair::from_id(const std::string& id) {
    auto parse_alg = [](const std::string& s) -> std::pair<bool, int> {
        if (s.size() > 2 && s.substr(0, 2) == "so") return {true, std::stoi(s.substr(2))};
        if (s.size() > 2 && s.substr(0, 2) == "sp") return {false, std::stoi(s.substr(2))};
        throw MalformedInput("bad algebra id '" + s + "'");
    };
    try {
        auto slash = id.find('/');
        if (slash == std::string::npos) {
            auto [orth, N] = parse_alg(id);
            if (orth && N == 3) return make(true, 3, 1);
            if (orth && N == 4) return make(true, 4, 2);
            return make(orth, N, 0);
        }
        auto [orth, N] = parse_alg(id.substr(0, slash));
        std::string rest = id.substr(slash + 1);
        auto plus = rest.find('+');
        int p, q;
        if (plus == std::string::npos) {
            p = parse_alg(rest).second;
            q = N - p;
        } else {
            p = parse_alg(rest.substr(0, plus)).second;
            q = parse_alg(rest.substr(plus + 1)).second;
        }
        if (p + q != N) throw MalformedInput("factors of '" + id + "' do not sum to N");
        return make(orth, N, q); // the second named factor is the q block
    } catch (const std::invalid_argument&) {
        throw MalformedInput("bad pair id '" + id + "'");
    }
}

int SymmetricPair::max_reduction_step() const {
    int top = ell_ - (ell_ == n_ ? 1 : 0);
    int floor_dim = orthogonal_ ? 3 : 2;
    while (top > 0 && N_ - 2 * top < floor_dim) --top;
    return top;
}

SymmetricPair SymmetricPair::reduced(int m) const {
    int top = max_reduction_step();
    if (m < 1 || m > top)
        throw BadShiftRange("m = " + std::to_string(m) + " outside [1, " + std::to_string(top) + "]");
    bool bib = lower_bracket();
    int q2 = bib ? q_ : q_ - 2 * m;
    // A lower-bracket chain that consumes the whole positive block lands on
    // the BCD0 pair; the sign mismatch with the literal window is carried by
    // the reduction series h_m, whose constant term is -1 exactly then.
    if (q2 >= N_ - 2 * m) q2 = 0;
    return make(orthogonal_, N_ - 2 * m, q2);
}

Rational SymmetricPair::g_entry(int i) const {
    int ai = std::abs(i);
    if (is_bcd0()) return Rational(1);
    if (orthogonal_ && odd_N()) {
        if (q_ % 2 == 1) return ai <= (q_ - 1) / 2 ? Rational(-1) : Rational(1); // BI(b)
        return ai <= (p_ - 1) / 2 ? Rational(1) : Rational(-1);                   // BI(a)
    }
    return ai <= p_ / 2 ? Rational(1) : Rational(-1); // CII / DI(a) / so4
}

int SymmetricPair::theta(int i, int j) const {
    if (orthogonal_) return 1;
    return (i > 0 ? 1 : -1) * (j > 0 ? 1 : -1);
}

std::vector<int> SymmetricPair::indices() const {
    std::vector<int> out;
    for (int i = -n_; i <= n_; ++i)
        if (i != 0 || odd_N()) out.push_back(i);
    return out;
}

std::vector<int> SymmetricPair::indices_plus() const {
    std::vector<int> out;
    for (int i = odd_N() ? 0 : 1; i <= n_; ++i) out.push_back(i);
    return out;
}

SymmetricPair SymmetricPair::bcd0_companion() const { return make(orthogonal_, N_, 0); }

std::string SymmetricPair::id() const {
    std::string alg = orthogonal_ ? "so" : "sp";
    std::string out = alg + std::to_string(N_);
    if (q_ == 0) return out;
    out += "/" + alg + std::to_string(p_);
    if (q_ > 1) out += "+" + alg + std::to_string(q_);
    return out;
}

} // namespace tyk
