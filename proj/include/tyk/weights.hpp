#ifndef TYK_WEIGHTS_HPP
#define TYK_WEIGHTS_HPP

#include <vector>

#include "tyk/pair.hpp"
#include "tyk/ratfunc.hpp"

namespace tyk {

// Highest weight of the twisted algebra attached to `pair`: one rational
// function mu_i(u) per index i in I_N^+, proper at infinity with constant
// term g_ii.
class HighestWeight {
public:
    HighestWeight(SymmetricPair pair, std::vector<RatFunc> comps);

    const SymmetricPair& pair() const { return pair_; }
    int istart() const { return pair_.odd_N() ? 0 : 1; }
    const RatFunc& at(int i) const { return comps_.at(i - istart()); }
    const std::vector<RatFunc>& comps() const { return comps_; }

    friend bool operator==(const HighestWeight& a, const HighestWeight& b) {
        return a.pair_ == b.pair_ && a.comps_ == b.comps_;
    }

private:
    SymmetricPair pair_;
    std::vector<RatFunc> comps_;
};

// The tuple (mu~_i)_{i in I_N^+} with mu~_i(u) = (2u-n+i) mu_i(u) + sum_{l>i} mu_l(u).
class TildeWeight {
public:
    TildeWeight(SymmetricPair pair, std::vector<RatFunc> comps)
        : pair_(std::move(pair)), comps_(std::move(comps)) {}
    const SymmetricPair& pair() const { return pair_; }
    int istart() const { return pair_.odd_N() ? 0 : 1; }
    const RatFunc& at(int i) const { return comps_.at(i - istart()); }
    RatFunc& at(int i) { return comps_.at(i - istart()); }
    const std::vector<RatFunc>& comps() const { return comps_; }

private:
    SymmetricPair pair_;
    std::vector<RatFunc> comps_;
};

TildeWeight tilde(const HighestWeight& w);
// Inverse of tilde, by downward recursion in i.
HighestWeight untilde(const TildeWeight& t);

// Weight of the trivial representation, mu_i(u) = g_ii(u).
HighestWeight trivial_weight(const SymmetricPair& pair);

// Non-triviality of the Verma module: the quadratic tilde relations, plus the
// g(u)-twisted index-0 relation when N is odd.
bool check_nontrivial(const HighestWeight& w);

// Highest weight of the ambient extended Yangian: lambda_i(u) for all of I_N,
// each with constant term 1.
class YangianWeight {
public:
    YangianWeight(SymmetricPair pair, std::vector<RatFunc> comps);
    const SymmetricPair& pair() const { return pair_; }
    const RatFunc& at(int i) const { return comps_.at(i + pair_.n()); }
    RatFunc& at(int i) { return comps_.at(i + pair_.n()); }

private:
    SymmetricPair pair_;
    std::vector<RatFunc> comps_; // index i + n; slot n (i=0) unused when N even
};

bool check_nontrivial_X(const YangianWeight& lam);

// Twist by nu_g: multiplies every component by g(u - kappa/2); g must be even
// with value 1 at infinity.
HighestWeight nu_twist(const HighestWeight& w, const RatFunc& g);

struct NormalizeResult {
    bool rational = false;
    RatFunc g;                     // valid when rational
    std::vector<Rational> series;  // truncated u^{-1} series of g otherwise
    std::vector<RatFunc> twisted;  // components of the normalized weight when rational
};
// The unique even g making the central series w(u) = g(u-k/2) g(u+k/2) mu_n(u) mu_n(-u)
// act as 1; reconstructed as a rational function when possible.
NormalizeResult normalize_w1(const HighestWeight& w);

// Weight of the step-m reduced module: tilde'_i(u) = h_m(u) tilde_i(u + m/2)
// over the reduced pair.
HighestWeight restrict_weight(const HighestWeight& w, int m);

std::vector<Rational> string_set(const Rational& alpha, const Rational& beta);

} // namespace tyk

#endif
