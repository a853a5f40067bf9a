#ifndef TYK_LOWRANK_HPP
#define TYK_LOWRANK_HPP

#include <optional>

#include "tyk/rfmatrix.hpp"
#include "tyk/sympoly.hpp"
#include "tyk/weights.hpp"

namespace tyk {

// Classification data of a finite-dimensional module of the rank-one twisted
// algebra: mu(-u)/mu(u) = (2u+1)/(2u-1) * P(u+1)/P(u) * (u-gamma)/(u+gamma)
// with P monic, P(u) = P(-u+1), P(gamma) != 0.
struct Y2Data {
    RatFunc mu_circ;
    UniPoly p_circ;
    Rational gamma_circ;
};

bool y2_check(const Y2Data& d);

// Evaluation module data for (so3, so2): the weight of V(mu) and the image
// matrix of the evaluation morphism, with the parameter symbolic (variable a)
// when absent.
HighestWeight ev_so3_weight(const Rational& mu);
MatN ev_so3_matrix(const std::optional<Rational>& mu = std::nullopt);

// Evaluation module data for (so4, so2+so2).
HighestWeight ev_so4_weight(const Rational& mu1, const Rational& mu2);
// Exactly one parameter may be symbolic.
MatN ev_so4_matrix(const std::optional<Rational>& mu1, const std::optional<Rational>& mu2);

// (P, alpha) with P(u) = P(-u+3/2), P(alpha) != 0 and
// tilde0/tilde1 = P(u+1/2)/P(u) * (alpha-u)/(alpha+u-1).
struct So3Data {
    SymPoly P;
    Rational alpha;
};
So3Data so3_tuple(const HighestWeight& w);

// (Q, P, alpha, beta), both polynomials centered at 2, from the two defining
// ratios of the rank-two pair.
struct So4Data {
    SymPoly Q, P;
    Rational alpha, beta;
};
So4Data so4_tuple(const HighestWeight& w);

// Y2 data of the so3 evaluation module V(mu).
Y2Data y2_from_ev_so3(const Rational& mu);
// P and gamma of the rank-one picture attached to so3 classification data.
Y2Data y2_from_so3_tuple(const So3Data& d, RatFunc mu_circ);

// The one-dimensional representations of the pair, up to even twists.
enum class OneDimKind { TrivialOnly, OneParameter, So3Family, So4Family };
struct OneDimCatalog {
    OneDimKind kind;
    int params;
    std::string description;
};
OneDimCatalog onedim_catalog(const SymmetricPair& pair);
// Weight of the catalog member with the given parameters.
HighestWeight onedim_weight(const SymmetricPair& pair, const std::vector<Rational>& params);

} // namespace tyk

#endif
