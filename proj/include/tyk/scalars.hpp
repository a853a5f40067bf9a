#ifndef TYK_SCALARS_HPP
#define TYK_SCALARS_HPP

#include "tyk/pair.hpp"
#include "tyk/ratfunc.hpp"

namespace tyk {

// p(u) = 1 -+ 1/(2u-kappa) + Tr(G(u))/(2u-2kappa); construction asserts the
// reflection identity p(u) p(kappa-u) = 1 - 1/(2u-kappa)^2.
RatFunc p_function(const SymmetricPair& pair);
// p(u) of the pair (g_N, g_N), i.e. with G = I.
RatFunc p_identity(const SymmetricPair& pair);

// Tr(G(u)) as a univariate rational function.
RatFunc trace_g_u(const SymmetricPair& pair);

// g(u) = [+-](p+q-4u)/(p-q-4u); the lower bracket sign is the BI(b) one.
// Well defined for every pair (the denominator is a nonzero polynomial).
RatFunc scr_g_total(const SymmetricPair& pair);
// Raises DegeneratePQ when p = q; use scr_g_total where the function itself
// is still meaningful there.
RatFunc scr_g(const SymmetricPair& pair);

// g(kappa-u)/g(u) in the expanded form
// (2u-kappa+-1)(2u+q-kappa-+1) / ((2u-kappa-+1)(2u-q-kappa+-1)),
// which is valid for every pair including p = q.
RatFunc g_ratio(const SymmetricPair& pair);

// h_m(u) = u/(u+m/2) * g_m(u) / g(u+m/2) for the step-m reduction;
// construction asserts h_m(u)/h_m(kappa-m-u) = p_m(u)/p(u+m/2).
RatFunc h_shift(const SymmetricPair& pair, int m);

} // namespace tyk

#endif
