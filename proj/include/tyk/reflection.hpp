#ifndef TYK_REFLECTION_HPP
#define TYK_REFLECTION_HPP

#include <optional>

#include "tyk/rfmatrix.hpp"
#include "tyk/scalars.hpp"
#include "tyk/weights.hpp"

namespace tyk {

// Result of one symbolic identity check. The witness, present on failure, is
// the row-major-first nonzero entry of the residual.
struct IdentityReport {
    std::string identity; // "RE", "SYM", "TRACE", "UNITARITY"
    bool holds = false;
    std::vector<int> witness;  // (i,j) or ((r1,r2),(c1,c2)) flattened
    std::string witness_value;
    std::string scalar; // unitarity scalar when the product is scalar
};

// R(u-v) S_1(u) R(u+v) S_2(v) - S_2(v) R(u+v) S_1(u) R(u-v) == 0 over Q(u,v,a).
// S is given in the variable u (and optionally a).
IdentityReport check_reflection_equation(const SymmetricPair& pair, const MatN& S);

// S^t(u) = S(k-u) +- (S(u)-S(k-u))/(2u-k) + (Tr G(u) S(k-u) - Tr S(u) I)/(2u-2k).
IdentityReport check_symmetry_relation(const SymmetricPair& pair, const MatN& S);

// p(u) Tr S(k-u) = p_I(u) Tr S(u).
IdentityReport check_trace_identity(const SymmetricPair& pair, const MatN& S);
bool trace_identity_check(const SymmetricPair& pair, const MatN& S);

// S(u) S(-u) = w(u) I with w even.
IdentityReport check_unitarity(const SymmetricPair& pair, const MatN& S);

// All four checks in order RE, SYM, TRACE, UNITARITY.
std::vector<IdentityReport> verify_solution(const SymmetricPair& pair, const MatN& S);

// The trivial solution S = G(u).
MatN trivial_solution(const SymmetricPair& pair);

// One-parameter diagonal solution for the pairs (so_N, so_{N-2} + so_2),
// N >= 5. The parameter is the symbol a when absent.
MatN kmatrix(const SymmetricPair& pair, const std::optional<Rational>& a = std::nullopt);
// Its highest weight gamma^a(u).
HighestWeight kmatrix_weight(const SymmetricPair& pair, const Rational& a);

} // namespace tyk

#endif
