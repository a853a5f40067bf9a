#ifndef TYK_DRINFELD_HPP
#define TYK_DRINFELD_HPP

#include "tyk/sympoly.hpp"
#include "tyk/weights.hpp"

namespace tyk {

// The unique tuple associated to a nontrivial highest weight; throws
// NotAssociable when the defining relations admit no factorization, and
// NonRationalRoot when the data leaves Q.
DrinfeldTuple associate(const HighestWeight& w);

// Canonical weight associated to a tuple: the base weight of the alpha-family
// tensored with an ambient-Yangian weight realizing a symmetric square root of
// each P_i. Requires even multiplicity of every self-centered root.
HighestWeight synthesize(const DrinfeldTuple& t);

// Extended-Yangian weight with Drinfeld polynomials Q_i, built canonically
// from the finite-dimensionality ratios (lambda_n = 1) and the non-triviality
// recursion for the negative components.
YangianWeight yangian_weight(const SymmetricPair& pair,
                             const std::vector<std::map<Rational, int>>& q_roots);

enum class Verdict { FiniteDim, NotFiniteDim, NecessaryOnly };
std::string verdict_name(Verdict v);

struct Classification {
    Verdict verdict;
    DrinfeldTuple tuple;
    std::vector<std::string> violations;
};

// Dispatch on the pair type: BCD0 / q = 2 orthogonal / low rank are decided
// exactly; q = 1 applies the string conditions; everything else reports the
// necessary-conditions-only verdict.
Classification classify(const DrinfeldTuple& t);
Classification classify(const HighestWeight& w);

// (Q_i . P_i): multiply P_i by the symmetric spread of the ambient polynomial
// Q_i, then repair an alpha collision by the reduction step.
DrinfeldTuple tensor_compose(const std::vector<std::map<Rational, int>>& q_roots,
                             const DrinfeldTuple& t);

// (alpha - m/2, P_1(u + m/2), ..., P_{n-m}(u + m/2)) over the reduced pair.
DrinfeldTuple restrict_tuple(const DrinfeldTuple& t, int m);

// Conjugation by the (1,-1) swap: alpha -> N/2 - alpha with the string
// correction of P_2. Only for the pairs (so_{2n+1}, so_{2n}).
DrinfeldTuple psi_twist(const DrinfeldTuple& t);
HighestWeight psi_twist_weight(const HighestWeight& w);

// The string polynomial dividing P_2 when alpha > N/4, and its companion used
// when alpha <= N/4.
SymPoly string_poly(const SymmetricPair& pair, const Rational& alpha);
SymPoly string_poly_minus(const SymmetricPair& pair, const Rational& alpha);

// Weight of the fixed-subalgebra Cartan action on the highest weight vector.
std::vector<Rational> g_weight(const DrinfeldTuple& t);

enum class AlgebraKind { Orthogonal, Symplectic };
// Finite-dimensionality of the irreducible g_M-module with the given highest
// weight (dominance and integrality in the convention used throughout).
bool finite_check(const std::vector<Rational>& comps, AlgebraKind kind, int dim);
// Both factors of g_{N-2l} + g_{2l} at once.
bool grho_finite_check(const DrinfeldTuple& t);

// Half-integrality and the degree bound on alpha - N/4 (skipped for pairs the
// statement excludes: q = 0, orthogonal q = 2, and N < 5 orthogonal).
struct IntegralityReport {
    bool applicable = false;
    bool integral = true;
    bool bounded = true;
    bool pass() const { return !applicable || (integral && bounded); }
};
IntegralityReport integrality_check(const DrinfeldTuple& t);

} // namespace tyk

#endif
