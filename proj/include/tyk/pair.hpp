#ifndef TYK_PAIR_HPP
#define TYK_PAIR_HPP

#include <string>
#include <vector>

#include "tyk/rational.hpp"

namespace tyk {

// Families of symmetric pairs (g_N, g_p + g_q). BCD0 is the q = 0 pair
// (g_N, g_N); SO4 and SO3 are the low-rank orthogonal pairs handled by the
// dedicated low-rank machinery.
enum class Family { BI, CII, DIa, BCD0, SO4, SO3 };

std::string family_name(Family f);
Family family_from_name(const std::string& s);

// Configuration data of a symmetric pair. All derived quantities are fixed at
// construction; instances are immutable.
class SymmetricPair {
public:
    // Table-style constructor. q is the size of the smaller factor (q = 0
    // selects the BCD0 pair); `orthogonal` is only consulted for BCD0, the
    // other families imply it.
    static SymmetricPair make(bool orthogonal, int N, int q);
    static SymmetricPair build(Family f, int N, int q, bool orthogonal_for_bcd0 = true);
    // Shorthand ids: "so5", "sp4", "so5/so4", "so6/so4+so2", "sp8/sp6+sp2".
    static SymmetricPair from_id(const std::string& id);

    Family family() const { return family_; }
    bool orthogonal() const { return orthogonal_; }
    int N() const { return N_; }
    int n() const { return n_; }
    int p() const { return p_; }
    int q() const { return q_; }
    int delta() const { return orthogonal_ ? 0 : 1; }
    int ell() const { return ell_; }
    int kay() const { return kay_; }
    Rational kappa() const { return kappa_; }
    Rational d() const { return d_; }

    bool odd_N() const { return N_ % 2 == 1; }
    // Lower bracket sign: the BI(b) subfamily (odd q), including (so3, so2).
    bool lower_bracket() const { return orthogonal_ && odd_N() && q_ % 2 == 1; }
    int bracket_sign() const { return lower_bracket() ? -1 : 1; }
    // Upper sign orthogonal, lower sign symplectic.
    int pm() const { return orthogonal_ ? 1 : -1; }

    bool is_bcd0() const { return q_ == 0; }
    // Pairs (so_N, so_{N-2} + so_2), N >= 5: the one-parameter K-matrix range.
    bool q_is_so2() const { return orthogonal_ && q_ == 2 && N_ >= 5; }
    bool is_bi_q1() const { return orthogonal_ && odd_N() && q_ == 1; }

    // Diagonal entry g_ii of the involution matrix, i in I_N.
    Rational g_entry(int i) const;
    // theta_ij: 1 in the orthogonal case, sign(i)sign(j) in the symplectic one.
    int theta(int i, int j) const;

    // Index set I_N = {-n,..,-1,(0),1,..,n} in ascending order.
    std::vector<int> indices() const;
    // Nonnegative indices I_N^+.
    std::vector<int> indices_plus() const;

    // Largest legal reduction step: l - [l = n], further capped so the reduced
    // ambient algebra stays supported (so_{>=3} or sp_{>=2}).
    int max_reduction_step() const;
    // Pair of the reduced chain step m: (g_{N-2m}, g_{N-2l} + g_{2(l-m)}).
    SymmetricPair reduced(int m) const;
    // The BCD0 pair (g_N, g_N) over the same algebra.
    SymmetricPair bcd0_companion() const;

    std::string id() const;

    friend bool operator==(const SymmetricPair& a, const SymmetricPair& b) {
        return a.orthogonal_ == b.orthogonal_ && a.N_ == b.N_ && a.q_ == b.q_;
    }
    friend bool operator!=(const SymmetricPair& a, const SymmetricPair& b) { return !(a == b); }

private:
    SymmetricPair() = default;
    Family family_{};
    bool orthogonal_ = true;
    int N_ = 0, n_ = 0, p_ = 0, q_ = 0, ell_ = 0, kay_ = 0;
    Rational kappa_, d_;
};

} // namespace tyk

#endif
