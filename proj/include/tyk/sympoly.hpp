#ifndef TYK_SYMPOLY_HPP
#define TYK_SYMPOLY_HPP

#include <optional>

#include "tyk/pair.hpp"
#include "tyk/ratfunc.hpp"

namespace tyk {

// Monic polynomial given by its rational root multiset, together with a
// symmetry center: the multiset is closed under r -> center - r.
class SymPoly {
public:
    SymPoly() = default;
    SymPoly(std::map<Rational, int> roots, Rational center);
    static SymPoly one(Rational center) { return SymPoly({}, std::move(center)); }

    const std::map<Rational, int>& roots() const { return roots_; }
    const Rational& center() const { return center_; }
    int degree() const;
    bool is_one() const { return roots_.empty(); }
    bool has_root(const Rational& r) const { return roots_.count(r) > 0; }
    int multiplicity(const Rational& r) const {
        auto it = roots_.find(r);
        return it == roots_.end() ? 0 : it->second;
    }

    UniPoly expand() const { return UniPoly::from_roots(roots_); }

    // P(u + s): roots move to r - s and the center to center - 2s.
    SymPoly shift_arg(const Rational& s) const;
    // Product; centers must agree.
    friend SymPoly operator*(const SymPoly& a, const SymPoly& b);
    // Exact division by a sub-multiset; throws NoSolution if d is not contained.
    SymPoly divide_exact(const SymPoly& d) const;
    bool divisible_by(const SymPoly& d) const;

    friend bool operator==(const SymPoly& a, const SymPoly& b) {
        return a.roots_ == b.roots_ && (a.roots_.empty() || a.center_ == b.center_);
    }
    friend bool operator!=(const SymPoly& a, const SymPoly& b) { return !(a == b); }

    std::string str() const;

private:
    std::map<Rational, int> roots_;
    Rational center_;
};

// The classification data (alpha, P_1, ..., P_n). alpha is absent exactly for
// the BCD0 pairs. Centers: P_1 about kappa + 2^delta, P_i about n - i + 2.
struct DrinfeldTuple {
    SymmetricPair pair;
    std::optional<Rational> alpha;
    std::vector<SymPoly> polys; // polys[i-1] = P_i

    static Rational center_of(const SymmetricPair& pair, int i);
    static DrinfeldTuple trivial(const SymmetricPair& pair);
    static DrinfeldTuple make(SymmetricPair pair, std::optional<Rational> alpha,
                              std::vector<SymPoly> polys);

    const SymPoly& P(int i) const { return polys.at(i - 1); }
    void validate() const;

    friend bool operator==(const DrinfeldTuple& a, const DrinfeldTuple& b) {
        return a.pair == b.pair && a.alpha == b.alpha && a.polys == b.polys;
    }
    friend bool operator!=(const DrinfeldTuple& a, const DrinfeldTuple& b) { return !(a == b); }

    std::string str() const;
};

// Unique (l, P') with P'(alpha - m l) != 0 and
// P(u+m)/P(u) * (alpha-u)/(alpha+u-center+m)
//   = P'(u+m)/P'(u) * ((alpha-ml)-u)/((alpha-ml)+u-center+m).
std::pair<int, SymPoly> poly2_reduce(const SymPoly& p, const Rational& alpha, const Rational& m);

struct ShiftQuotientSolution {
    SymPoly P;
    std::optional<Rational> alpha;
};

// Solve f(u) = P(u+m)/P(u) * ((alpha-u)/(alpha+u-l+m))^{with_alpha} for a
// monic P symmetric about l with rational roots, and (optionally) alpha with
// P(alpha) != 0. Existence is decided exactly; the reconstruction is verified
// before returning. Throws NoSolution / NonRationalRoot.
ShiftQuotientSolution solve_shift_quotient(const RatFunc& f, const Rational& m,
                                           const Rational& l, bool with_alpha);

} // namespace tyk

#endif
