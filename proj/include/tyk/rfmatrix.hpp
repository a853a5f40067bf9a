#ifndef TYK_RFMATRIX_HPP
#define TYK_RFMATRIX_HPP

#include <optional>
#include <tuple>

#include "tyk/multipoly.hpp"
#include "tyk/pair.hpp"

namespace tyk {

// N x N matrix over multivariate rational functions, with rows and columns
// labeled by the signed index set I_N (0 present only for odd N).
class MatN {
public:
    explicit MatN(SymmetricPair pair) : pair_(std::move(pair)) {}
    static MatN identity(const SymmetricPair& pair);
    static MatN unit(const SymmetricPair& pair, int i, int j, MultiRatFunc value = MultiRatFunc(1));

    const SymmetricPair& pair() const { return pair_; }
    const std::map<std::pair<int, int>, MultiRatFunc>& entries() const { return e_; }

    MultiRatFunc get(int i, int j) const {
        auto it = e_.find({i, j});
        return it == e_.end() ? MultiRatFunc() : it->second;
    }
    void set(int i, int j, MultiRatFunc value) {
        if (value.is_zero()) e_.erase({i, j});
        else e_[{i, j}] = std::move(value);
    }
    void add(int i, int j, const MultiRatFunc& value) { set(i, j, get(i, j) + value); }

    friend MatN operator+(const MatN& x, const MatN& y);
    friend MatN operator-(const MatN& x, const MatN& y);
    friend MatN operator*(const MatN& x, const MatN& y);
    MatN operator*(const MultiRatFunc& s) const;

    // Transposition t: (M^t)_{-j,-i} = theta_ij * M_ij.
    MatN transpose_t() const;
    MultiRatFunc trace() const;
    MatN subst_u(const MultiPoly& value) const;
    MatN rename_var(Var from, Var to) const;

    bool is_zero() const { return e_.empty(); }
    bool is_diagonal() const;
    // Scalar multiple of the identity: returns the scalar when it is one.
    std::optional<MultiRatFunc> as_scalar_identity() const;

private:
    SymmetricPair pair_;
    std::map<std::pair<int, int>, MultiRatFunc> e_;
};

// N^2 x N^2 matrix over the tensor square, labels are pairs of signed indices.
class MatNN {
public:
    using Lbl = std::pair<int, int>;
    explicit MatNN(SymmetricPair pair) : pair_(std::move(pair)) {}

    const SymmetricPair& pair() const { return pair_; }

    void add(const Lbl& r, const Lbl& c, const MultiRatFunc& value) {
        MultiRatFunc s = get(r, c) + value;
        if (s.is_zero()) rows_[r].erase(c);
        else rows_[r][c] = std::move(s);
    }
    MultiRatFunc get(const Lbl& r, const Lbl& c) const {
        auto it = rows_.find(r);
        if (it == rows_.end()) return MultiRatFunc();
        auto jt = it->second.find(c);
        return jt == it->second.end() ? MultiRatFunc() : jt->second;
    }

    friend MatNN operator-(const MatNN& x, const MatNN& y);
    friend MatNN operator*(const MatNN& x, const MatNN& y);

    bool is_zero() const;
    // Row-major first nonzero entry over the signed label order.
    std::optional<std::tuple<Lbl, Lbl, MultiRatFunc>> first_nonzero() const;

    // S acting in the first / second tensor factor.
    static MatNN embed_first(const MatN& s);
    static MatNN embed_second(const MatN& s);

private:
    SymmetricPair pair_;
    std::map<Lbl, std::map<Lbl, MultiRatFunc>> rows_;
};

// Permutation operator P = sum E_ij (x) E_ji.
MatNN perm_operator(const SymmetricPair& pair);
// One-dimensional projector Q = P^{t1}.
MatNN proj_operator(const SymmetricPair& pair);
// R(x) = I - x^{-1} P + (x - kappa)^{-1} Q with a polynomial spectral argument.
MatNN rmatrix_at(const SymmetricPair& pair, const MultiPoly& x);

// The constant involution matrix G of the pair.
MatN gmatrix(const SymmetricPair& pair);
// G(x) = (d I - x G)/(d - x) in the chosen variable.
MatN gmatrix_u(const SymmetricPair& pair, Var var = Var::u);

} // namespace tyk

#endif
