#pragma once

#include "mclab/linalg.hpp"
#include "mclab/poly.hpp"
#include "mclab/rootsys.hpp"

#include <optional>
#include <string>
#include <vector>

namespace mclab {

// Element with rational coefficients over the algebra basis.
using QElem = std::vector<Q>;
// Element with polynomial coefficients (all in one ring).
using PElem = std::vector<Poly>;

// Split Lie algebra with a matrix realization. Basis order: H_delta for the simple roots
// (index k), E_gamma for positive roots (rank + id), E_{-gamma} (rank + N + id).
// The trace form B0(X, Y) = tr(XY) satisfies B0(E_a, E_{-a}) = 1 and B0(H, H_delta) = delta(H);
// the Killing form is killing_constant() * B0.
class SplitLieAlgebra {
public:
    static SplitLieAlgebra build_sl(int n);
    static SplitLieAlgebra build_sp(int l);
    // Family letter + rank of the root system: A -> sl(rank+1), C -> sp(rank).
    static SplitLieAlgebra build(char family, int rank);

    const RootSystem& root_system() const { return rs_; }
    std::string name() const { return name_; }
    std::size_t dim() const { return mats_.size(); }
    std::size_t rank() const { return static_cast<std::size_t>(rs_.rank()); }
    std::size_t num_positive() const { return rs_.num_positive(); }
    std::size_t matrix_size() const { return n_; }

    std::size_t cartan_index(std::size_t k) const { return k; }
    // Basis index of E_gamma for a signed root id.
    std::size_t root_index(std::size_t sid) const { return rank() + sid; }
    bool is_cartan(std::size_t b) const { return b < rank(); }
    // Signed root id of a root basis index.
    std::size_t root_of(std::size_t b) const { return b - rank(); }
    std::string basis_label(std::size_t b) const;

    const QMatrix& matrix(std::size_t b) const { return mats_.at(b); }
    QMatrix to_matrix(const QElem& x) const;
    // Coordinates of a matrix in the realized algebra; throws if it lies outside.
    QElem decompose(const QMatrix& m) const;

    // [e_a, e_b] in basis coordinates (sparse).
    const SparseVec& bracket_basis(std::size_t a, std::size_t b) const { return br_.at(a).at(b); }
    QElem bracket(const QElem& x, const QElem& y) const;
    PElem bracket(const PElem& x, const PElem& y) const;
    // c_{a,b}: coefficient of E_{a+b} in [E_a, E_b] for signed roots (0 if a+b is not a root).
    Q c(std::size_t sa, std::size_t sb) const;

    // Value of a signed root on the Cartan element with coordinates h (length rank()).
    Q root_value(std::size_t sid, const std::vector<Q>& h) const;
    Q root_value_on_basis(std::size_t sid, std::size_t k) const;
    // H_alpha with B0(H, H_alpha) = alpha(H), as Cartan coordinates.
    std::vector<Q> H_of(std::size_t sid) const;
    // H_0 with delta(H_0) = -1 for every simple delta.
    std::vector<Q> solve_H0() const;
    // Fundamental coweights W_k: delta_i(W_k) = [i == k].
    std::vector<std::vector<Q>> coweights() const;
    QElem cartan_element(const std::vector<Q>& h) const;

    QElem theta(const QElem& x) const;
    Q trace_form(const QElem& x, const QElem& y) const;
    Q killing(const QElem& x, const QElem& y) const { return killing_constant() * trace_form(x, y); }
    Q killing_constant() const { return kappa_; }
    // Killing form computed as tr(ad x ad y), for cross-checks.
    Q killing_via_ad(const QElem& x, const QElem& y) const;

    QElem basis_vector(std::size_t b) const;
    PElem constant(const QElem& x, std::size_t nvars) const;

    // Polynomial matrix helpers for the matrix backend.
    using PMatrix = std::vector<std::vector<Poly>>;
    PMatrix to_pmatrix(const PElem& x, std::size_t nvars) const;
    PElem decompose(const PMatrix& m, std::size_t nvars) const;

private:
    void finish();

    std::string name_;
    RootSystem rs_;
    std::size_t n_ = 0;
    Q kappa_;
    std::vector<QMatrix> mats_;
    QMatrix gram_inv_;
    std::vector<std::vector<SparseVec>> br_;
    std::vector<std::vector<Q>> rv_;  // rv_[k][id]: positive root id evaluated on H_k
};

// Polynomial matrix arithmetic (square, same ring).
using PMatrix = SplitLieAlgebra::PMatrix;
PMatrix pm_identity(std::size_t n, std::size_t nvars);
PMatrix pm_mul(const PMatrix& a, const PMatrix& b);
PMatrix pm_add(const PMatrix& a, const PMatrix& b, const Q& s = 1);
// Exponential / logarithm of unipotent polynomial matrices (finite series).
PMatrix pm_exp_nilpotent(const PMatrix& a);
PMatrix pm_log_unipotent(const PMatrix& m);
PMatrix pm_inverse_unipotent(const PMatrix& m);

// Element-wise helpers.
PElem pe_add(const PElem& a, const PElem& b, const Q& s = 1);
PElem pe_scale(const PElem& a, const Poly& p);
bool pe_is_zero(const PElem& a);
PElem pe_compose(const PElem& a, const std::vector<Poly>& subs);

}  // namespace mclab
