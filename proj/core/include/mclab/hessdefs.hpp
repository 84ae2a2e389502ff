#pragma once

#include "mclab/chart.hpp"
#include "mclab/hessenberg.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace mclab {

class NotRegularError : public std::domain_error {
public:
    NotRegularError(std::vector<std::size_t> roots, const std::string& what)
        : std::domain_error(what), vanishing(std::move(roots)) {}
    std::vector<std::size_t> vanishing;  // positive roots with alpha(H) = 0
};

// Regular element H of the Cartan subalgebra. Numeric: rational Cartan coordinates.
// Symbolic: H = sum_k t_k W_k over the fundamental coweights, so delta_k(H) = t_k; the t_k are
// extra polynomial variables appended after the chart coordinates.
struct CartanParam {
    bool symbolic = false;
    std::vector<Q> h;  // numeric only
};

// sl(n): n diagonal entries summing to zero. sp(l): l entries, H = diag(lambda, -lambda).
std::vector<Q> cartan_from_diagonal(const SplitLieAlgebra& alg, const std::vector<Q>& diag);

struct HessenbergEquations {
    const Chart* chart = nullptr;
    const HessenbergSet* hs = nullptr;
    CartanParam H;
    std::size_t nvars = 0;                  // chart coordinates + symbolic parameters
    std::vector<std::string> names;
    std::vector<std::size_t> C;             // ordered by height, then id
    std::map<std::size_t, Poly> alpha_of_H; // alpha in C -> alpha(H)
    std::map<std::size_t, Poly> p;          // alpha in C -> p_alpha
};

// p_alpha = (Ad(n^{-1}) H)_alpha / scale(alpha), so that p_alpha = alpha(H) x_alpha + lower-height terms.
// Throws NotRegularError for a numeric H with some alpha(H) = 0.
HessenbergEquations defining_equations(const Chart& chart, const HessenbergSet& hs, const CartanParam& H);

// alpha(H) as a polynomial in the equation ring.
Poly root_on_H(const HessenbergEquations& eqs, std::size_t alpha);

// Literal entries of n^{-1} H n at the positions of E_alpha (alpha in C), from the matrix realization.
std::map<std::size_t, Poly> matrix_entries(const HessenbergEquations& eqs);
// Each entry equals scale * p_alpha * (E_alpha)_{ij}.
bool matrix_oracle_agrees(const HessenbergEquations& eqs);

struct SmoothnessCertificate {
    std::vector<std::vector<Poly>> jacobian;    // rows C, columns all positive roots
    std::vector<std::vector<Poly>> sub_jacobian; // C x C, ordered by height
    bool lower_triangular = false;
    bool diagonal_is_alpha_H = false;
    Poly determinant;
    Poly product_alpha_H;
    bool identity_holds = false;  // determinant == product
    std::size_t rank_at_origin = 0;
    std::size_t dim_hess = 0;     // |R| when the certificate holds
};
SmoothnessCertificate smoothness_certificate(const HessenbergEquations& eqs);

// Determinant of a square polynomial matrix by Laplace expansion (memoized on column sets).
Poly poly_determinant(const std::vector<std::vector<Poly>>& m, std::size_t nvars);

// x_alpha = numerator / prod_beta beta(H)^{exponent}, alpha in C, numerator in R variables and parameters.
struct GraphEntry {
    Poly numerator;
    std::map<std::size_t, unsigned> denominator;  // root id -> exponent
};
struct GraphMap {
    std::map<std::size_t, GraphEntry> entries;
    // Numeric H only: x_alpha as a polynomial in the R variables.
    std::map<std::size_t, Poly> values;
};
GraphMap graph_map(const HessenbergEquations& eqs);
Poly denominator_poly(const HessenbergEquations& eqs, const GraphEntry& e);

// Substitution x -> phi(x) on the slice (numeric H): R variables fixed, C variables from the graph.
std::vector<Poly> graph_substitution(const HessenbergEquations& eqs, const GraphMap& g);
// Every p_alpha vanishes on the graph (cleared denominators in symbolic mode).
bool graph_solves_equations(const HessenbergEquations& eqs, const GraphMap& g);

// Chain-rule pushforward of the slice frame: component alpha in C is V(g_alpha), R components unchanged.
// Numeric H only. Result is in coordinate form on the slice variables.
std::vector<PolyVectorField> pushforward_frame(const HessenbergEquations& eqs, const GraphMap& g);

}  // namespace mclab
