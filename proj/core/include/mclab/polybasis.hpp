#pragma once

#include "mclab/chart.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace mclab {

// Closed-form omega-components p^E of the multicontact fields, in the three-factor chart
// n = exp(z Z) exp(sum y_a Y_a) exp(sum x_b X_b). Convention: p^E is the E_omega coefficient
// of Ad(n^{-1}) E, i.e. the flow exp(+tE); tau() in chart.hpp uses exp(-tE) and differs by a sign.

// Coefficient of E_omega in Ad(n^{-1}) e, in any chart.
Poly omega_component_oracle(const Chart& chart, const QElem& e, Path path = Path::abstract);

// One representative per class {a, omega - a} of Sigma_1/2 (the smaller id).
std::vector<std::size_t> sigma_half_representatives(const RootSystem& rs);

Poly gen_sigma_half(const Chart& chart, std::size_t gamma);
// h: Cartan coordinates.
Poly gen_cartan(const Chart& chart, const std::vector<Q>& h);
// nu in Sigma_0 or -Sigma_0 (signed id).
Poly gen_sigma0(const Chart& chart, std::size_t nu);
// Same combination with the printed weights: no 1/2 on the A_neq sum. Kept for the comparison test.
Poly gen_sigma0_printed(const Chart& chart, std::size_t nu);

// Solution of the system: omega(H) = -omega(H_gamma), (3a - omega)(H) = -a(H_gamma) for a in the
// representatives. Throws std::domain_error when inconsistent.
std::vector<Q> solve_H_of_gamma(const SplitLieAlgebra& alg, std::size_t gamma);
// Every equation of the system (all a in Sigma_1/2) holds at h.
bool sistema1_holds(const SplitLieAlgebra& alg, std::size_t gamma, const std::vector<Q>& h);
// H(gamma') from H(gamma) for a simple gamma in Sigma_1/2 and a chain of simple roots in Sigma_0.
// nullopt when gamma' is not reached that way.
std::optional<std::vector<Q>> H_of_gamma_by_extension(const SplitLieAlgebra& alg, std::size_t gamma);

Poly gen_neg_sigma_half(const Chart& chart, std::size_t gamma);
// -(p^{H_w})^2 / (2 w(H_w)) - 1/4 sum_a p^{w-a} p^{a-w}; the square root in the normalized H cancels.
Poly gen_neg_omega(const Chart& chart);

// Closed form for an algebra basis index (Cartan H_k or root vector).
Poly generator(const Chart& chart, std::size_t basis_index);

struct OmegaComponentBasis {
    std::string algebra, chart;
    std::vector<std::size_t> representatives;
    std::map<std::size_t, Poly> generators;  // basis index -> p
};
OmegaComponentBasis build_basis(const Chart& chart);

// H_0-grading degree: ht(omega) - ht(E), Cartan elements at ht(omega).
long expected_degree(const SplitLieAlgebra& alg, std::size_t basis_index);
// The generators live in Q[z, y]; the y's and z are themselves generated by Sigma_1/2 and Cartan labels.
bool in_generated_subring(const Chart& chart, const Poly& p);

struct OracleCheck {
    std::size_t basis_index = 0;
    std::string label;
    Poly closed, oracle;
    bool equal = false;
    bool graded = false;
};
std::vector<OracleCheck> check_against_oracle(const Chart& chart);

// s with a = s * b, when one exists (b nonzero).
std::optional<Q> proportionality(const Poly& a, const Poly& b);

}  // namespace mclab
