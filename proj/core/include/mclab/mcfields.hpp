#pragma once

#include "mclab/chart.hpp"
#include "mclab/hessenberg.hpp"
#include "mclab/linalg.hpp"

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

namespace mclab {

// Substitution x_gamma -> 0 for gamma in C, identity otherwise.
std::vector<Poly> slice_substitution(const HessenbergSet& hs);
// Drop C components and set the C coordinates to zero (either frame).
PolyVectorField project_to_slice(const PolyVectorField& field, const HessenbergSet& hs);
// Slice frame: projections of the chart frame for gamma in R, zero fields for gamma in C.
std::vector<PolyVectorField> slice_frame(const Chart& chart, const HessenbergSet& hs);

// nu(E): slice projection of tau(E), in the slice frame.
PolyVectorField nu(const Chart& chart, const HessenbergSet& hs, const QElem& e);

// Weighted degree under the H_0 grading (x_gamma has degree ht(gamma)); nullopt if not homogeneous.
std::optional<long> homogeneous_degree(const Poly& p, const std::vector<int>& weights);
// Fields: frame-form component f X_gamma has degree deg f - ht(gamma); coordinate form f d_gamma likewise.
std::optional<long> homogeneous_degree(const PolyVectorField& v, const std::vector<int>& weights);
std::map<long, PolyVectorField> homogeneous_parts(const PolyVectorField& v, const std::vector<int>& weights);

// Structure constant for the chart frame: [G_a, G_b] = c^G_{a,b} G_{a+b}.
Q frame_constant(const Chart& chart, std::size_t a, std::size_t b);

struct McUnknown {
    std::size_t gamma;
    Mono mono;
};

struct McRowKey {
    std::size_t delta, gamma;
    Mono mono;
    bool operator<(const McRowKey& o) const { return std::tie(delta, gamma, mono) < std::tie(o.delta, o.gamma, o.mono); }
};

// Linear system for the multicontact conditions, restricted to grades [grade_min, grade_max].
struct McSystem {
    std::vector<McUnknown> unknowns;
    std::map<std::pair<std::size_t, Mono>, std::size_t> index;
    std::vector<McRowKey> row_keys;
    std::vector<SparseVec> rows;
    std::map<long, std::vector<std::size_t>> grade_unknowns;
    long grade_min = 0, grade_max = 0;
};

McSystem assemble_mc_system(const HessenbergSet& hs, const Chart& chart, long grade_min, long grade_max);
// Grades -max ht(R) .. degree_bound.
McSystem assemble_mc_system(const HessenbergSet& hs, const Chart& chart, int degree_bound);

struct McSolution {
    std::vector<PolyVectorField> basis;  // slice fields, left-invariant frame
    std::vector<long> grades;            // grade of each basis field
    // Free unknown of each basis field: its coefficient there is 1 and 0 in the other fields.
    std::vector<std::pair<std::size_t, Mono>> free_features;
    std::size_t dimension = 0;
    int degree_bound = 0;
    bool stabilized = false;
    std::size_t next_grade_nullity = 0;
    // bracket_table[i][j] = coordinates of [F_i, F_j] in the basis
    std::vector<std::vector<std::vector<Q>>> bracket_table;
    bool closed = true;
    std::vector<std::string> warnings;
};

int default_degree_bound(const RootSystem& rs);
McSolution solve_mc(const HessenbergSet& hs, const Chart& chart, int degree_bound = -1);

// Bracket of slice frame-form fields.
PolyVectorField field_bracket(const std::vector<PolyVectorField>& frame, const PolyVectorField& a,
                              const PolyVectorField& b);
// Coordinates of a frame-form field in the solution basis; nullopt when outside the span.
std::optional<std::vector<Q>> solution_coordinates(const McSolution& sol, const PolyVectorField& v);
// Feature vector (gamma, monomial) -> coefficient, for span tests.
std::map<std::pair<std::size_t, Mono>, Q> field_features(const PolyVectorField& v);
// Rank of a family of frame-form fields.
std::size_t field_rank(const std::vector<PolyVectorField>& fields);

// Independent check: [F, Xbar_delta] lies in span Xbar_delta for every simple delta in R.
bool residual_check(const HessenbergSet& hs, const Chart& chart, const PolyVectorField& f);

struct AlgebraInvariants {
    std::size_t dimension = 0;
    std::vector<std::size_t> derived_series;
    std::size_t killing_rank = 0;
    std::size_t killing_positive = 0, killing_negative = 0;
};
AlgebraInvariants algebra_invariants(const McSolution& sol);

// Basis of q: Cartan, positive roots, negatives in D (as algebra basis indices).
std::vector<std::size_t> normalizer_basis(const SplitLieAlgebra& alg, const HessenbergSet& hs);
// Brute force: D from brackets, {-a : [E_{-a}, n_C] in n_C}.
std::vector<std::size_t> normalizer_support_bruteforce(const SplitLieAlgebra& alg, const HessenbergSet& hs);

struct NormalizerComparison {
    std::size_t dim_q = 0, dim_q_mod_nC = 0, rank_nu = 0, dim_solution = 0, dim_conjecture = 0;
    bool inclusion = false;       // nu(q) inside the solution span
    bool kernel_is_nC = false;    // nu vanishes on n_C and rank nu = dim q - |C|
    bool hypothesis_I = false, hypothesis_II = false;
    bool equality = false;        // rank nu == dim solution
    bool conjecture_match = false;
};
NormalizerComparison compare_with_normalizer(const HessenbergSet& hs, const Chart& chart, const McSolution& sol);

struct ZoneReduction {
    std::vector<std::vector<std::size_t>> zones;
    std::vector<std::size_t> zone_dims;
    std::size_t total_zone_dim = 0, full_dim = 0;
    bool additive = false;
    bool lifts_are_solutions = false;
    bool lifts_span = false;
};
ZoneReduction reduce_by_dark_zones(const HessenbergSet& hs, const Chart& chart, int degree_bound = -1);

// Structural checks on a solution.
bool check_gerarchia(const HessenbergSet& hs, const McSolution& sol);
bool check_ombra(const HessenbergSet& hs, const Chart& chart, const McSolution& sol);
// tau(E) components along R carry no C variables, for E in q.
bool check_cindip(const HessenbergSet& hs, const Chart& chart);

}  // namespace mclab
