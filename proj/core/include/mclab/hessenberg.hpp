#pragma once

#include "mclab/rootsys.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace mclab {

// Subset R of the positive roots closed under subtracting positive roots.
struct HessenbergSet {
    const RootSystem* rs = nullptr;
    std::vector<std::size_t> R;  // sorted positive ids
    std::vector<std::size_t> C;  // complement, sorted
    std::vector<bool> in_R;      // indexed by positive id

    bool contains(std::size_t id) const { return in_R.at(id); }
};

class HessenbergError : public std::invalid_argument {
public:
    HessenbergError(const std::string& what, std::size_t alpha, std::size_t beta)
        : std::invalid_argument(what), alpha(alpha), beta(beta) {}
    std::size_t alpha, beta;
};

// Witness (alpha, beta) with alpha in R, alpha - beta positive but not in R.
std::optional<std::pair<std::size_t, std::size_t>> hessenberg_violation(const RootSystem& rs,
                                                                        const std::vector<std::size_t>& R);
HessenbergSet validate(const RootSystem& rs, std::vector<std::size_t> R);
HessenbergSet type_p_subset(const RootSystem& rs, int p);
HessenbergSet full_set(const RootSystem& rs);

// Rank bound for enumeration: MCLAB_MAX_RANK if set, else 4.
int max_enumeration_rank();
// All Hessenberg subsets ordered by (|R|, sorted ids). Throws if rank exceeds the bound.
std::vector<HessenbergSet> enumerate_all(const RootSystem& rs, int max_rank = -1);

struct HessenbergDims {
    std::size_t slice = 0, q = 0, q_mod_nC = 0, conjecture = 0;
};

struct HessenbergReport {
    std::vector<std::size_t> maximal_roots;
    std::map<std::size_t, std::vector<std::size_t>> shadows;
    std::vector<std::vector<std::size_t>> dark_zones;
    std::vector<std::size_t> boundary_roots;        // simple ids
    std::vector<std::size_t> normalizer_support;    // signed ids of negative roots
    std::vector<std::size_t> intersection;
    bool hypothesis_I = false, hypothesis_II = false;
    HessenbergDims dims;
};

HessenbergReport analyze(const HessenbergSet& hs);

// True iff -alpha in D exactly when the simple support of alpha misses B.
// Requires hypothesis (I); throws std::domain_error otherwise.
bool check_norma(const HessenbergSet& hs);
bool contains_all_simple(const HessenbergSet& hs);

}  // namespace mclab
