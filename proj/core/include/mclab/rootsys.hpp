#pragma once

#include "mclab/rational.hpp"

#include <optional>
#include <set>
#include <string>
#include <vector>

namespace mclab {

struct Root {
    std::vector<int> coeffs;  // n_delta(alpha) over the simple roots
    int height = 0;
    std::size_t id = 0;
};

struct OmegaDecomposition {
    std::vector<std::size_t> sigma0, sigma_half, sigma1;
};

// Reduced root system of classical type. Positive roots are ordered by height, then by
// coefficient vector in descending lexicographic order, so the simple roots come first
// with delta_i at id i. Signed ids: i for the positive root i, N + i for its negative.
class RootSystem {
public:
    static RootSystem build(char family, int rank);

    char family() const { return family_; }
    int rank() const { return rank_; }
    std::string name() const { return std::string(1, family_) + std::to_string(rank_); }
    const std::vector<std::vector<int>>& cartan_matrix() const { return cartan_; }
    const std::vector<Root>& positive_roots() const { return pos_; }
    std::size_t num_positive() const { return pos_.size(); }
    const Root& root(std::size_t id) const { return pos_.at(id); }
    std::size_t highest_root() const { return pos_.size() - 1; }
    int height(std::size_t id) const { return pos_.at(id).height; }
    int max_height() const { return pos_.back().height; }
    bool is_simple(std::size_t id) const { return id < pos_.size() && pos_[id].height == 1; }

    // Signed-id helpers.
    std::vector<int> signed_coeffs(std::size_t sid) const;
    std::optional<std::size_t> index_of(const std::vector<int>& coeffs) const;
    std::size_t negate(std::size_t sid) const;
    bool is_positive(std::size_t sid) const { return sid < pos_.size(); }

    // Positive + positive; nullopt when the sum is not a root.
    std::optional<std::size_t> sum(std::size_t a, std::size_t b) const;
    // Signed sum (result may be any signed root).
    std::optional<std::size_t> signed_sum(std::size_t a, std::size_t b) const;
    // alpha - beta for positive ids, as a signed id.
    std::optional<std::size_t> difference(std::size_t a, std::size_t b) const;

    // Pairing (.,.) on coefficient vectors; short roots have squared length 2.
    Q pairing(const std::vector<int>& a, const std::vector<int>& b) const;
    Q pairing_ids(std::size_t sa, std::size_t sb) const { return pairing(signed_coeffs(sa), signed_coeffs(sb)); }

    // beta preceq alpha componentwise.
    bool leq(std::size_t beta, std::size_t alpha) const;
    bool adjacent(std::size_t d1, std::size_t d2) const;

    std::string label(std::size_t sid) const;
    // Accepts coefficient strings ("110", "-011", "1,1,0"), aliases ("a", "b+c", "2a+b", "-a-b").
    std::size_t parse_root(const std::string& text) const;


private:
    char family_ = 'A';
    int rank_ = 0;
    std::vector<std::vector<int>> cartan_;
    std::vector<std::vector<Q>> gram_;  // pairing on simple roots
    std::vector<Root> pos_;
    std::vector<std::vector<long>> sum_;  // -1 when absent
};

std::optional<std::vector<std::size_t>> chain_between(const RootSystem& rs, std::size_t beta, std::size_t alpha);
OmegaDecomposition omega_decompose(const RootSystem& rs);
std::set<std::size_t> simple_support(const RootSystem& rs, std::size_t sid);
bool is_connected_support(const RootSystem& rs, std::size_t sid);
bool is_connected(const RootSystem& rs, const std::set<std::size_t>& simples);

}  // namespace mclab
