#pragma once

#include "mclab/mcfields.hpp"

#include <random>
#include <vector>

namespace testsupport {

using mclab::Poly;
using mclab::Q;

// Small rationals p/q with |p| <= 9, 1 <= q <= 5.
inline Q random_rational(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
    Q q(num(rng), den(rng));
    q.canonicalize();
    return q;
}

inline std::vector<Q> random_point(std::mt19937_64& rng, std::size_t n) {
    std::vector<Q> p;
    for (std::size_t i = 0; i < n; ++i) p.push_back(random_rational(rng));
    return p;
}

// Coefficient vectors of polynomials over the union of their monomials.
inline std::vector<mclab::SparseVec> coefficient_rows(const std::vector<Poly>& ps) {
    std::map<mclab::Mono, std::size_t> col;
    for (auto& p : ps)
        for (auto& [m, c] : p.terms()) col.emplace(m, col.size());
    std::vector<mclab::SparseVec> rows;
    for (auto& p : ps) {
        mclab::SparseVec r;
        for (auto& [m, c] : p.terms()) r[col.at(m)] = c;
        rows.push_back(r);
    }
    return rows;
}

inline std::size_t poly_rank(const std::vector<Poly>& ps) { return mclab::rank(coefficient_rows(ps)); }

inline bool same_span(const std::vector<Poly>& a, const std::vector<Poly>& b) {
    std::vector<Poly> all = a;
    all.insert(all.end(), b.begin(), b.end());
    std::size_t ra = poly_rank(a), rb = poly_rank(b), r = poly_rank(all);
    return ra == r && rb == r;
}

}  // namespace testsupport
