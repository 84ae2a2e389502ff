#include "mclab/hessenberg.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <set>

namespace mclab {

std::optional<std::pair<std::size_t, std::size_t>> hessenberg_violation(const RootSystem& rs,
                                                                        const std::vector<std::size_t>& R) {
    std::vector<bool> in(rs.num_positive(), false);
    for (auto a : R) in.at(a) = true;
    for (auto a : R)
        for (std::size_t b = 0; b < rs.num_positive(); ++b) {
            auto d = rs.difference(a, b);
            if (d && rs.is_positive(*d) && !in[*d]) return std::make_pair(a, b);
        }
    return std::nullopt;
}

HessenbergSet validate(const RootSystem& rs, std::vector<std::size_t> R) {
    std::sort(R.begin(), R.end());
    R.erase(std::unique(R.begin(), R.end()), R.end());
    for (auto a : R)
        if (a >= rs.num_positive()) throw std::invalid_argument("root id outside the positive roots");
    if (auto w = hessenberg_violation(rs, R))
        throw HessenbergError("not a Hessenberg set: " + rs.label(w->first) + " in R but " + rs.label(w->first) + " - " +
                                  rs.label(w->second) + " is a positive root outside R",
                              w->first, w->second);
    HessenbergSet hs;
    hs.rs = &rs;
    hs.R = R;
    hs.in_R.assign(rs.num_positive(), false);
    for (auto a : R) hs.in_R[a] = true;
    for (std::size_t a = 0; a < rs.num_positive(); ++a)
        if (!hs.in_R[a]) hs.C.push_back(a);
    // The complement spans an ideal of n.
    for (auto a : hs.C)
        for (std::size_t b = 0; b < rs.num_positive(); ++b) {
            auto s = rs.sum(a, b);
            if (s && hs.in_R[*s]) throw std::logic_error("complement of a Hessenberg set is not an ideal");
        }
    return hs;
}

HessenbergSet type_p_subset(const RootSystem& rs, int p) {
    if (p < 1 || p > rs.max_height()) throw std::invalid_argument("type-p needs 1 <= p <= ht(omega)");
    std::vector<std::size_t> R;
    for (auto& r : rs.positive_roots())
        if (r.height <= p) R.push_back(r.id);
    return validate(rs, R);
}

HessenbergSet full_set(const RootSystem& rs) {
    std::vector<std::size_t> R(rs.num_positive());
    std::iota(R.begin(), R.end(), 0);
    return validate(rs, R);
}

int max_enumeration_rank() {
    if (const char* env = std::getenv("MCLAB_MAX_RANK")) {
        try {
            return std::stoi(env);
        } catch (const std::exception&) {
            throw std::invalid_argument("MCLAB_MAX_RANK is not an integer");
        }
    }
    return 4;
}

std::vector<HessenbergSet> enumerate_all(const RootSystem& rs, int max_rank) {
    if (max_rank < 0) max_rank = max_enumeration_rank();
    if (rs.rank() > max_rank)
        throw std::invalid_argument("rank " + std::to_string(rs.rank()) + " exceeds the enumeration bound " +
                                    std::to_string(max_rank));
    std::size_t n = rs.num_positive();
    if (n > 63) throw std::invalid_argument("too many positive roots to enumerate");
    // A set is Hessenberg iff it is down-closed under subtracting simple roots.
    std::vector<std::uint64_t> below(n, 0);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t d = 0; d < static_cast<std::size_t>(rs.rank()); ++d) {
            auto diff = rs.difference(a, d);
            if (diff && rs.is_positive(*diff)) below[a] |= std::uint64_t{1} << *diff;
        }
    std::vector<std::uint64_t> masks;
    std::function<void(std::size_t, std::uint64_t)> rec = [&](std::size_t k, std::uint64_t m) {
        if (k == n) {
            masks.push_back(m);
            return;
        }
        rec(k + 1, m);
        if ((below[k] & m) == below[k]) rec(k + 1, m | (std::uint64_t{1} << k));
    };
    rec(0, 0);
    std::vector<std::vector<std::size_t>> sets;
    for (auto m : masks) {
        std::vector<std::size_t> R;
        for (std::size_t a = 0; a < n; ++a)
            if (m >> a & 1u) R.push_back(a);
        sets.push_back(std::move(R));
    }
    std::sort(sets.begin(), sets.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    std::vector<HessenbergSet> out;
    out.reserve(sets.size());
    for (auto& R : sets) out.push_back(validate(rs, R));
    return out;
}

namespace {

std::vector<std::size_t> find_maximal(const HessenbergSet& hs) {
    const RootSystem& rs = *hs.rs;
    std::vector<std::size_t> out;
    for (auto m : hs.R) {
        bool maximal = true;
        for (auto a : hs.R) {
            auto s = rs.sum(m, a);
            if (s && hs.in_R[*s]) {
                maximal = false;
                break;
            }
        }
        if (maximal) out.push_back(m);
    }
    return out;
}

std::vector<std::size_t> boundary(const HessenbergSet& hs, const std::vector<std::size_t>& maximal) {
    const RootSystem& rs = *hs.rs;
    std::set<std::size_t> b;
    for (auto nu : maximal) {
        auto supp = simple_support(rs, nu);
        if (!is_connected(rs, supp)) continue;
        for (std::size_t d = 0; d < static_cast<std::size_t>(rs.rank()); ++d) {
            if (supp.count(d)) continue;
            for (auto e : supp)
                if (rs.adjacent(d, e)) {
                    b.insert(d);
                    break;
                }
        }
    }
    return {b.begin(), b.end()};
}

// -alpha in D iff alpha not in C and for all gamma in C: gamma - alpha is not a negative root or zero,
// and gamma - alpha positive implies gamma - alpha in C.
std::vector<std::size_t> normalizer_support(const HessenbergSet& hs) {
    const RootSystem& rs = *hs.rs;
    std::vector<std::size_t> out;
    for (std::size_t a = 0; a < rs.num_positive(); ++a) {
        if (!hs.in_R[a]) continue;
        bool ok = true;
        for (auto g : hs.C) {
            if (g == a) {
                ok = false;
                break;
            }
            auto d = rs.difference(g, a);
            if (!d) continue;
            if (!rs.is_positive(*d) || hs.in_R[*d]) {
                ok = false;
                break;
            }
        }
        if (ok) out.push_back(rs.negate(a));
    }
    return out;
}

}  // namespace

bool contains_all_simple(const HessenbergSet& hs) {
    for (std::size_t d = 0; d < static_cast<std::size_t>(hs.rs->rank()); ++d)
        if (!hs.in_R[d]) return false;
    return true;
}

HessenbergReport analyze(const HessenbergSet& hs) {
    const RootSystem& rs = *hs.rs;
    HessenbergReport rep;
    rep.maximal_roots = find_maximal(hs);
    for (auto mu : rep.maximal_roots) {
        auto& s = rep.shadows[mu];
        for (auto a : hs.R)
            if (rs.leq(a, mu)) s.push_back(a);
    }
    // Dark zones: union-find over intersecting shadows.
    std::vector<std::size_t> parent(rep.maximal_roots.size());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<std::size_t(std::size_t)> find = [&](std::size_t i) {
        return parent[i] == i ? i : parent[i] = find(parent[i]);
    };
    for (std::size_t i = 0; i < rep.maximal_roots.size(); ++i)
        for (std::size_t j = i + 1; j < rep.maximal_roots.size(); ++j) {
            auto& si = rep.shadows[rep.maximal_roots[i]];
            auto& sj = rep.shadows[rep.maximal_roots[j]];
            std::vector<std::size_t> common;
            std::set_intersection(si.begin(), si.end(), sj.begin(), sj.end(), std::back_inserter(common));
            if (!common.empty()) parent[find(i)] = find(j);
        }
    std::map<std::size_t, std::set<std::size_t>> zones;
    for (std::size_t i = 0; i < rep.maximal_roots.size(); ++i) {
        auto& s = rep.shadows[rep.maximal_roots[i]];
        zones[find(i)].insert(s.begin(), s.end());
    }
    for (auto& [k, z] : zones) rep.dark_zones.emplace_back(z.begin(), z.end());
    std::sort(rep.dark_zones.begin(), rep.dark_zones.end());

    rep.boundary_roots = boundary(hs, rep.maximal_roots);
    rep.normalizer_support = normalizer_support(hs);

    if (!rep.maximal_roots.empty()) {
        rep.intersection = rep.shadows[rep.maximal_roots.front()];
        for (auto mu : rep.maximal_roots) {
            std::vector<std::size_t> tmp;
            auto& s = rep.shadows[mu];
            std::set_intersection(rep.intersection.begin(), rep.intersection.end(), s.begin(), s.end(),
                                  std::back_inserter(tmp));
            rep.intersection = std::move(tmp);
        }
    }

    rep.hypothesis_I = true;
    rep.hypothesis_II = true;
    for (auto& [mu, s] : rep.shadows) {
        std::set<std::size_t> ss(s.begin(), s.end());
        for (auto a : s)
            for (auto b : s) {
                auto c = rs.sum(a, b);
                if (c && !ss.count(*c)) rep.hypothesis_I = false;
            }
        std::size_t simples = 0;
        for (auto a : s)
            if (rs.is_simple(a)) ++simples;
        if (simples < 2) rep.hypothesis_II = false;
    }

    rep.dims.slice = hs.R.size();
    rep.dims.q = rs.num_positive() + static_cast<std::size_t>(rs.rank()) + rep.normalizer_support.size();
    rep.dims.q_mod_nC = rep.dims.q - hs.C.size();
    std::size_t extra = 0;
    for (auto g : rep.intersection)
        if (!std::count(rep.normalizer_support.begin(), rep.normalizer_support.end(), rs.negate(g))) ++extra;
    rep.dims.conjecture = rep.dims.q_mod_nC + extra;
    return rep;
}

bool check_norma(const HessenbergSet& hs) {
    auto rep = analyze(hs);
    if (!rep.hypothesis_I) throw std::domain_error("check_norma requires hypothesis (I)");
    const RootSystem& rs = *hs.rs;
    std::set<std::size_t> B(rep.boundary_roots.begin(), rep.boundary_roots.end());
    std::set<std::size_t> D(rep.normalizer_support.begin(), rep.normalizer_support.end());
    for (std::size_t a = 0; a < rs.num_positive(); ++a) {
        bool not_in_D = !D.count(rs.negate(a));
        bool meets_B = false;
        for (auto d : simple_support(rs, a))
            if (B.count(d)) meets_B = true;
        if (not_in_D != meets_B) return false;
    }
    return true;
}

}  // namespace mclab
