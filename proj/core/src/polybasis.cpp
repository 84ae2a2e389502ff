#include "mclab/polybasis.hpp"

#include <algorithm>
#include <stdexcept>

namespace mclab {

namespace {

struct Ctx {
    const SplitLieAlgebra& alg;
    const RootSystem& rs;
    OmegaDecomposition d;
    std::size_t w;
    std::size_t N;
};

Ctx context(const Chart& chart) {
    if (chart.kind() != ChartKind::three_factor)
        throw std::invalid_argument("closed-form generators need the three_factor chart");
    const auto& rs = chart.root_system();
    return Ctx{chart.algebra(), rs, omega_decompose(rs), rs.highest_root(), rs.num_positive()};
}

bool contains(const std::vector<std::size_t>& v, std::size_t x) { return std::find(v.begin(), v.end(), x) != v.end(); }

// omega - a for a positive root a in Sigma_1/2.
std::size_t complement(const Ctx& c, std::size_t a) {
    auto r = c.rs.difference(c.w, a);
    if (!r || !c.rs.is_positive(*r)) throw std::logic_error("omega - a is not a positive root");
    return *r;
}

// a(H_b) = B0(H_a, H_b) for signed ids.
Q pair_H(const SplitLieAlgebra& alg, std::size_t a, std::size_t b) { return alg.root_value(a, alg.H_of(b)); }

Poly sigma0_combination(const Chart& chart, std::size_t nu, const Q& neq_weight) {
    Ctx c = context(chart);
    std::size_t pos = c.rs.is_positive(nu) ? nu : c.rs.negate(nu);
    if (!contains(c.d.sigma0, pos)) throw std::invalid_argument("root " + c.rs.label(nu) + " is not in +-Sigma_0");
    Poly p(c.N);
    for (auto a : c.d.sigma_half) {
        auto s = c.rs.signed_sum(nu, a);
        if (!s) continue;
        if (!c.rs.is_positive(*s) || !contains(c.d.sigma_half, *s))
            throw std::logic_error("nu + a left Sigma_1/2");
        std::size_t wa = complement(c, a);
        Q k = c.alg.c(a, nu) / c.alg.c(a, wa);
        if (complement(c, *s) != a)
            p += gen_sigma_half(chart, *s) * gen_sigma_half(chart, wa) * (k * neq_weight);
        else
            p += gen_sigma_half(chart, wa).pow(2) * (k * Q(1, 2));
    }
    return p;
}

}  // namespace

Poly omega_component_oracle(const Chart& chart, const QElem& e, Path path) {
    const auto& alg = chart.algebra();
    PElem ad = adjoint_of_point(chart, e, path);
    return ad[alg.root_index(alg.root_system().highest_root())];
}

std::vector<std::size_t> sigma_half_representatives(const RootSystem& rs) {
    auto d = omega_decompose(rs);
    std::vector<std::size_t> reps;
    for (auto a : d.sigma_half) {
        auto b = rs.difference(rs.highest_root(), a);
        if (b && a <= *b) reps.push_back(a);
    }
    return reps;
}

Poly gen_sigma_half(const Chart& chart, std::size_t gamma) {
    Ctx c = context(chart);
    if (!contains(c.d.sigma_half, gamma)) throw std::invalid_argument("root " + c.rs.label(gamma) + " is not in Sigma_1/2");
    std::size_t wg = complement(c, gamma);
    return chart.var(wg) * c.alg.c(gamma, wg);
}

Poly gen_cartan(const Chart& chart, const std::vector<Q>& h) {
    Ctx c = context(chart);
    if (h.size() != c.alg.rank()) throw std::invalid_argument("Cartan element has wrong length");
    Poly p = chart.var(c.w) * c.alg.root_value(c.w, h);
    for (auto a : sigma_half_representatives(c.rs)) {
        std::size_t wa = complement(c, a);
        Q k = (c.alg.root_value(wa, h) - c.alg.root_value(a, h)) * c.alg.c(a, wa) * Q(-1, 2);
        p += chart.var(a) * chart.var(wa) * k;
    }
    return p;
}

Poly gen_sigma0(const Chart& chart, std::size_t nu) { return sigma0_combination(chart, nu, Q(1, 2)); }

Poly gen_sigma0_printed(const Chart& chart, std::size_t nu) { return sigma0_combination(chart, nu, Q(1)); }

std::vector<Q> solve_H_of_gamma(const SplitLieAlgebra& alg, std::size_t gamma) {
    const auto& rs = alg.root_system();
    auto d = omega_decompose(rs);
    if (!contains(d.sigma_half, gamma)) throw std::invalid_argument("root " + rs.label(gamma) + " is not in Sigma_1/2");
    std::size_t w = rs.highest_root(), l = alg.rank();
    auto row = [&](std::size_t sid, const Q& s, std::vector<Q>& r) {
        for (std::size_t k = 0; k < l; ++k) r[k] += s * alg.root_value_on_basis(sid, k);
    };
    QMatrix m;
    std::vector<Q> b;
    std::vector<Q> r(l, Q(0));
    row(w, 1, r);
    m.push_back(r);
    b.push_back(-pair_H(alg, w, gamma));
    for (auto a : sigma_half_representatives(rs)) {
        std::vector<Q> ra(l, Q(0));
        row(a, 3, ra);
        row(w, -1, ra);
        m.push_back(ra);
        b.push_back(-pair_H(alg, a, gamma));
    }
    auto x = solve(m, b);
    if (!x) throw std::domain_error("system for H(" + rs.label(gamma) + ") is inconsistent");
    return *x;
}

bool sistema1_holds(const SplitLieAlgebra& alg, std::size_t gamma, const std::vector<Q>& h) {
    const auto& rs = alg.root_system();
    std::size_t w = rs.highest_root();
    if (alg.root_value(w, h) != -pair_H(alg, w, gamma)) return false;
    for (auto a : omega_decompose(rs).sigma_half)
        if (3 * alg.root_value(a, h) - alg.root_value(w, h) != -pair_H(alg, a, gamma)) return false;
    return true;
}

std::optional<std::vector<Q>> H_of_gamma_by_extension(const SplitLieAlgebra& alg, std::size_t gamma) {
    const auto& rs = alg.root_system();
    auto d = omega_decompose(rs);
    for (auto s : d.sigma_half) {
        if (!rs.is_simple(s) || !rs.leq(s, gamma)) continue;
        auto chain = chain_between(rs, s, gamma);
        if (!chain) continue;
        bool in0 = std::all_of(chain->begin(), chain->end(), [&](std::size_t dl) { return contains(d.sigma0, dl); });
        if (!in0) continue;
        std::vector<Q> h = solve_H_of_gamma(alg, s);
        for (auto dl : *chain) {
            auto hd = alg.H_of(dl);
            for (std::size_t k = 0; k < h.size(); ++k) h[k] -= hd[k] / 3;
        }
        return h;
    }
    return std::nullopt;
}

Poly gen_neg_sigma_half(const Chart& chart, std::size_t gamma) {
    Ctx c = context(chart);
    if (!contains(c.d.sigma_half, gamma)) throw std::invalid_argument("root " + c.rs.label(gamma) + " is not in Sigma_1/2");
    std::size_t wg = complement(c, gamma);
    Poly p = gen_sigma_half(chart, wg) * gen_cartan(chart, solve_H_of_gamma(c.alg, gamma)) * (-1 / c.alg.c(gamma, wg));
    std::size_t ng = c.rs.negate(gamma);
    for (auto a : c.d.sigma_half) {
        auto s = c.rs.signed_sum(a, ng);
        if (!s) continue;
        std::size_t pos = c.rs.is_positive(*s) ? *s : c.rs.negate(*s);
        if (!contains(c.d.sigma0, pos)) continue;
        std::size_t wa = complement(c, a);
        Q k = c.alg.c(a, ng) / c.alg.c(a, wa) / 3;
        p += gen_sigma_half(chart, wa) * gen_sigma0(chart, *s) * k;
    }
    return p;
}

Poly gen_neg_omega(const Chart& chart) {
    Ctx c = context(chart);
    auto hw = c.alg.H_of(c.w);
    Q whw = c.alg.root_value(c.w, hw);
    Poly p = gen_cartan(chart, hw).pow(2) * (-1 / (2 * whw));
    for (auto a : c.d.sigma_half) {
        std::size_t wa = complement(c, a);
        p -= gen_sigma_half(chart, wa) * gen_neg_sigma_half(chart, wa) * Q(1, 4);
    }
    return p;
}

Poly generator(const Chart& chart, std::size_t b) {
    Ctx c = context(chart);
    if (c.alg.is_cartan(b)) {
        std::vector<Q> h(c.alg.rank(), Q(0));
        h[b] = 1;
        return gen_cartan(chart, h);
    }
    std::size_t sid = c.alg.root_of(b);
    std::size_t pos = c.rs.is_positive(sid) ? sid : c.rs.negate(sid);
    bool neg = !c.rs.is_positive(sid);
    if (pos == c.w) return neg ? gen_neg_omega(chart) : Poly::constant(c.N, Q(1));
    if (contains(c.d.sigma0, pos)) return gen_sigma0(chart, sid);
    if (contains(c.d.sigma_half, pos)) return neg ? gen_neg_sigma_half(chart, pos) : gen_sigma_half(chart, pos);
    throw std::logic_error("root outside the omega decomposition");
}

OmegaComponentBasis build_basis(const Chart& chart) {
    OmegaComponentBasis out;
    out.algebra = chart.algebra().name();
    out.chart = chart.name();
    out.representatives = sigma_half_representatives(chart.root_system());
    for (std::size_t b = 0; b < chart.algebra().dim(); ++b) out.generators.emplace(b, generator(chart, b));
    return out;
}

long expected_degree(const SplitLieAlgebra& alg, std::size_t b) {
    const auto& rs = alg.root_system();
    long top = rs.max_height();
    if (alg.is_cartan(b)) return top;
    std::size_t sid = alg.root_of(b);
    long h = rs.is_positive(sid) ? rs.height(sid) : -rs.height(rs.negate(sid));
    return top - h;
}

bool in_generated_subring(const Chart& chart, const Poly& p) {
    auto d = omega_decompose(chart.root_system());
    for (auto b : d.sigma0)
        if (p.depends_on(b)) return false;
    return true;
}

std::vector<OracleCheck> check_against_oracle(const Chart& chart) {
    const auto& alg = chart.algebra();
    std::vector<OracleCheck> out;
    for (std::size_t b = 0; b < alg.dim(); ++b) {
        OracleCheck r;
        r.basis_index = b;
        r.label = alg.basis_label(b);
        r.closed = generator(chart, b);
        r.oracle = omega_component_oracle(chart, alg.basis_vector(b));
        r.equal = r.closed == r.oracle;
        auto deg = r.closed.weighted_degree(chart.weights());
        r.graded = deg && *deg == expected_degree(alg, b);
        out.push_back(std::move(r));
    }
    return out;
}

std::optional<Q> proportionality(const Poly& a, const Poly& b) {
    if (b.is_zero()) return a.is_zero() ? std::optional<Q>(Q(0)) : std::nullopt;
    const auto& [m, v] = *b.terms().begin();
    Q s = a.coeff(m) / v;
    if (a == b * s) return s;
    return std::nullopt;
}

}  // namespace mclab
