#include "mclab/hessdefs.hpp"

#include "mclab/mcfields.hpp"

#include <algorithm>
#include <functional>

namespace mclab {

namespace {

PMatrix extend_matrix(PMatrix m, std::size_t nvars) {
    for (auto& row : m)
        for (auto& e : row) e = e.extend(nvars);
    return m;
}

std::pair<std::size_t, std::size_t> first_entry(const QMatrix& m) {
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m[i].size(); ++j)
            if (m[i][j] != 0) return {i, j};
    throw std::logic_error("zero basis matrix");
}

struct Fraction {
    Poly num;
    std::map<std::size_t, unsigned> den;
};

// Substitute x_beta = N_beta / D_beta (beta in the table) into q and bring to a common denominator.
Fraction substitute_fractions(const HessenbergEquations& eqs, const Poly& q,
                              const std::map<std::size_t, GraphEntry>& table) {
    std::size_t nv = eqs.nvars;
    std::vector<std::pair<Poly, std::map<std::size_t, unsigned>>> parts;
    for (const auto& [m, c] : q.terms()) {
        Mono rest = m;
        Poly num = Poly::constant(nv, c);
        std::map<std::size_t, unsigned> den;
        for (auto& [beta, e] : table) {
            if (beta >= m.size() || m[beta] == 0) continue;
            unsigned k = m[beta];
            rest[beta] = 0;
            num = num * e.numerator.pow(k);
            for (auto& [g, x] : e.denominator) den[g] += k * x;
        }
        num = num * Poly::monomial(rest, Q(1)).extend(nv);
        parts.emplace_back(std::move(num), std::move(den));
    }
    Fraction out{Poly(nv), {}};
    for (auto& [num, den] : parts)
        for (auto& [g, x] : den) out.den[g] = std::max(out.den[g], x);
    for (auto& [num, den] : parts) {
        Poly t = num;
        for (auto& [g, x] : out.den) {
            unsigned have = den.count(g) ? den.at(g) : 0;
            if (x > have) t = t * root_on_H(eqs, g).pow(x - have);
        }
        out.num += t;
    }
    return out;
}

}  // namespace

std::vector<Q> cartan_from_diagonal(const SplitLieAlgebra& alg, const std::vector<Q>& diag) {
    const auto& rs = alg.root_system();
    std::size_t n = alg.matrix_size();
    QMatrix m(n, std::vector<Q>(n, Q(0)));
    if (rs.family() == 'A') {
        if (diag.size() != n) throw std::invalid_argument("sl(" + std::to_string(n) + ") needs " + std::to_string(n) + " diagonal entries");
        Q tr = 0;
        for (std::size_t i = 0; i < n; ++i) {
            m[i][i] = diag[i];
            tr += diag[i];
        }
        if (tr != 0) throw std::invalid_argument("diagonal entries must sum to zero");
    } else if (rs.family() == 'C') {
        std::size_t l = alg.rank();
        if (diag.size() != l) throw std::invalid_argument("sp(" + std::to_string(l) + ") needs " + std::to_string(l) + " entries");
        for (std::size_t i = 0; i < l; ++i) {
            m[i][i] = diag[i];
            m[l + i][l + i] = -diag[i];
        }
    } else {
        throw std::invalid_argument("unsupported family");
    }
    QElem e = alg.decompose(m);
    return std::vector<Q>(e.begin(), e.begin() + static_cast<long>(alg.rank()));
}

Poly root_on_H(const HessenbergEquations& eqs, std::size_t alpha) {
    auto it = eqs.alpha_of_H.find(alpha);
    if (it != eqs.alpha_of_H.end()) return it->second;
    const auto& alg = eqs.chart->algebra();
    if (!eqs.H.symbolic) return Poly::constant(eqs.nvars, alg.root_value(alpha, eqs.H.h));
    std::size_t N = eqs.chart->nvars();
    Poly p(eqs.nvars);
    const auto& co = alg.root_system().signed_coeffs(alpha);
    for (std::size_t k = 0; k < co.size(); ++k)
        if (co[k] != 0) p += Poly::var(eqs.nvars, N + k, Q(co[k]));
    return p;
}

HessenbergEquations defining_equations(const Chart& chart, const HessenbergSet& hs, const CartanParam& H) {
    const auto& alg = chart.algebra();
    const auto& rs = alg.root_system();
    std::size_t N = chart.nvars(), l = alg.rank();
    HessenbergEquations eqs;
    eqs.chart = &chart;
    eqs.hs = &hs;
    eqs.H = H;
    eqs.nvars = N + (H.symbolic ? l : 0);
    eqs.names = chart.names();
    if (H.symbolic)
        for (std::size_t k = 0; k < l; ++k) eqs.names.push_back("t" + std::to_string(k + 1));
    else if (H.h.size() != l)
        throw std::invalid_argument("H needs " + std::to_string(l) + " Cartan coordinates");

    if (!H.symbolic) {
        std::vector<std::size_t> bad;
        for (std::size_t a = 0; a < N; ++a)
            if (alg.root_value(a, H.h) == 0) bad.push_back(a);
        if (!bad.empty()) {
            std::string msg = "H is not regular; vanishing roots:";
            for (auto a : bad) msg += " " + rs.label(a);
            throw NotRegularError(bad, msg);
        }
    }

    eqs.C = hs.C;
    std::sort(eqs.C.begin(), eqs.C.end(), [&](std::size_t a, std::size_t b) {
        return std::make_pair(rs.height(a), a) < std::make_pair(rs.height(b), b);
    });
    for (auto a : eqs.C) eqs.alpha_of_H[a] = root_on_H(eqs, a);

    std::vector<std::pair<Poly, PElem>> parts;  // (coefficient, Ad(n^{-1}) W)
    if (H.symbolic) {
        auto W = alg.coweights();
        for (std::size_t k = 0; k < l; ++k)
            parts.emplace_back(Poly::var(eqs.nvars, N + k), adjoint_of_point(chart, alg.cartan_element(W[k])));
    } else {
        parts.emplace_back(Poly::constant(eqs.nvars, Q(1)), adjoint_of_point(chart, alg.cartan_element(H.h)));
    }
    for (auto a : eqs.C) {
        Poly p(eqs.nvars);
        for (auto& [coef, ad] : parts) p += coef * ad[alg.root_index(a)].extend(eqs.nvars);
        eqs.p[a] = p * (1 / chart.scales()[a]);
    }
    return eqs;
}

std::map<std::size_t, Poly> matrix_entries(const HessenbergEquations& eqs) {
    const Chart& chart = *eqs.chart;
    const auto& alg = chart.algebra();
    std::size_t nv = eqs.nvars, N = chart.nvars();
    PMatrix n = extend_matrix(chart.point_matrix(), nv);
    PMatrix ninv = extend_matrix(pm_inverse_unipotent(chart.point_matrix()), nv);
    std::size_t sz = alg.matrix_size();
    PMatrix Hm(sz, std::vector<Poly>(sz, Poly(nv)));
    auto add_cartan = [&](const std::vector<Q>& h, const Poly& coef) {
        QMatrix m = alg.to_matrix(alg.cartan_element(h));
        for (std::size_t i = 0; i < sz; ++i)
            if (m[i][i] != 0) Hm[i][i] += coef * m[i][i];
    };
    if (eqs.H.symbolic) {
        auto W = alg.coweights();
        for (std::size_t k = 0; k < W.size(); ++k) add_cartan(W[k], Poly::var(nv, N + k));
    } else {
        add_cartan(eqs.H.h, Poly::constant(nv, Q(1)));
    }
    PMatrix M = pm_mul(pm_mul(ninv, Hm), n);
    std::map<std::size_t, Poly> out;
    for (auto a : eqs.C) {
        auto [i, j] = first_entry(alg.matrix(alg.root_index(a)));
        out[a] = M[i][j];
    }
    return out;
}

bool matrix_oracle_agrees(const HessenbergEquations& eqs) {
    const auto& alg = eqs.chart->algebra();
    auto ent = matrix_entries(eqs);
    for (auto a : eqs.C) {
        const QMatrix& E = alg.matrix(alg.root_index(a));
        auto [i, j] = first_entry(E);
        if (ent.at(a) != eqs.p.at(a) * (eqs.chart->scales()[a] * E[i][j])) return false;
    }
    return true;
}

Poly poly_determinant(const std::vector<std::vector<Poly>>& m, std::size_t nvars) {
    std::size_t n = m.size();
    if (n == 0) return Poly::constant(nvars, Q(1));
    if (n > 24) throw std::invalid_argument("matrix too large for Laplace expansion");
    std::map<std::uint32_t, Poly> memo;
    // Minor on rows [n - popcount(cols), n) and the given column set.
    std::function<Poly(std::uint32_t)> det = [&](std::uint32_t cols) -> Poly {
        int k = __builtin_popcount(cols);
        if (k == 0) return Poly::constant(nvars, Q(1));
        auto it = memo.find(cols);
        if (it != memo.end()) return it->second;
        std::size_t row = n - static_cast<std::size_t>(k);
        Poly acc(nvars);
        int sign = 1;
        for (std::size_t c = 0; c < n; ++c) {
            if (!(cols >> c & 1u)) continue;
            if (!m[row][c].is_zero()) {
                Poly t = m[row][c] * det(cols & ~(1u << c));
                if (sign > 0) acc += t;
                else acc -= t;
            }
            sign = -sign;
        }
        memo.emplace(cols, acc);
        return acc;
    };
    return det(n == 32 ? ~0u : ((1u << n) - 1));
}

SmoothnessCertificate smoothness_certificate(const HessenbergEquations& eqs) {
    SmoothnessCertificate sc;
    std::size_t N = eqs.chart->nvars(), c = eqs.C.size();
    for (auto a : eqs.C) {
        std::vector<Poly> row;
        for (std::size_t b = 0; b < N; ++b) row.push_back(eqs.p.at(a).derivative(b));
        sc.jacobian.push_back(std::move(row));
    }
    for (std::size_t i = 0; i < c; ++i) {
        std::vector<Poly> row;
        for (std::size_t j = 0; j < c; ++j) row.push_back(sc.jacobian[i][eqs.C[j]]);
        sc.sub_jacobian.push_back(std::move(row));
    }
    sc.lower_triangular = true;
    sc.diagonal_is_alpha_H = true;
    for (std::size_t i = 0; i < c; ++i) {
        for (std::size_t j = i + 1; j < c; ++j)
            if (!sc.sub_jacobian[i][j].is_zero()) sc.lower_triangular = false;
        if (sc.sub_jacobian[i][i] != eqs.alpha_of_H.at(eqs.C[i])) sc.diagonal_is_alpha_H = false;
    }
    sc.determinant = poly_determinant(sc.sub_jacobian, eqs.nvars);
    sc.product_alpha_H = Poly::constant(eqs.nvars, Q(1));
    for (auto a : eqs.C) sc.product_alpha_H = sc.product_alpha_H * eqs.alpha_of_H.at(a);
    sc.identity_holds = sc.determinant == sc.product_alpha_H;
    // A nonzero C x C minor gives full row rank.
    sc.rank_at_origin = sc.determinant.is_zero() ? 0 : c;
    if (!sc.determinant.is_zero() && !eqs.H.symbolic) {
        QMatrix j0;
        std::vector<Q> origin(eqs.nvars, Q(0));
        for (auto& row : sc.jacobian) {
            std::vector<Q> r;
            for (auto& e : row) r.push_back(e.evaluate(origin));
            j0.push_back(std::move(r));
        }
        sc.rank_at_origin = rank(j0);
    }
    sc.dim_hess = N - sc.rank_at_origin;
    return sc;
}

GraphMap graph_map(const HessenbergEquations& eqs) {
    GraphMap g;
    std::size_t nv = eqs.nvars;
    for (auto a : eqs.C) {
        Poly aH = eqs.alpha_of_H.at(a);
        Poly q = eqs.p.at(a) - aH * Poly::var(nv, a);
        if (q.depends_on(a)) throw std::logic_error("defining equation is not triangular in " + eqs.names[a]);
        for (auto b : eqs.C)
            if (q.depends_on(b) && !g.entries.count(b))
                throw std::logic_error("defining equation for " + eqs.names[a] + " involves a later coordinate");
        Fraction f = substitute_fractions(eqs, q, g.entries);
        GraphEntry e{-f.num, f.den};
        e.denominator[a] += 1;
        g.entries.emplace(a, std::move(e));
    }
    if (!eqs.H.symbolic)
        for (auto& [a, e] : g.entries) {
            Q d = denominator_poly(eqs, e).constant_term();
            g.values.emplace(a, e.numerator * (1 / d));
        }
    return g;
}

Poly denominator_poly(const HessenbergEquations& eqs, const GraphEntry& e) {
    Poly d = Poly::constant(eqs.nvars, Q(1));
    for (auto& [g, x] : e.denominator) d = d * root_on_H(eqs, g).pow(x);
    return d;
}

std::vector<Poly> graph_substitution(const HessenbergEquations& eqs, const GraphMap& g) {
    if (eqs.H.symbolic) throw std::invalid_argument("graph substitution needs a numeric H");
    std::vector<Poly> subs;
    for (std::size_t b = 0; b < eqs.nvars; ++b)
        subs.push_back(g.values.count(b) ? g.values.at(b) : Poly::var(eqs.nvars, b));
    return subs;
}

bool graph_solves_equations(const HessenbergEquations& eqs, const GraphMap& g) {
    for (auto a : eqs.C)
        if (!substitute_fractions(eqs, eqs.p.at(a), g.entries).num.is_zero()) return false;
    return true;
}

std::vector<PolyVectorField> pushforward_frame(const HessenbergEquations& eqs, const GraphMap& g) {
    if (eqs.H.symbolic) throw std::invalid_argument("pushforward needs a numeric H");
    auto frame = slice_frame(*eqs.chart, *eqs.hs);
    std::vector<PolyVectorField> out;
    for (auto& v : frame) {
        PolyVectorField w = v;
        w.frame = PolyVectorField::Frame::coordinate;
        for (auto a : eqs.C) w.comp[a] = apply(v, g.values.at(a));
        out.push_back(std::move(w));
    }
    return out;
}

}  // namespace mclab
