#include "mclab/mcfields.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace mclab {

std::vector<Poly> slice_substitution(const HessenbergSet& hs) {
    std::size_t N = hs.rs->num_positive();
    std::vector<Poly> subs;
    for (std::size_t g = 0; g < N; ++g) subs.push_back(hs.contains(g) ? Poly::var(N, g) : Poly(N));
    return subs;
}

PolyVectorField project_to_slice(const PolyVectorField& field, const HessenbergSet& hs) {
    auto subs = slice_substitution(hs);
    std::size_t N = subs.size();
    PolyVectorField r;
    r.frame = field.frame;
    r.slice = true;
    for (std::size_t g = 0; g < N; ++g)
        r.comp.push_back(hs.contains(g) ? field.comp.at(g).compose(subs) : Poly(N));
    return r;
}

std::vector<PolyVectorField> slice_frame(const Chart& chart, const HessenbergSet& hs) {
    auto full = left_invariant_frame(chart);
    std::vector<PolyVectorField> out;
    for (std::size_t g = 0; g < full.size(); ++g) {
        if (hs.contains(g)) {
            out.push_back(project_to_slice(full[g], hs));
        } else {
            PolyVectorField z;
            z.slice = true;
            z.comp.assign(full.size(), Poly(full.size()));
            out.push_back(std::move(z));
        }
    }
    return out;
}

PolyVectorField nu(const Chart& chart, const HessenbergSet& hs, const QElem& e) {
    return project_to_slice(tau(chart, e), hs);
}

std::optional<long> homogeneous_degree(const Poly& p, const std::vector<int>& weights) {
    if (p.is_zero()) throw std::invalid_argument("homogeneous_degree of the zero polynomial");
    return p.weighted_degree(weights);
}

std::optional<long> homogeneous_degree(const PolyVectorField& v, const std::vector<int>& weights) {
    std::optional<long> d;
    bool any = false;
    for (std::size_t g = 0; g < v.comp.size(); ++g) {
        if (v.comp[g].is_zero()) continue;
        any = true;
        auto dg = v.comp[g].weighted_degree(weights);
        if (!dg) return std::nullopt;
        long s = *dg - weights.at(g);
        if (d && *d != s) return std::nullopt;
        d = s;
    }
    if (!any) throw std::invalid_argument("homogeneous_degree of the zero field");
    return d;
}

std::map<long, PolyVectorField> homogeneous_parts(const PolyVectorField& v, const std::vector<int>& weights) {
    std::map<long, PolyVectorField> out;
    std::size_t N = v.comp.size();
    for (std::size_t g = 0; g < N; ++g)
        for (auto& [d, part] : v.comp[g].homogeneous_parts(weights)) {
            long s = d - weights.at(g);
            auto it = out.find(s);
            if (it == out.end()) {
                PolyVectorField f;
                f.frame = v.frame;
                f.slice = v.slice;
                f.comp.assign(N, Poly(part.nvars()));
                it = out.emplace(s, std::move(f)).first;
            }
            it->second.comp[g] = part;
        }
    return out;
}

Q frame_constant(const Chart& chart, std::size_t a, std::size_t b) {
    const auto& rs = chart.root_system();
    auto s = rs.sum(a, b);
    if (!s) return 0;
    const auto& sc = chart.scales();
    return chart.algebra().c(a, b) * sc[a] * sc[b] / sc[*s];
}

McSystem assemble_mc_system(const HessenbergSet& hs, const Chart& chart, long grade_min, long grade_max) {
    if (hs.R.empty()) throw std::invalid_argument("multicontact system needs a nonempty Hessenberg set");
    const RootSystem& rs = *hs.rs;
    std::size_t N = rs.num_positive();
    auto frame = slice_frame(chart, hs);
    const auto& w = chart.weights();
    std::vector<std::size_t> simples;
    for (auto g : hs.R)
        if (rs.is_simple(g)) simples.push_back(g);

    McSystem sys;
    sys.grade_min = grade_min;
    sys.grade_max = grade_max;
    for (long s = grade_min; s <= grade_max; ++s)
        for (auto b : hs.R) {
            long d = s + w[b];
            if (d < 0) continue;
            for (auto& m : monomials_of_weight(N, hs.R, w, d)) {
                sys.index.emplace(std::make_pair(b, m), sys.unknowns.size());
                sys.grade_unknowns[s].push_back(sys.unknowns.size());
                sys.unknowns.push_back({b, m});
            }
        }
    std::map<McRowKey, SparseVec> rows;
    for (std::size_t j = 0; j < sys.unknowns.size(); ++j) {
        const auto& [b, m] = sys.unknowns[j];
        Poly f = Poly::monomial(m, 1);
        for (auto d : simples) {
            if (b != d) {
                Poly xf = apply(frame[d], f);
                for (auto& [mm, c] : xf.terms()) rows[{d, b, mm}][j] += c;
            }
            auto g = rs.sum(d, b);
            if (g && hs.contains(*g)) {
                Q c = frame_constant(chart, d, b);
                if (c != 0) rows[{d, *g, m}][j] += c;
            }
        }
    }
    for (auto& [k, r] : rows) {
        for (auto it = r.begin(); it != r.end();) it = it->second == 0 ? r.erase(it) : std::next(it);
        if (r.empty()) continue;
        sys.row_keys.push_back(k);
        sys.rows.push_back(std::move(r));
    }
    return sys;
}

McSystem assemble_mc_system(const HessenbergSet& hs, const Chart& chart, int degree_bound) {
    if (degree_bound < 1) throw std::invalid_argument("degree bound must be at least 1");
    int top = 0;
    for (auto g : hs.R) top = std::max(top, hs.rs->height(g));
    return assemble_mc_system(hs, chart, -top, degree_bound);
}

int default_degree_bound(const RootSystem& rs) { return 2 * rs.max_height(); }

namespace {

std::size_t nullity(const McSystem& sys) {
    RowEchelon e(sys.unknowns.size());
    for (auto& r : sys.rows) e.add_row(r);
    return sys.unknowns.size() - e.rank();
}

}  // namespace

PolyVectorField field_bracket(const std::vector<PolyVectorField>& frame, const PolyVectorField& a,
                              const PolyVectorField& b) {
    auto A = frame_to_coordinates(frame, a);
    auto B = frame_to_coordinates(frame, b);
    auto W = coordinate_bracket(A, B);
    auto r = coordinates_to_frame(frame, W);
    r.slice = a.slice;
    return r;
}

std::map<std::pair<std::size_t, Mono>, Q> field_features(const PolyVectorField& v) {
    std::map<std::pair<std::size_t, Mono>, Q> f;
    for (std::size_t g = 0; g < v.comp.size(); ++g)
        for (auto& [m, c] : v.comp[g].terms()) f[{g, m}] = c;
    return f;
}

std::size_t field_rank(const std::vector<PolyVectorField>& fields) {
    std::map<std::pair<std::size_t, Mono>, std::size_t> idx;
    RowEchelon e;
    for (auto& v : fields) {
        SparseVec row;
        for (auto& [k, c] : field_features(v)) {
            auto it = idx.emplace(k, idx.size()).first;
            row[it->second] = c;
        }
        e.add_row(row);
    }
    return e.rank();
}

std::optional<std::vector<Q>> solution_coordinates(const McSolution& sol, const PolyVectorField& v) {
    std::vector<Q> coords;
    for (auto& [g, m] : sol.free_features) coords.push_back(v.comp.at(g).coeff(m));
    std::size_t N = v.comp.size();
    PolyVectorField sum;
    sum.comp.assign(N, Poly(N));
    for (std::size_t i = 0; i < coords.size(); ++i) {
        if (coords[i] == 0) continue;
        for (std::size_t g = 0; g < N; ++g) sum.comp[g] += sol.basis[i].comp[g] * coords[i];
    }
    for (std::size_t g = 0; g < N; ++g)
        if (sum.comp[g] != v.comp[g]) return std::nullopt;
    return coords;
}

McSolution solve_mc(const HessenbergSet& hs, const Chart& chart, int degree_bound) {
    const RootSystem& rs = *hs.rs;
    std::size_t N = rs.num_positive();
    if (degree_bound < 0) degree_bound = default_degree_bound(rs);
    McSystem sys = assemble_mc_system(hs, chart, degree_bound);
    RowEchelon e(sys.unknowns.size());
    for (auto& r : sys.rows) e.add_row(r);
    auto ns = e.nullspace();

    McSolution sol;
    sol.degree_bound = degree_bound;
    const auto& w = chart.weights();
    auto free_cols = e.free_columns();
    for (std::size_t k = 0; k < ns.size(); ++k) {
        PolyVectorField f;
        f.frame = PolyVectorField::Frame::left_invariant;
        f.slice = true;
        f.comp.assign(N, Poly(N));
        for (auto& [col, c] : ns[k]) {
            const auto& u = sys.unknowns[col];
            f.comp[u.gamma].add_term(u.mono, c);
        }
        sol.basis.push_back(std::move(f));
        const auto& u = sys.unknowns[free_cols[k]];
        sol.free_features.emplace_back(u.gamma, u.mono);
        sol.grades.push_back(weighted_degree(u.mono, w) - w[u.gamma]);
    }
    sol.dimension = sol.basis.size();

    McSystem next = assemble_mc_system(hs, chart, degree_bound + 1, degree_bound + 1);
    sol.next_grade_nullity = nullity(next);
    sol.stabilized = sol.next_grade_nullity == 0;
    if (!sol.stabilized)
        sol.warnings.push_back("solution dimension not stabilized: grade " + std::to_string(degree_bound + 1) +
                               " adds " + std::to_string(sol.next_grade_nullity) + " fields");

    auto frame = slice_frame(chart, hs);
    std::size_t d = sol.dimension;
    sol.bracket_table.assign(d, std::vector<std::vector<Q>>(d, std::vector<Q>(d, Q(0))));
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i + 1; j < d; ++j) {
            auto br = field_bracket(frame, sol.basis[i], sol.basis[j]);
            auto c = solution_coordinates(sol, br);
            if (!c) {
                sol.closed = false;
                sol.warnings.push_back("bracket of basis fields " + std::to_string(i) + " and " + std::to_string(j) +
                                       " leaves the solution span");
                continue;
            }
            sol.bracket_table[i][j] = *c;
            for (auto& x : *c) x = -x;
            sol.bracket_table[j][i] = *c;
        }
    return sol;
}

bool residual_check(const HessenbergSet& hs, const Chart& chart, const PolyVectorField& f) {
    const RootSystem& rs = *hs.rs;
    auto frame = slice_frame(chart, hs);
    auto V = frame_to_coordinates(frame, f);
    for (auto d : hs.R) {
        if (!rs.is_simple(d)) continue;
        auto W = coordinate_bracket(V, frame[d]);
        Poly lambda = W.comp[d];  // Xbar_d has component 1 along d
        for (std::size_t g = 0; g < W.comp.size(); ++g)
            if (W.comp[g] != lambda * frame[d].comp[g]) return false;
    }
    return true;
}

AlgebraInvariants algebra_invariants(const McSolution& sol) {
    AlgebraInvariants inv;
    std::size_t d = sol.dimension;
    inv.dimension = d;
    const auto& T = sol.bracket_table;
    auto bracket = [&](const std::vector<Q>& x, const std::vector<Q>& y) {
        std::vector<Q> r(d, Q(0));
        for (std::size_t i = 0; i < d; ++i) {
            if (x[i] == 0) continue;
            for (std::size_t j = 0; j < d; ++j) {
                if (y[j] == 0) continue;
                for (std::size_t k = 0; k < d; ++k) r[k] += x[i] * y[j] * T[i][j][k];
            }
        }
        return r;
    };
    std::vector<std::vector<Q>> span;
    for (std::size_t i = 0; i < d; ++i) {
        std::vector<Q> e(d, Q(0));
        e[i] = 1;
        span.push_back(e);
    }
    inv.derived_series.push_back(d);
    while (!span.empty()) {
        std::vector<std::vector<Q>> next;
        RowEchelon ech(d);
        for (std::size_t i = 0; i < span.size(); ++i)
            for (std::size_t j = i + 1; j < span.size(); ++j) {
                auto b = bracket(span[i], span[j]);
                SparseVec sv;
                for (std::size_t k = 0; k < d; ++k)
                    if (b[k] != 0) sv[k] = b[k];
                if (ech.add_row(sv)) next.push_back(b);
            }
        if (next.size() == span.size()) break;
        inv.derived_series.push_back(next.size());
        span = std::move(next);
    }
    QMatrix K(d, std::vector<Q>(d, Q(0)));
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = a; b < d; ++b) {
            Q t = 0;
            for (std::size_t j = 0; j < d; ++j)
                for (std::size_t k = 0; k < d; ++k)
                    if (T[a][j][k] != 0 && T[b][k][j] != 0) t += T[a][j][k] * T[b][k][j];
            K[a][b] = K[b][a] = t;
        }
    auto in = inertia(K);
    inv.killing_positive = in.positive;
    inv.killing_negative = in.negative;
    inv.killing_rank = in.positive + in.negative;
    return inv;
}

std::vector<std::size_t> normalizer_basis(const SplitLieAlgebra& alg, const HessenbergSet& hs) {
    std::vector<std::size_t> b;
    for (std::size_t k = 0; k < alg.rank(); ++k) b.push_back(k);
    for (std::size_t g = 0; g < alg.num_positive(); ++g) b.push_back(alg.root_index(g));
    for (auto s : analyze(hs).normalizer_support) b.push_back(alg.root_index(s));
    return b;
}

std::vector<std::size_t> normalizer_support_bruteforce(const SplitLieAlgebra& alg, const HessenbergSet& hs) {
    const RootSystem& rs = alg.root_system();
    std::set<std::size_t> nC;
    for (auto c : hs.C) nC.insert(alg.root_index(c));
    // Kernel of X -> ([X, E_c] mod n_C)_{c in C} over all of g.
    RowEchelon e(alg.dim());
    for (auto c : hs.C)
        for (std::size_t k = 0; k < alg.dim(); ++k) {
            if (nC.count(k)) continue;
            SparseVec row;
            for (std::size_t a = 0; a < alg.dim(); ++a) {
                const auto& br = alg.bracket_basis(a, alg.root_index(c));
                auto it = br.find(k);
                if (it != br.end()) row[a] = it->second;
            }
            e.add_row(row);
        }
    auto kernel = e.nullspace();
    RowEchelon span(alg.dim());
    for (auto& v : kernel) span.add_row(v);
    std::vector<std::size_t> D;
    for (std::size_t a = 0; a < rs.num_positive(); ++a) {
        std::size_t neg = rs.negate(a);
        if (span.in_span(SparseVec{{alg.root_index(neg), Q(1)}})) D.push_back(neg);
    }
    if (kernel.size() != rs.num_positive() + alg.rank() + D.size())
        throw std::logic_error("normalizer is not spanned by Cartan and root vectors");
    return D;
}

NormalizerComparison compare_with_normalizer(const HessenbergSet& hs, const Chart& chart, const McSolution& sol) {
    const SplitLieAlgebra& alg = chart.algebra();
    auto rep = analyze(hs);
    NormalizerComparison cmp;
    cmp.dim_q = rep.dims.q;
    cmp.dim_q_mod_nC = rep.dims.q_mod_nC;
    cmp.dim_conjecture = rep.dims.conjecture;
    cmp.dim_solution = sol.dimension;
    cmp.hypothesis_I = rep.hypothesis_I;
    cmp.hypothesis_II = rep.hypothesis_II;
    std::vector<PolyVectorField> images;
    bool kernel_ok = true;
    cmp.inclusion = true;
    for (auto b : normalizer_basis(alg, hs)) {
        auto v = nu(chart, hs, alg.basis_vector(b));
        bool is_nC = !alg.is_cartan(b) && alg.root_system().is_positive(alg.root_of(b)) && !hs.contains(alg.root_of(b));
        bool zero = std::all_of(v.comp.begin(), v.comp.end(), [](const Poly& p) { return p.is_zero(); });
        if (is_nC && !zero) kernel_ok = false;
        if (!solution_coordinates(sol, v)) cmp.inclusion = false;
        images.push_back(std::move(v));
    }
    cmp.rank_nu = field_rank(images);
    cmp.kernel_is_nC = kernel_ok && cmp.rank_nu == cmp.dim_q - hs.C.size();
    cmp.equality = cmp.rank_nu == cmp.dim_solution;
    cmp.conjecture_match = cmp.dim_conjecture == cmp.dim_solution;
    return cmp;
}

ZoneReduction reduce_by_dark_zones(const HessenbergSet& hs, const Chart& chart, int degree_bound) {
    ZoneReduction red;
    auto rep = analyze(hs);
    red.zones = rep.dark_zones;
    auto full = solve_mc(hs, chart, degree_bound);
    red.full_dim = full.dimension;
    std::vector<PolyVectorField> lifted;
    red.lifts_are_solutions = true;
    for (auto& z : red.zones) {
        auto zs = validate(*hs.rs, z);
        auto sol = solve_mc(zs, chart, degree_bound);
        red.zone_dims.push_back(sol.dimension);
        red.total_zone_dim += sol.dimension;
        for (auto& f : sol.basis) {
            if (!residual_check(hs, chart, f)) red.lifts_are_solutions = false;
            if (!solution_coordinates(full, f)) red.lifts_are_solutions = false;
            lifted.push_back(f);
        }
    }
    red.additive = red.total_zone_dim == red.full_dim;
    red.lifts_span = field_rank(lifted) == red.full_dim;
    return red;
}

bool check_gerarchia(const HessenbergSet& hs, const McSolution& sol) {
    auto rep = analyze(hs);
    std::set<std::size_t> top(rep.maximal_roots.begin(), rep.maximal_roots.end());
    std::vector<PolyVectorField> restricted;
    for (auto& f : sol.basis) {
        PolyVectorField r = f;
        for (std::size_t g = 0; g < r.comp.size(); ++g)
            if (!top.count(g)) r.comp[g] = Poly(r.comp[g].nvars());
        restricted.push_back(std::move(r));
    }
    return field_rank(restricted) == sol.dimension;
}

bool check_ombra(const HessenbergSet& hs, const Chart& chart, const McSolution& sol) {
    auto rep = analyze(hs);
    auto frame = slice_frame(chart, hs);
    for (auto& f : sol.basis)
        for (auto& [mu, shadow] : rep.shadows) {
            std::set<std::size_t> s(shadow.begin(), shadow.end());
            for (auto g : shadow)
                for (auto a : hs.R) {
                    if (s.count(a)) continue;
                    if (!apply(frame[a], f.comp[g]).is_zero()) return false;
                }
        }
    return true;
}

bool check_cindip(const HessenbergSet& hs, const Chart& chart) {
    const SplitLieAlgebra& alg = chart.algebra();
    for (auto b : normalizer_basis(alg, hs)) {
        auto t = tau(chart, alg.basis_vector(b));
        for (auto g : hs.R)
            for (auto c : hs.C)
                if (t.comp[g].depends_on(c)) return false;
    }
    return true;
}

}  // namespace mclab
