#include "mclab/chart.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace mclab {

std::string chart_kind_name(ChartKind k) {
    switch (k) {
        case ChartKind::first_kind: return "first_kind";
        case ChartKind::second_kind: return "second_kind";
        case ChartKind::three_factor: return "three_factor";
        case ChartKind::matrix_inverse: return "matrix_inverse";
        case ChartKind::matrix_direct: return "matrix_direct";
        case ChartKind::sp2_paper: return "sp2_paper";
    }
    return "?";
}

ChartKind parse_chart_kind(const std::string& name) {
    for (auto k : {ChartKind::first_kind, ChartKind::second_kind, ChartKind::three_factor, ChartKind::matrix_inverse,
                   ChartKind::matrix_direct, ChartKind::sp2_paper})
        if (chart_kind_name(k) == name) return k;
    throw std::invalid_argument("unknown chart '" + name + "'");
}

ChartKind default_chart_kind(const SplitLieAlgebra& alg) {
    const auto& rs = alg.root_system();
    if (rs.family() == 'A') return ChartKind::matrix_inverse;
    if (rs.family() == 'C' && rs.rank() == 2) return ChartKind::sp2_paper;
    return ChartKind::second_kind;
}

namespace {

std::size_t t_degree_limit(const SplitLieAlgebra& alg) {
    return static_cast<std::size_t>(alg.root_system().max_height());
}

Poly integrate_last(const Poly& p, std::size_t t, unsigned max_deg) {
    Poly r(p.nvars());
    for (auto& [m, c] : p.terms()) {
        if (m[t] + 1u > max_deg) continue;
        Mono e = m;
        e[t] += 1;
        r.add_term(e, c / static_cast<unsigned long>(e[t]));
    }
    return r;
}

PElem extend_all(const PElem& x, std::size_t n) {
    PElem r;
    r.reserve(x.size());
    for (auto& p : x) r.push_back(p.extend(n));
    return r;
}

PMatrix pm_compose(const PMatrix& m, const std::vector<Poly>& subs) {
    PMatrix r = m;
    for (auto& row : r)
        for (auto& p : row) p = p.compose(subs);
    return r;
}

}  // namespace

std::vector<Q> bch_coefficients(std::size_t count) {
    // (1 - e^{-z}) / z = sum_k (-1)^k z^k / (k+1)!, then invert the series.
    std::vector<Q> f(count), g(count, Q(0));
    Q fact = 1;
    for (std::size_t k = 0; k < count; ++k) {
        fact *= static_cast<unsigned long>(k + 1);
        f[k] = Q(k % 2 ? -1 : 1) / fact;
    }
    for (std::size_t k = 0; k < count; ++k) {
        Q s = k == 0 ? Q(1) : Q(0);
        for (std::size_t j = 1; j <= k; ++j) s -= f[j] * g[k - j];
        g[k] = s / f[0];
    }
    return g;
}

PElem bch(const SplitLieAlgebra& alg, const PElem& a, const PElem& b, std::size_t nvars) {
    std::size_t c = t_degree_limit(alg);
    std::size_t t = nvars;
    PElem A = extend_all(a, nvars + 1), B = extend_all(b, nvars + 1);
    auto coef = bch_coefficients(c + 1);
    // Z(t) = log(e^A e^{tB}) solves Z' = sum b_k (ad Z)^k B; Picard iteration is exact after c steps.
    PElem Zt = A;
    for (std::size_t iter = 0; iter < c; ++iter) {
        PElem acc = B;
        PElem term = B;
        for (std::size_t k = 1; k < c; ++k) {
            term = alg.bracket(Zt, term);
            if (pe_is_zero(term)) break;
            if (coef[k] != 0) acc = pe_add(acc, term, coef[k]);
        }
        for (std::size_t i = 0; i < Zt.size(); ++i)
            Zt[i] = A[i] + integrate_last(acc[i], t, static_cast<unsigned>(c));
    }
    std::vector<Poly> subs;
    for (std::size_t i = 0; i < nvars; ++i) subs.push_back(Poly::var(nvars, i));
    subs.push_back(Poly::constant(nvars, 1));
    PElem out;
    for (auto& p : Zt) out.push_back(p.compose(subs).extend(nvars));
    return out;
}

PElem exp_neg_ad(const SplitLieAlgebra& alg, const PElem& l, const PElem& e) {
    PElem result = e, term = e;
    std::size_t limit = 2 * t_degree_limit(alg) + 2;
    for (std::size_t k = 1; k <= limit; ++k) {
        term = alg.bracket(l, term);
        for (auto& p : term) p *= Q(-1, static_cast<unsigned long>(k));
        if (pe_is_zero(term)) return result;
        result = pe_add(result, term);
    }
    throw std::logic_error("ad series did not terminate");
}

Chart::Chart(const SplitLieAlgebra& alg, ChartKind kind) : alg_(&alg), kind_(kind) {
    const RootSystem& rs = alg.root_system();
    std::size_t N = rs.num_positive();
    names_.resize(N);
    scales_.assign(N, Q(1));
    for (std::size_t g = 0; g < N; ++g) {
        weights_.push_back(rs.height(g));
        names_[g] = "x" + rs.label(g);
    }
    switch (kind) {
        case ChartKind::first_kind: {
            std::vector<std::size_t> all(N);
            for (std::size_t g = 0; g < N; ++g) all[g] = g;
            build_product({all});
            break;
        }
        case ChartKind::second_kind: {
            std::vector<std::vector<std::size_t>> f;
            for (std::size_t g = 0; g < N; ++g) f.push_back({g});
            build_product(f);
            break;
        }
        case ChartKind::three_factor: {
            auto d = omega_decompose(rs);
            for (auto g : d.sigma1) names_[g] = "z";
            for (auto g : d.sigma_half) names_[g] = "y" + rs.label(g);
            for (auto g : d.sigma0) names_[g] = "x" + rs.label(g);
            std::vector<std::vector<std::size_t>> f{d.sigma1, d.sigma_half};
            if (!d.sigma0.empty()) f.push_back(d.sigma0);
            build_product(f);
            break;
        }
        case ChartKind::sp2_paper: {
            if (rs.family() != 'C' || rs.rank() != 2) throw std::invalid_argument("sp2_paper chart needs sp(2)");
            // ids: 0 = a, 1 = b, 2 = a+b, 3 = 2a+b
            names_ = {"u", "x", "y", "z"};
            Q cab = alg.c(0, 1), ca_ab = alg.c(0, 2);
            scales_ = {Q(1), Q(1), cab, cab * ca_ab};
            build_product({{1, 2, 3}, {0}});
            break;
        }
        case ChartKind::matrix_inverse:
        case ChartKind::matrix_direct:
            build_matrix();
            break;
    }
    build_from_log();
}

void Chart::build_product(const std::vector<std::vector<std::size_t>>& factors) {
    factors_ = factors;
    const SplitLieAlgebra& alg = *alg_;
    std::size_t N = nvars();
    PElem L;
    for (std::size_t f = 0; f < factors.size(); ++f) {
        PElem A(alg.dim(), Poly(N));
        for (auto g : factors[f]) A[alg.root_index(g)] = Poly::var(N, g, scales_[g]);
        L = f == 0 ? A : bch(alg, L, A, N);
    }
    to_log_.clear();
    for (std::size_t g = 0; g < N; ++g) to_log_.push_back(L[alg.root_index(g)]);
    for (std::size_t b = 0; b < alg.dim(); ++b) {
        bool positive = !alg.is_cartan(b) && alg.root_system().is_positive(alg.root_of(b));
        if (!positive && !L[b].is_zero()) throw std::logic_error("log of a chart point left n");
    }
}

void Chart::build_matrix() {
    const SplitLieAlgebra& alg = *alg_;
    const RootSystem& rs = alg.root_system();
    if (rs.family() != 'A') throw std::invalid_argument("matrix charts are defined for sl(n) only");
    std::size_t N = nvars();
    pos_.resize(N);
    for (std::size_t g = 0; g < N; ++g) {
        const QMatrix& m = alg.matrix(alg.root_index(g));
        for (std::size_t i = 0; i < m.size(); ++i)
            for (std::size_t j = 0; j < m.size(); ++j)
                if (m[i][j] != 0) pos_[g] = {i, j};
    }
    std::size_t n = alg.matrix_size();
    if (n == 3 || n == 4) {
        // Letters used for the low-rank cases: (1,2) x, (2,3) y, (1,3) u; sl(4) adds (3,4) t, (2,4) v, (1,4) z.
        std::map<std::pair<std::size_t, std::size_t>, std::string> letters{
            {{0, 1}, "x"}, {{1, 2}, "y"}, {{0, 2}, "u"}, {{2, 3}, "t"}, {{1, 3}, "v"}, {{0, 3}, "z"}};
        for (std::size_t g = 0; g < N; ++g) names_[g] = letters.at(pos_[g]);
    } else {
        for (std::size_t g = 0; g < N; ++g)
            names_[g] = "m" + std::to_string(pos_[g].first + 1) + std::to_string(pos_[g].second + 1);
    }
    if (kind_ == ChartKind::matrix_direct) scales_.assign(N, Q(-1));
    PMatrix M = pm_identity(n, N);
    for (std::size_t g = 0; g < N; ++g) M[pos_[g].first][pos_[g].second] = Poly::var(N, g);
    PMatrix pt = kind_ == ChartKind::matrix_inverse ? pm_inverse_unipotent(M) : M;
    PElem L = alg.decompose(pm_log_unipotent(pt), N);
    to_log_.clear();
    for (std::size_t g = 0; g < N; ++g) to_log_.push_back(L[alg.root_index(g)]);
}

void Chart::build_from_log() {
    std::size_t N = nvars();
    from_log_.assign(N, Poly(N));
    for (std::size_t g = 0; g < N; ++g) {
        Mono lin(N, 0);
        lin[g] = 1;
        if (to_log_[g].coeff(lin) != scales_[g]) throw std::logic_error("chart log map has unexpected linear part");
        auto deg = to_log_[g].weighted_degree(weights_);
        if (!deg || *deg != weights_[g]) throw std::logic_error("chart log map is not homogeneous");
        Poly rest = to_log_[g] - Poly::var(N, g, scales_[g]);
        for (std::size_t a = 0; a < N; ++a)
            if (rest.depends_on(a) && weights_[a] >= weights_[g]) throw std::logic_error("chart log map not triangular");
        Poly sub = rest.compose(from_log_);
        from_log_[g] = (Poly::var(N, g) - sub) * (1 / scales_[g]);
    }
}

PElem Chart::log_element() const {
    const SplitLieAlgebra& alg = *alg_;
    PElem L(alg.dim(), Poly(nvars()));
    for (std::size_t g = 0; g < nvars(); ++g) L[alg.root_index(g)] = to_log_[g];
    return L;
}

PMatrix Chart::point_matrix() const {
    const SplitLieAlgebra& alg = *alg_;
    std::size_t N = nvars(), n = alg.matrix_size();
    if (is_matrix_chart()) {
        PMatrix M = pm_identity(n, N);
        for (std::size_t g = 0; g < N; ++g) M[pos_[g].first][pos_[g].second] = Poly::var(N, g);
        return kind_ == ChartKind::matrix_inverse ? pm_inverse_unipotent(M) : M;
    }
    PMatrix P = pm_identity(n, N);
    for (auto& f : factors_) {
        PElem A(alg.dim(), Poly(N));
        for (auto g : f) A[alg.root_index(g)] = Poly::var(N, g, scales_[g]);
        P = pm_mul(P, pm_exp_nilpotent(alg.to_pmatrix(A, N)));
    }
    return P;
}

std::vector<Poly> Chart::to_log_matrix_path() const {
    const SplitLieAlgebra& alg = *alg_;
    std::size_t N = nvars();
    PElem L;
    if (is_matrix_chart()) {
        PMatrix M = pm_identity(alg.matrix_size(), N);
        for (std::size_t g = 0; g < N; ++g) M[pos_[g].first][pos_[g].second] = Poly::var(N, g);
        L = alg.decompose(pm_log_unipotent(M), N);
        if (kind_ == ChartKind::matrix_inverse)
            for (auto& p : L) p = -p;
    } else {
        L = alg.decompose(pm_log_unipotent(point_matrix()), N);
    }
    std::vector<Poly> out;
    for (std::size_t g = 0; g < N; ++g) out.push_back(L[alg.root_index(g)]);
    return out;
}

std::vector<Poly> Chart::coordinates_of(const PMatrix& n) const {
    const SplitLieAlgebra& alg = *alg_;
    if (is_matrix_chart()) {
        PMatrix M = kind_ == ChartKind::matrix_inverse ? pm_inverse_unipotent(n) : n;
        std::vector<Poly> out;
        for (std::size_t g = 0; g < nvars(); ++g) out.push_back(M[pos_[g].first][pos_[g].second]);
        return out;
    }
    std::size_t nv = 0;
    for (auto& row : n)
        for (auto& p : row) nv = std::max(nv, p.nvars());
    PElem L = alg.decompose(pm_log_unipotent(n), nv);
    std::vector<Poly> logs;
    for (std::size_t g = 0; g < nvars(); ++g) logs.push_back(L[alg.root_index(g)]);
    std::vector<Poly> out;
    for (auto& p : from_log_) out.push_back(p.compose(logs));
    return out;
}

namespace {

// Product of the points with coordinates sa, sb (polynomials in a common ring of nv variables).
std::vector<Poly> multiply_points(const Chart& chart, const std::vector<Poly>& sa, const std::vector<Poly>& sb,
                                  std::size_t nv, Path path) {
    const SplitLieAlgebra& alg = chart.algebra();
    if (path == Path::matrix) {
        PMatrix P = chart.point_matrix();
        PMatrix prod = pm_mul(pm_compose(P, sa), pm_compose(P, sb));
        auto out = chart.coordinates_of(prod);
        for (auto& p : out) p = p.extend(std::max(nv, p.nvars()));
        return out;
    }
    PElem la = pe_compose(chart.log_element(), sa), lb = pe_compose(chart.log_element(), sb);
    PElem L = bch(alg, extend_all(la, nv), extend_all(lb, nv), nv);
    std::vector<Poly> logs;
    for (std::size_t g = 0; g < chart.nvars(); ++g) logs.push_back(L[alg.root_index(g)]);
    std::vector<Poly> out;
    for (auto& p : chart.from_log()) out.push_back(p.compose(logs).extend(nv));
    return out;
}

}  // namespace

std::vector<Poly> group_law(const Chart& chart, Path path) {
    std::size_t N = chart.nvars();
    std::vector<Poly> sa, sb;
    for (std::size_t i = 0; i < N; ++i) {
        sa.push_back(Poly::var(2 * N, i));
        sb.push_back(Poly::var(2 * N, N + i));
    }
    return multiply_points(chart, sa, sb, 2 * N, path);
}

std::vector<Q> group_multiply(const Chart& chart, const std::vector<Q>& a, const std::vector<Q>& b, Path path) {
    std::size_t N = chart.nvars();
    if (a.size() != N || b.size() != N) throw std::invalid_argument("group_multiply: point dimension mismatch");
    std::vector<Poly> sa, sb;
    for (std::size_t i = 0; i < N; ++i) {
        sa.push_back(Poly::constant(0, a[i]));
        sb.push_back(Poly::constant(0, b[i]));
    }
    auto out = multiply_points(chart, sa, sb, 0, path);
    std::vector<Q> r;
    for (auto& p : out) r.push_back(p.constant_term());
    return r;
}

Poly apply(const PolyVectorField& v, const Poly& f) {
    Poly r(f.nvars());
    for (std::size_t i = 0; i < v.comp.size(); ++i)
        if (!v.comp[i].is_zero() && f.depends_on(i)) r += v.comp[i] * f.derivative(i);
    return r;
}

PolyVectorField coordinate_bracket(const PolyVectorField& v, const PolyVectorField& w) {
    PolyVectorField r;
    r.frame = PolyVectorField::Frame::coordinate;
    r.slice = v.slice;
    for (std::size_t i = 0; i < v.comp.size(); ++i) r.comp.push_back(apply(v, w.comp[i]) - apply(w, v.comp[i]));
    return r;
}

std::vector<PolyVectorField> left_invariant_frame(const Chart& chart) {
    const SplitLieAlgebra& alg = chart.algebra();
    std::size_t N = chart.nvars();
    PElem L = chart.log_element();
    auto coef = bch_coefficients(static_cast<std::size_t>(alg.root_system().max_height()) + 1);
    std::vector<std::vector<Poly>> D(N, std::vector<Poly>(N));
    for (std::size_t b = 0; b < N; ++b)
        for (std::size_t a = 0; a < N; ++a) D[b][a] = chart.to_log()[b].derivative(a);
    std::vector<PolyVectorField> frame;
    for (std::size_t g = 0; g < N; ++g) {
        PElem G(alg.dim(), Poly(N));
        G[alg.root_index(g)] = Poly::constant(N, chart.scales()[g]);
        // d/ds log(e^L e^{sG}) at s = 0
        PElem w = G, term = G;
        for (std::size_t k = 1; k < coef.size(); ++k) {
            term = alg.bracket(L, term);
            if (pe_is_zero(term)) break;
            if (coef[k] != 0) w = pe_add(w, term, coef[k]);
        }
        PolyVectorField X;
        X.comp.assign(N, Poly(N));
        for (std::size_t b = 0; b < N; ++b) {
            Poly rhs = w[alg.root_index(b)];
            for (std::size_t a = 0; a < b; ++a)
                if (!D[b][a].is_zero() && !X.comp[a].is_zero()) rhs -= D[b][a] * X.comp[a];
            X.comp[b] = rhs * (1 / chart.scales()[b]);
        }
        frame.push_back(std::move(X));
    }
    return frame;
}

PolyVectorField frame_to_coordinates(const std::vector<PolyVectorField>& frame, const PolyVectorField& v) {
    std::size_t N = frame.size();
    std::size_t nv = N;
    PolyVectorField r;
    r.frame = PolyVectorField::Frame::coordinate;
    r.slice = v.slice;
    r.comp.assign(N, Poly(nv));
    for (std::size_t g = 0; g < N; ++g) {
        if (v.comp[g].is_zero()) continue;
        for (std::size_t a = 0; a < N; ++a)
            if (!frame[g].comp[a].is_zero()) r.comp[a] += v.comp[g] * frame[g].comp[a];
    }
    return r;
}

PolyVectorField coordinates_to_frame(const std::vector<PolyVectorField>& frame, const PolyVectorField& v) {
    std::size_t N = frame.size();
    PolyVectorField r;
    r.frame = PolyVectorField::Frame::left_invariant;
    r.slice = v.slice;
    r.comp.assign(N, Poly(N));
    // frame[g].comp[a] is nonzero only for a = g (value 1) or ht(a) > ht(g); ids follow height.
    for (std::size_t a = 0; a < N; ++a) {
        Poly f = v.comp[a];
        for (std::size_t g = 0; g < a; ++g)
            if (!r.comp[g].is_zero() && !frame[g].comp[a].is_zero()) f -= r.comp[g] * frame[g].comp[a];
        r.comp[a] = f;
    }
    return r;
}

PElem adjoint_of_point(const Chart& chart, const QElem& e, Path path) {
    const SplitLieAlgebra& alg = chart.algebra();
    std::size_t N = chart.nvars();
    if (path == Path::abstract) return exp_neg_ad(alg, chart.log_element(), alg.constant(e, N));
    PMatrix n = chart.point_matrix();
    PMatrix ninv = pm_inverse_unipotent(n);
    PMatrix E = alg.to_pmatrix(alg.constant(e, N), N);
    return alg.decompose(pm_mul(pm_mul(ninv, E), n), N);
}

PolyVectorField tau(const Chart& chart, const QElem& e, Path path) {
    const SplitLieAlgebra& alg = chart.algebra();
    PElem ad = adjoint_of_point(chart, e, path);
    PolyVectorField v;
    v.frame = PolyVectorField::Frame::left_invariant;
    for (std::size_t g = 0; g < chart.nvars(); ++g)
        v.comp.push_back(ad[alg.root_index(g)] * (-1 / chart.scales()[g]));
    return v;
}

Poly transport(const Poly& p, const Chart& from, const Chart& to) {
    std::vector<Poly> subs;
    for (auto& q : from.from_log()) subs.push_back(q.compose(to.to_log()));
    return p.compose(subs);
}

}  // namespace mclab
