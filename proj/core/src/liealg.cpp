#include "mclab/liealg.hpp"

#include <stdexcept>

namespace mclab {

namespace {

QMatrix zero_matrix(std::size_t n) { return QMatrix(n, std::vector<Q>(n, Q(0))); }

QMatrix commutator(const QMatrix& a, const QMatrix& b) {
    QMatrix ab = matmul(a, b), ba = matmul(b, a);
    for (std::size_t i = 0; i < ab.size(); ++i)
        for (std::size_t j = 0; j < ab.size(); ++j) ab[i][j] -= ba[i][j];
    return ab;
}

QMatrix transpose(const QMatrix& a) {
    QMatrix t = zero_matrix(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j) t[i][j] = a[j][i];
    return t;
}

Q trace_product(const QMatrix& a, const QMatrix& b) {
    Q t = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t k = 0; k < a.size(); ++k)
            if (a[i][k] != 0 && b[k][i] != 0) t += a[i][k] * b[k][i];
    return t;
}

bool pm_is_zero(const PMatrix& m) {
    for (auto& row : m)
        for (auto& p : row)
            if (!p.is_zero()) return false;
    return true;
}

}  // namespace

SplitLieAlgebra SplitLieAlgebra::build_sl(int n) {
    if (n < 2) throw std::invalid_argument("sl(n) needs n >= 2");
    SplitLieAlgebra g;
    g.name_ = "sl" + std::to_string(n);
    g.rs_ = RootSystem::build('A', n - 1);
    g.n_ = static_cast<std::size_t>(n);
    g.kappa_ = 2 * n;
    std::size_t l = g.rank(), N = g.num_positive();
    g.mats_.assign(l + 2 * N, zero_matrix(g.n_));
    for (std::size_t k = 0; k < l; ++k) {
        g.mats_[k][k][k] = 1;
        g.mats_[k][k + 1][k + 1] = -1;
    }
    for (std::size_t id = 0; id < N; ++id) {
        const auto& c = g.rs_.root(id).coeffs;
        std::size_t i = 0;
        while (c[i] == 0) ++i;
        std::size_t j = i;
        while (j < l && c[j] != 0) ++j;
        // root e_i - e_j (0-based, j exclusive end of support)
        g.mats_[l + id][i][j] = -1;
        g.mats_[l + N + id][j][i] = -1;
    }
    g.finish();
    return g;
}

SplitLieAlgebra SplitLieAlgebra::build_sp(int lr) {
    if (lr < 2) throw std::invalid_argument("sp(l) needs l >= 2");
    SplitLieAlgebra g;
    g.name_ = "sp" + std::to_string(lr);
    g.rs_ = RootSystem::build('C', lr);
    auto l = static_cast<std::size_t>(lr);
    g.n_ = 2 * l;
    g.kappa_ = 2 * lr + 2;
    std::size_t N = g.num_positive();
    g.mats_.assign(l + 2 * N, zero_matrix(g.n_));
    for (std::size_t k = 0; k + 1 < l; ++k) {
        auto& m = g.mats_[k];
        m[k][k] = Q(1, 2);
        m[k + 1][k + 1] = Q(-1, 2);
        m[l + k][l + k] = Q(-1, 2);
        m[l + k + 1][l + k + 1] = Q(1, 2);
    }
    g.mats_[l - 1][l - 1][l - 1] = 1;
    g.mats_[l - 1][2 * l - 1][2 * l - 1] = -1;
    for (std::size_t id = 0; id < N; ++id) {
        // epsilon-coordinates of the root
        std::vector<int> e(l, 0);
        const auto& c = g.rs_.root(id).coeffs;
        for (std::size_t k = 0; k + 1 < l; ++k) {
            e[k] += c[k];
            e[k + 1] -= c[k];
        }
        e[l - 1] += 2 * c[l - 1];
        std::vector<std::size_t> nz;
        for (std::size_t k = 0; k < l; ++k)
            if (e[k]) nz.push_back(k);
        QMatrix m = zero_matrix(g.n_);
        if (nz.size() == 1) {
            std::size_t i = nz[0];
            m[i][l + i] = Q(Z(1) << static_cast<mp_bitcnt_t>(l - 1 - i));
        } else {
            std::size_t i = nz[0], j = nz[1];
            if (e[j] < 0) {
                m[i][j] = 1;
                m[l + j][l + i] = -1;
            } else {
                m[i][l + j] = 1;
                m[j][l + i] = 1;
            }
        }
        QMatrix mt = transpose(m);
        Q norm = trace_product(m, mt);
        for (auto& row : mt)
            for (auto& v : row) v /= norm;
        g.mats_[l + id] = m;
        g.mats_[l + N + id] = mt;
    }
    g.finish();
    return g;
}

SplitLieAlgebra SplitLieAlgebra::build(char family, int rank) {
    switch (family) {
        case 'A':
        case 'a':
            return build_sl(rank + 1);
        case 'C':
        case 'c':
            return build_sp(rank);
        default:
            throw std::invalid_argument(std::string("no matrix realization for family '") + family +
                                        "' (supported: A, C)");
    }
}

void SplitLieAlgebra::finish() {
    std::size_t d = dim();
    QMatrix gram(d, std::vector<Q>(d, Q(0)));
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = a; b < d; ++b) gram[a][b] = gram[b][a] = trace_product(mats_[a], mats_[b]);
    auto inv = inverse(gram);
    if (!inv) throw std::logic_error("degenerate trace form on the realized basis");
    gram_inv_ = std::move(*inv);
    br_.assign(d, std::vector<SparseVec>(d));
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b) {
            if (b < a) {
                br_[a][b] = br_[b][a];
                for (auto& kv : br_[a][b]) kv.second = -kv.second;
                continue;
            }
            QElem x = decompose(commutator(mats_[a], mats_[b]));
            for (std::size_t k = 0; k < d; ++k)
                if (x[k] != 0) br_[a][b][k] = x[k];
        }
    std::size_t l = rank(), N = num_positive();
    rv_.assign(l, std::vector<Q>(N, Q(0)));
    for (std::size_t k = 0; k < l; ++k)
        for (std::size_t id = 0; id < N; ++id) {
            const auto& v = br_[k][l + id];
            auto it = v.find(l + id);
            if (v.size() > 1 || (v.size() == 1 && it == v.end()))
                throw std::logic_error("root vector is not a Cartan eigenvector");
            rv_[k][id] = it == v.end() ? Q(0) : it->second;
        }
}

std::string SplitLieAlgebra::basis_label(std::size_t b) const {
    if (is_cartan(b)) return "H" + rs_.label(b);
    return "E" + rs_.label(root_of(b));
}

QMatrix SplitLieAlgebra::to_matrix(const QElem& x) const {
    QMatrix m = zero_matrix(n_);
    for (std::size_t b = 0; b < dim(); ++b) {
        if (x.at(b) == 0) continue;
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j)
                if (mats_[b][i][j] != 0) m[i][j] += x[b] * mats_[b][i][j];
    }
    return m;
}

QElem SplitLieAlgebra::decompose(const QMatrix& m) const {
    std::size_t d = dim();
    std::vector<Q> t(d);
    for (std::size_t j = 0; j < d; ++j) t[j] = trace_product(m, mats_[j]);
    QElem c(d, Q(0));
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            if (gram_inv_[i][j] != 0 && t[j] != 0) c[i] += gram_inv_[i][j] * t[j];
    if (to_matrix(c) != m) throw std::invalid_argument("matrix is not in the realized Lie algebra");
    return c;
}

QElem SplitLieAlgebra::bracket(const QElem& x, const QElem& y) const {
    QElem r(dim(), Q(0));
    for (std::size_t a = 0; a < dim(); ++a) {
        if (x[a] == 0) continue;
        for (std::size_t b = 0; b < dim(); ++b) {
            if (y[b] == 0) continue;
            Q s = x[a] * y[b];
            for (auto& [k, v] : br_[a][b]) r[k] += s * v;
        }
    }
    return r;
}

PElem SplitLieAlgebra::bracket(const PElem& x, const PElem& y) const {
    std::size_t nv = 0;
    for (auto& p : x) nv = std::max(nv, p.nvars());
    for (auto& p : y) nv = std::max(nv, p.nvars());
    PElem r(dim(), Poly(nv));
    for (std::size_t a = 0; a < dim(); ++a) {
        if (x[a].is_zero()) continue;
        for (std::size_t b = 0; b < dim(); ++b) {
            if (y[b].is_zero() || br_[a][b].empty()) continue;
            Poly s = x[a] * y[b];
            for (auto& [k, v] : br_[a][b]) r[k] += s * v;
        }
    }
    return r;
}

Q SplitLieAlgebra::c(std::size_t sa, std::size_t sb) const {
    auto s = rs_.signed_sum(sa, sb);
    if (!s) return 0;
    const auto& v = br_[root_index(sa)][root_index(sb)];
    auto it = v.find(root_index(*s));
    return it == v.end() ? Q(0) : it->second;
}

Q SplitLieAlgebra::root_value_on_basis(std::size_t sid, std::size_t k) const {
    std::size_t N = num_positive();
    return sid < N ? rv_.at(k).at(sid) : -rv_.at(k).at(sid - N);
}

Q SplitLieAlgebra::root_value(std::size_t sid, const std::vector<Q>& h) const {
    Q r = 0;
    for (std::size_t k = 0; k < rank(); ++k)
        if (h.at(k) != 0) r += h[k] * root_value_on_basis(sid, k);
    return r;
}

std::vector<Q> SplitLieAlgebra::H_of(std::size_t sid) const {
    std::size_t l = rank();
    QMatrix g(l, std::vector<Q>(l));
    std::vector<Q> v(l);
    for (std::size_t k = 0; k < l; ++k) {
        for (std::size_t m = 0; m < l; ++m) g[k][m] = trace_product(mats_[k], mats_[m]);
        v[k] = root_value_on_basis(sid, k);
    }
    auto h = solve(g, v);
    if (!h) throw std::logic_error("H_alpha system is singular");
    return *h;
}

std::vector<Q> SplitLieAlgebra::solve_H0() const {
    std::size_t l = rank();
    QMatrix m(l, std::vector<Q>(l));
    for (std::size_t i = 0; i < l; ++i)
        for (std::size_t k = 0; k < l; ++k) m[i][k] = rv_[k][i];
    auto h = solve(m, std::vector<Q>(l, Q(-1)));
    if (!h) throw std::logic_error("Cartan matrix is singular");
    return *h;
}

std::vector<std::vector<Q>> SplitLieAlgebra::coweights() const {
    std::size_t l = rank();
    QMatrix m(l, std::vector<Q>(l));
    for (std::size_t i = 0; i < l; ++i)
        for (std::size_t k = 0; k < l; ++k) m[i][k] = rv_[k][i];
    std::vector<std::vector<Q>> out;
    for (std::size_t k = 0; k < l; ++k) {
        std::vector<Q> e(l, Q(0));
        e[k] = 1;
        out.push_back(*solve(m, e));
    }
    return out;
}

QElem SplitLieAlgebra::cartan_element(const std::vector<Q>& h) const {
    QElem x(dim(), Q(0));
    for (std::size_t k = 0; k < rank(); ++k) x[k] = h.at(k);
    return x;
}

QElem SplitLieAlgebra::theta(const QElem& x) const {
    QMatrix m = transpose(to_matrix(x));
    for (auto& row : m)
        for (auto& v : row) v = -v;
    return decompose(m);
}

Q SplitLieAlgebra::trace_form(const QElem& x, const QElem& y) const {
    return trace_product(to_matrix(x), to_matrix(y));
}

Q SplitLieAlgebra::killing_via_ad(const QElem& x, const QElem& y) const {
    Q t = 0;
    for (std::size_t b = 0; b < dim(); ++b) {
        QElem r = bracket(x, bracket(y, basis_vector(b)));
        t += r[b];
    }
    return t;
}

QElem SplitLieAlgebra::basis_vector(std::size_t b) const {
    QElem x(dim(), Q(0));
    x.at(b) = 1;
    return x;
}

PElem SplitLieAlgebra::constant(const QElem& x, std::size_t nvars) const {
    PElem p;
    p.reserve(dim());
    for (auto& v : x) p.push_back(Poly::constant(nvars, v));
    return p;
}

PMatrix SplitLieAlgebra::to_pmatrix(const PElem& x, std::size_t nvars) const {
    PMatrix m(n_, std::vector<Poly>(n_, Poly(nvars)));
    for (std::size_t b = 0; b < dim(); ++b) {
        if (x.at(b).is_zero()) continue;
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j)
                if (mats_[b][i][j] != 0) m[i][j] += x[b] * mats_[b][i][j];
    }
    return m;
}

PElem SplitLieAlgebra::decompose(const PMatrix& m, std::size_t nvars) const {
    std::size_t d = dim();
    std::vector<Poly> t(d, Poly(nvars));
    for (std::size_t j = 0; j < d; ++j)
        for (std::size_t p = 0; p < n_; ++p)
            for (std::size_t q = 0; q < n_; ++q)
                if (mats_[j][q][p] != 0 && !m[p][q].is_zero()) t[j] += m[p][q] * mats_[j][q][p];
    PElem c(d, Poly(nvars));
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            if (gram_inv_[i][j] != 0 && !t[j].is_zero()) c[i] += t[j] * gram_inv_[i][j];
    PMatrix back = to_pmatrix(c, nvars);
    for (std::size_t p = 0; p < n_; ++p)
        for (std::size_t q = 0; q < n_; ++q)
            if (back[p][q] != m[p][q]) throw std::invalid_argument("polynomial matrix is not in the realized Lie algebra");
    return c;
}

PMatrix pm_identity(std::size_t n, std::size_t nvars) {
    PMatrix m(n, std::vector<Poly>(n, Poly(nvars)));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = Poly::constant(nvars, 1);
    return m;
}

PMatrix pm_mul(const PMatrix& a, const PMatrix& b) {
    std::size_t n = a.size();
    std::size_t nv = 0;
    for (auto& row : a)
        for (auto& p : row) nv = std::max(nv, p.nvars());
    for (auto& row : b)
        for (auto& p : row) nv = std::max(nv, p.nvars());
    PMatrix c(n, std::vector<Poly>(n, Poly(nv)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            if (a[i][k].is_zero()) continue;
            for (std::size_t j = 0; j < n; ++j)
                if (!b[k][j].is_zero()) c[i][j] += a[i][k] * b[k][j];
        }
    return c;
}

PMatrix pm_add(const PMatrix& a, const PMatrix& b, const Q& s) {
    PMatrix c = a;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j) c[i][j] += b[i][j] * s;
    return c;
}

PMatrix pm_exp_nilpotent(const PMatrix& a) {
    std::size_t n = a.size();
    std::size_t nv = 0;
    for (auto& row : a)
        for (auto& p : row) nv = std::max(nv, p.nvars());
    PMatrix result = pm_identity(n, nv);
    PMatrix term = pm_identity(n, nv);
    for (std::size_t k = 1; k <= n; ++k) {
        term = pm_mul(term, a);
        if (pm_is_zero(term)) return result;
        for (auto& row : term)
            for (auto& p : row) p *= Q(1, static_cast<unsigned long>(k));
        result = pm_add(result, term);
    }
    if (!pm_is_zero(pm_mul(term, a))) throw std::invalid_argument("matrix is not nilpotent");
    return result;
}

PMatrix pm_log_unipotent(const PMatrix& m) {
    std::size_t n = m.size();
    std::size_t nv = 0;
    for (auto& row : m)
        for (auto& p : row) nv = std::max(nv, p.nvars());
    PMatrix x = pm_add(m, pm_identity(n, nv), -1);
    PMatrix result(n, std::vector<Poly>(n, Poly(nv)));
    PMatrix power = x;
    for (std::size_t k = 1; k <= n; ++k) {
        if (pm_is_zero(power)) return result;
        Q coef(k % 2 ? 1 : -1, static_cast<unsigned long>(k));
        result = pm_add(result, power, coef);
        power = pm_mul(power, x);
    }
    if (!pm_is_zero(power)) throw std::invalid_argument("matrix is not unipotent");
    return result;
}

PMatrix pm_inverse_unipotent(const PMatrix& m) {
    std::size_t n = m.size();
    std::size_t nv = 0;
    for (auto& row : m)
        for (auto& p : row) nv = std::max(nv, p.nvars());
    PMatrix x = pm_add(m, pm_identity(n, nv), -1);
    PMatrix result = pm_identity(n, nv);
    PMatrix power = pm_identity(n, nv);
    for (std::size_t k = 1; k <= n; ++k) {
        power = pm_mul(power, x);
        if (pm_is_zero(power)) return result;
        result = pm_add(result, power, k % 2 ? Q(-1) : Q(1));
    }
    if (!pm_is_zero(pm_mul(power, x))) throw std::invalid_argument("matrix is not unipotent");
    return result;
}

PElem pe_add(const PElem& a, const PElem& b, const Q& s) {
    PElem r = a;
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += b.at(i) * s;
    return r;
}

PElem pe_scale(const PElem& a, const Poly& p) {
    PElem r;
    r.reserve(a.size());
    for (auto& x : a) r.push_back(x * p);
    return r;
}

bool pe_is_zero(const PElem& a) {
    for (auto& p : a)
        if (!p.is_zero()) return false;
    return true;
}

PElem pe_compose(const PElem& a, const std::vector<Poly>& subs) {
    PElem r;
    r.reserve(a.size());
    for (auto& p : a) r.push_back(p.compose(subs));
    return r;
}

}  // namespace mclab
