#include "mclab/linalg.hpp"

#include <stdexcept>

namespace mclab {

RowEchelon::IRow RowEchelon::to_int(const SparseVec& row) {
    IRow r;
    Z l = 1;
    for (auto& [c, v] : row)
        if (v != 0) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
    Z g = 0;
    for (auto& [c, v] : row) {
        if (v == 0) continue;
        Z n = v.get_num() * (l / v.get_den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
        r.emplace_back(c, std::move(n));
    }
    if (g > 1)
        for (auto& e : r) mpz_divexact(e.second.get_mpz_t(), e.second.get_mpz_t(), g.get_mpz_t());
    return r;
}

RowEchelon::IRow RowEchelon::reduce(IRow r) const {
    while (!r.empty()) {
        auto it = piv_.find(r.front().first);
        if (it == piv_.end()) break;
        const IRow& p = it->second;
        Z a = r.front().second, b = p.front().second;
        Z g;
        mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        Z fa = b / g, fb = a / g;  // fa*r - fb*p kills the lead
        IRow out;
        out.reserve(r.size() + p.size());
        std::size_t i = 0, j = 0;
        Z gg = 0;
        while (i < r.size() || j < p.size()) {
            Z v;
            std::size_t col;
            if (j >= p.size() || (i < r.size() && r[i].first < p[j].first)) {
                col = r[i].first;
                v = fa * r[i].second;
                ++i;
            } else if (i >= r.size() || p[j].first < r[i].first) {
                col = p[j].first;
                v = -fb * p[j].second;
                ++j;
            } else {
                col = r[i].first;
                v = fa * r[i].second - fb * p[j].second;
                ++i;
                ++j;
            }
            if (v != 0) {
                mpz_gcd(gg.get_mpz_t(), gg.get_mpz_t(), v.get_mpz_t());
                out.emplace_back(col, std::move(v));
            }
        }
        if (gg > 1)
            for (auto& e : out) mpz_divexact(e.second.get_mpz_t(), e.second.get_mpz_t(), gg.get_mpz_t());
        r = std::move(out);
    }
    return r;
}

bool RowEchelon::add_row(const SparseVec& row) {
    IRow r = reduce(to_int(row));
    if (r.empty()) return false;
    if (r.front().second < 0)
        for (auto& e : r) e.second = -e.second;
    if (r.back().first >= ncols_) ncols_ = r.back().first + 1;
    std::size_t c = r.front().first;
    piv_.emplace(c, std::move(r));
    return true;
}

bool RowEchelon::in_span(const SparseVec& row) const { return reduce(to_int(row)).empty(); }

std::vector<std::size_t> RowEchelon::free_columns() const {
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < ncols_; ++c)
        if (!piv_.count(c)) free_cols.push_back(c);
    return free_cols;
}

std::vector<SparseVec> RowEchelon::nullspace() const {
    std::vector<std::size_t> free_cols = free_columns();
    // Express each pivot variable through free variables, highest pivot first.
    std::map<std::size_t, SparseVec> expr;
    for (auto it = piv_.rbegin(); it != piv_.rend(); ++it) {
        const IRow& r = it->second;
        SparseVec e;
        Q lead(r.front().second);
        for (std::size_t k = 1; k < r.size(); ++k) {
            std::size_t c = r[k].first;
            Q f = Q(r[k].second) / lead;
            auto pe = expr.find(c);
            if (pe == expr.end()) {
                e[c] -= f;
            } else {
                for (auto& [fc, fv] : pe->second) e[fc] -= f * fv;
            }
        }
        for (auto i = e.begin(); i != e.end();) i = i->second == 0 ? e.erase(i) : std::next(i);
        expr.emplace(it->first, std::move(e));
    }
    std::vector<SparseVec> basis;
    basis.reserve(free_cols.size());
    std::map<std::size_t, std::size_t> slot;
    for (std::size_t k = 0; k < free_cols.size(); ++k) {
        slot[free_cols[k]] = k;
        basis.push_back(SparseVec{{free_cols[k], Q(1)}});
    }
    for (auto& [p, e] : expr)
        for (auto& [fc, fv] : e) basis[slot.at(fc)][p] = fv;
    return basis;
}

std::size_t rank(const std::vector<SparseVec>& rows) {
    RowEchelon e;
    for (auto& r : rows) e.add_row(r);
    return e.rank();
}

QMatrix identity(std::size_t n) {
    QMatrix m(n, std::vector<Q>(n, Q(0)));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

QMatrix matmul(const QMatrix& a, const QMatrix& b) {
    if (a.empty()) return {};
    std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
    if (a[0].size() != k) throw std::invalid_argument("matmul shape");
    QMatrix c(n, std::vector<Q>(m, Q(0)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t t = 0; t < k; ++t) {
            if (a[i][t] == 0) continue;
            for (std::size_t j = 0; j < m; ++j)
                if (b[t][j] != 0) c[i][j] += a[i][t] * b[t][j];
        }
    return c;
}

namespace {

// Reduced row echelon in place; returns pivot columns.
std::vector<std::size_t> rref(QMatrix& m, std::size_t ncols) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t c = 0; c < ncols && row < m.size(); ++c) {
        std::size_t p = row;
        while (p < m.size() && m[p][c] == 0) ++p;
        if (p == m.size()) continue;
        std::swap(m[p], m[row]);
        Q inv = 1 / m[row][c];
        for (auto& v : m[row]) v *= inv;
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == row || m[r][c] == 0) continue;
            Q f = m[r][c];
            for (std::size_t j = 0; j < m[r].size(); ++j)
                if (m[row][j] != 0) m[r][j] -= f * m[row][j];
        }
        pivots.push_back(c);
        ++row;
    }
    return pivots;
}

}  // namespace

std::size_t rank(QMatrix m) {
    if (m.empty()) return 0;
    return rref(m, m[0].size()).size();
}

Q determinant(QMatrix m) {
    std::size_t n = m.size();
    Q det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m[p][c] == 0) ++p;
        if (p == n) return 0;
        if (p != c) {
            std::swap(m[p], m[c]);
            det = -det;
        }
        det *= m[c][c];
        for (std::size_t r = c + 1; r < n; ++r) {
            if (m[r][c] == 0) continue;
            Q f = m[r][c] / m[c][c];
            for (std::size_t j = c; j < n; ++j) m[r][j] -= f * m[c][j];
        }
    }
    return det;
}

std::optional<QMatrix> inverse(QMatrix m) {
    std::size_t n = m.size();
    for (std::size_t i = 0; i < n; ++i) {
        m[i].resize(2 * n, Q(0));
        m[i][n + i] = 1;
    }
    auto piv = rref(m, n);
    if (piv.size() != n) return std::nullopt;
    QMatrix inv(n);
    for (std::size_t i = 0; i < n; ++i) inv[i].assign(m[i].begin() + static_cast<long>(n), m[i].end());
    return inv;
}

std::optional<std::vector<Q>> solve(QMatrix m, std::vector<Q> b) {
    if (m.size() != b.size()) throw std::invalid_argument("solve shape");
    std::size_t ncols = m.empty() ? 0 : m[0].size();
    for (std::size_t i = 0; i < m.size(); ++i) m[i].push_back(b[i]);
    auto piv = rref(m, ncols + 1);
    if (!piv.empty() && piv.back() == ncols) return std::nullopt;
    std::vector<Q> x(ncols, Q(0));
    for (std::size_t r = 0; r < piv.size(); ++r) x[piv[r]] = m[r][ncols];
    return x;
}

std::vector<std::vector<Q>> nullspace(const QMatrix& m0) {
    if (m0.empty()) return {};
    QMatrix m = m0;
    std::size_t ncols = m[0].size();
    auto piv = rref(m, ncols);
    std::vector<bool> is_piv(ncols, false);
    for (auto c : piv) is_piv[c] = true;
    std::vector<std::vector<Q>> out;
    for (std::size_t f = 0; f < ncols; ++f) {
        if (is_piv[f]) continue;
        std::vector<Q> v(ncols, Q(0));
        v[f] = 1;
        for (std::size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -m[r][f];
        out.push_back(std::move(v));
    }
    return out;
}

Inertia inertia(QMatrix m) {
    std::size_t n = m.size();
    Inertia res;
    auto add_to = [&](std::size_t i, std::size_t j, const Q& s) {  // row/col i += s * row/col j
        for (std::size_t k = 0; k < n; ++k) m[i][k] += s * m[j][k];
        for (std::size_t k = 0; k < n; ++k) m[k][i] += s * m[k][j];
    };
    for (std::size_t i = 0; i < n; ++i) {
        if (m[i][i] == 0) {
            std::size_t p = i + 1;
            while (p < n && m[p][p] == 0) ++p;
            if (p < n) {
                std::swap(m[i], m[p]);
                for (auto& row : m) std::swap(row[i], row[p]);
            } else {
                std::size_t j = i + 1;
                while (j < n && m[i][j] == 0) ++j;
                if (j == n) {
                    ++res.zero;
                    continue;
                }
                add_to(i, j, 1);  // diagonal becomes 2 m_ij (other diagonals are zero)
            }
        }
        Q d = m[i][i];
        for (std::size_t r = i + 1; r < n; ++r) {
            if (m[r][i] == 0) continue;
            add_to(r, i, -m[r][i] / d);
        }
        if (d > 0) ++res.positive;
        else ++res.negative;
    }
    return res;
}

}  // namespace mclab
