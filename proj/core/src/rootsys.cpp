#include "mclab/rootsys.hpp"

#include "mclab/linalg.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <stdexcept>

namespace mclab {

namespace {

using Vec = std::vector<int>;

Vec eps(int dim, int i, int si, int j = -1, int sj = 0) {
    Vec v(static_cast<std::size_t>(dim), 0);
    v[static_cast<std::size_t>(i)] += si;
    if (j >= 0) v[static_cast<std::size_t>(j)] += sj;
    return v;
}

struct Realization {
    int dim = 0;
    int scale = 1;  // multiplier on the Euclidean dot product
    std::vector<Vec> simple, positive;
};

Realization realize(char family, int l) {
    Realization r;
    switch (family) {
        case 'A':
            if (l < 1) throw std::invalid_argument("A_l needs rank >= 1");
            r.dim = l + 1;
            for (int i = 0; i < l; ++i) r.simple.push_back(eps(r.dim, i, 1, i + 1, -1));
            for (int i = 0; i <= l; ++i)
                for (int j = i + 1; j <= l; ++j) r.positive.push_back(eps(r.dim, i, 1, j, -1));
            break;
        case 'B':
            if (l < 2) throw std::invalid_argument("B_l needs rank >= 2");
            r.dim = l;
            r.scale = 2;
            for (int i = 0; i + 1 < l; ++i) r.simple.push_back(eps(r.dim, i, 1, i + 1, -1));
            r.simple.push_back(eps(r.dim, l - 1, 1));
            for (int i = 0; i < l; ++i) {
                r.positive.push_back(eps(r.dim, i, 1));
                for (int j = i + 1; j < l; ++j) {
                    r.positive.push_back(eps(r.dim, i, 1, j, -1));
                    r.positive.push_back(eps(r.dim, i, 1, j, 1));
                }
            }
            break;
        case 'C':
            if (l < 2) throw std::invalid_argument("C_l needs rank >= 2");
            r.dim = l;
            for (int i = 0; i + 1 < l; ++i) r.simple.push_back(eps(r.dim, i, 1, i + 1, -1));
            r.simple.push_back(eps(r.dim, l - 1, 2));
            for (int i = 0; i < l; ++i) {
                r.positive.push_back(eps(r.dim, i, 2));
                for (int j = i + 1; j < l; ++j) {
                    r.positive.push_back(eps(r.dim, i, 1, j, -1));
                    r.positive.push_back(eps(r.dim, i, 1, j, 1));
                }
            }
            break;
        case 'D':
            if (l < 3) throw std::invalid_argument("D_l needs rank >= 3");
            r.dim = l;
            for (int i = 0; i + 1 < l; ++i) r.simple.push_back(eps(r.dim, i, 1, i + 1, -1));
            r.simple.push_back(eps(r.dim, l - 2, 1, l - 1, 1));
            for (int i = 0; i < l; ++i)
                for (int j = i + 1; j < l; ++j) {
                    r.positive.push_back(eps(r.dim, i, 1, j, -1));
                    r.positive.push_back(eps(r.dim, i, 1, j, 1));
                }
            break;
        default:
            throw std::invalid_argument(std::string("unsupported root system family '") + family + "'");
    }
    return r;
}

}  // namespace

RootSystem RootSystem::build(char family, int rank) {
    family = static_cast<char>(std::toupper(static_cast<unsigned char>(family)));
    Realization re = realize(family, rank);
    RootSystem rs;
    rs.family_ = family;
    rs.rank_ = rank;
    auto l = static_cast<std::size_t>(rank);

    // Columns of S are the simple roots in epsilon coordinates; solve S c = v.
    QMatrix s(static_cast<std::size_t>(re.dim), std::vector<Q>(l, Q(0)));
    for (std::size_t j = 0; j < l; ++j)
        for (std::size_t i = 0; i < s.size(); ++i) s[i][j] = re.simple[j][i];
    for (auto& v : re.positive) {
        std::vector<Q> b(v.begin(), v.end());
        auto c = solve(s, b);
        if (!c) throw std::logic_error("root outside the simple-root lattice");
        Root root;
        for (auto& q : *c) {
            if (q.get_den() != 1 || q < 0) throw std::logic_error("non-integral positive root");
            root.coeffs.push_back(static_cast<int>(q.get_num().get_si()));
        }
        for (int x : root.coeffs) root.height += x;
        rs.pos_.push_back(std::move(root));
    }
    std::sort(rs.pos_.begin(), rs.pos_.end(), [](const Root& a, const Root& b) {
        if (a.height != b.height) return a.height < b.height;
        return a.coeffs > b.coeffs;
    });
    for (std::size_t i = 0; i < rs.pos_.size(); ++i) rs.pos_[i].id = i;

    rs.gram_.assign(l, std::vector<Q>(l, Q(0)));
    for (std::size_t i = 0; i < l; ++i)
        for (std::size_t j = 0; j < l; ++j) {
            long d = 0;
            for (int k = 0; k < re.dim; ++k) d += static_cast<long>(re.simple[i][static_cast<std::size_t>(k)]) * re.simple[j][static_cast<std::size_t>(k)];
            rs.gram_[i][j] = Q(d * re.scale);
        }
    rs.cartan_.assign(l, std::vector<int>(l, 0));
    for (std::size_t i = 0; i < l; ++i)
        for (std::size_t j = 0; j < l; ++j) {
            Q a = 2 * rs.gram_[i][j] / rs.gram_[j][j];
            if (a.get_den() != 1) throw std::logic_error("non-integral Cartan entry");
            rs.cartan_[i][j] = static_cast<int>(a.get_num().get_si());
        }

    std::size_t n = rs.pos_.size();
    rs.sum_.assign(n, std::vector<long>(n, -1));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            Vec v(l);
            for (std::size_t k = 0; k < l; ++k) v[k] = rs.pos_[a].coeffs[k] + rs.pos_[b].coeffs[k];
            if (auto id = rs.index_of(v)) rs.sum_[a][b] = static_cast<long>(*id);
        }
    return rs;
}

std::vector<int> RootSystem::signed_coeffs(std::size_t sid) const {
    std::size_t n = pos_.size();
    if (sid < n) return pos_[sid].coeffs;
    if (sid < 2 * n) {
        Vec v = pos_[sid - n].coeffs;
        for (auto& x : v) x = -x;
        return v;
    }
    throw std::out_of_range("signed root id");
}

std::optional<std::size_t> RootSystem::index_of(const std::vector<int>& coeffs) const {
    if (coeffs.size() != static_cast<std::size_t>(rank_)) return std::nullopt;
    bool neg = std::any_of(coeffs.begin(), coeffs.end(), [](int x) { return x < 0; });
    Vec v = coeffs;
    if (neg)
        for (auto& x : v) x = -x;
    for (std::size_t i = 0; i < pos_.size(); ++i)
        if (pos_[i].coeffs == v) return neg ? i + pos_.size() : i;
    return std::nullopt;
}

std::size_t RootSystem::negate(std::size_t sid) const {
    std::size_t n = pos_.size();
    if (sid >= 2 * n) throw std::out_of_range("signed root id");
    return sid < n ? sid + n : sid - n;
}

std::optional<std::size_t> RootSystem::sum(std::size_t a, std::size_t b) const {
    long s = sum_.at(a).at(b);
    if (s < 0) return std::nullopt;
    return static_cast<std::size_t>(s);
}

std::optional<std::size_t> RootSystem::signed_sum(std::size_t a, std::size_t b) const {
    Vec va = signed_coeffs(a), vb = signed_coeffs(b);
    for (std::size_t k = 0; k < va.size(); ++k) va[k] += vb[k];
    return index_of(va);
}

std::optional<std::size_t> RootSystem::difference(std::size_t a, std::size_t b) const {
    return signed_sum(a, negate(b));
}

Q RootSystem::pairing(const std::vector<int>& a, const std::vector<int>& b) const {
    Q r = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            if (b[j]) r += gram_[i][j] * (a[i] * b[j]);
    }
    return r;
}

bool RootSystem::leq(std::size_t beta, std::size_t alpha) const {
    const auto& b = pos_.at(beta).coeffs;
    const auto& a = pos_.at(alpha).coeffs;
    for (std::size_t k = 0; k < a.size(); ++k)
        if (b[k] > a[k]) return false;
    return true;
}

bool RootSystem::adjacent(std::size_t d1, std::size_t d2) const {
    return d1 != d2 && cartan_.at(d1).at(d2) != 0;
}

std::string RootSystem::label(std::size_t sid) const {
    std::string s = is_positive(sid) ? "" : "-";
    for (int x : pos_.at(is_positive(sid) ? sid : negate(sid)).coeffs) s += std::to_string(x);
    return s;
}

std::size_t RootSystem::parse_root(const std::string& text0) const {
    std::string text;
    for (char c : text0)
        if (!std::isspace(static_cast<unsigned char>(c))) text.push_back(c);
    auto fail = [&]() -> std::size_t {
        throw std::invalid_argument("not a root of " + name() + ": '" + text0 + "'");
    };
    if (text.empty()) return fail();
    Vec v(static_cast<std::size_t>(rank_), 0);
    std::string body = text[0] == '-' ? text.substr(1) : text;
    int sign = text[0] == '-' ? -1 : 1;
    bool digits = !body.empty() && std::all_of(body.begin(), body.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
    if (digits && body.size() == static_cast<std::size_t>(rank_)) {
        for (std::size_t k = 0; k < v.size(); ++k) v[k] = sign * (body[k] - '0');
    } else if (body.find(',') != std::string::npos) {
        std::size_t k = 0, pos = 0;
        while (pos <= body.size()) {
            std::size_t e = body.find(',', pos);
            if (e == std::string::npos) e = body.size();
            if (k >= v.size()) return fail();
            try {
                v[k++] = sign * std::stoi(body.substr(pos, e - pos));
            } catch (const std::exception&) {
                return fail();
            }
            pos = e + 1;
        }
        if (k != v.size()) return fail();
    } else {
        // Alias expression: letters a, b, c, ... name delta_1, delta_2, ...
        std::size_t pos = 0;
        while (pos < text.size()) {
            int s = 1;
            if (text[pos] == '+' || text[pos] == '-') {
                s = text[pos] == '-' ? -1 : 1;
                ++pos;
            } else if (pos != 0) {
                return fail();
            }
            int mult = 0;
            bool has = false;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
                mult = mult * 10 + (text[pos++] - '0');
                has = true;
            }
            if (!has) mult = 1;
            if (pos < text.size() && text[pos] == '*') ++pos;
            if (pos >= text.size() || !std::islower(static_cast<unsigned char>(text[pos]))) return fail();
            int idx = text[pos++] - 'a';
            if (idx >= rank_) return fail();
            v[static_cast<std::size_t>(idx)] += s * mult;
        }
    }
    auto id = index_of(v);
    if (!id) return fail();
    return *id;
}

std::optional<std::vector<std::size_t>> chain_between(const RootSystem& rs, std::size_t beta, std::size_t alpha) {
    if (!rs.leq(beta, alpha)) return std::nullopt;
    std::vector<std::size_t> path;
    std::function<bool(std::size_t)> dfs = [&](std::size_t cur) {
        if (cur == alpha) return true;
        for (std::size_t d = 0; d < static_cast<std::size_t>(rs.rank()); ++d) {
            auto nxt = rs.sum(cur, d);
            if (!nxt || !rs.leq(*nxt, alpha)) continue;
            path.push_back(d);
            if (dfs(*nxt)) return true;
            path.pop_back();
        }
        return false;
    };
    if (!dfs(beta)) throw std::logic_error("no chain between comparable roots");
    return path;
}

OmegaDecomposition omega_decompose(const RootSystem& rs) {
    OmegaDecomposition d;
    std::size_t w = rs.highest_root();
    Q ww = rs.pairing_ids(w, w);
    for (std::size_t i = 0; i < rs.num_positive(); ++i) {
        Q r = rs.pairing_ids(w, i) / ww;
        if (r == 0) d.sigma0.push_back(i);
        else if (r == Q(1, 2)) d.sigma_half.push_back(i);
        else if (r == 1 && i == w) d.sigma1.push_back(i);
        else throw std::logic_error("unexpected omega pairing ratio " + r.get_str());
    }
    return d;
}

std::set<std::size_t> simple_support(const RootSystem& rs, std::size_t sid) {
    std::set<std::size_t> s;
    auto c = rs.signed_coeffs(sid);
    for (std::size_t k = 0; k < c.size(); ++k)
        if (c[k] != 0) s.insert(k);
    return s;
}

bool is_connected(const RootSystem& rs, const std::set<std::size_t>& simples) {
    if (simples.empty()) return true;
    std::set<std::size_t> seen{*simples.begin()};
    std::vector<std::size_t> stack{*simples.begin()};
    while (!stack.empty()) {
        std::size_t d = stack.back();
        stack.pop_back();
        for (std::size_t e : simples)
            if (!seen.count(e) && rs.adjacent(d, e)) {
                seen.insert(e);
                stack.push_back(e);
            }
    }
    return seen.size() == simples.size();
}

bool is_connected_support(const RootSystem& rs, std::size_t sid) {
    return is_connected(rs, simple_support(rs, sid));
}

}  // namespace mclab
