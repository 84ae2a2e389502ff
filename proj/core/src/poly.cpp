#include "mclab/poly.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace mclab {

Poly Poly::constant(std::size_t nvars, const Q& c) {
    Poly p(nvars);
    if (c != 0) p.t_.emplace(Mono(nvars, 0), c);
    return p;
}

Poly Poly::var(std::size_t nvars, std::size_t i, const Q& c) {
    if (i >= nvars) throw std::out_of_range("Poly::var index");
    Poly p(nvars);
    Mono m(nvars, 0);
    m[i] = 1;
    if (c != 0) p.t_.emplace(std::move(m), c);
    return p;
}

Poly Poly::monomial(const Mono& m, const Q& c) {
    Poly p(m.size());
    if (c != 0) p.t_.emplace(m, c);
    return p;
}

bool Poly::is_constant() const {
    if (t_.empty()) return true;
    if (t_.size() > 1) return false;
    const Mono& m = t_.begin()->first;
    return std::all_of(m.begin(), m.end(), [](std::uint8_t e) { return e == 0; });
}

Q Poly::constant_term() const { return coeff(Mono(n_, 0)); }

Q Poly::coeff(const Mono& m) const {
    auto it = t_.find(m);
    return it == t_.end() ? Q(0) : it->second;
}

void Poly::add_term(const Mono& m, const Q& c) {
    if (c == 0) return;
    if (m.size() != n_) {
        if (n_ == 0 && t_.empty()) {
            n_ = m.size();
        } else if (n_ == 0) {
            promote(m.size());
        } else {
            throw std::invalid_argument("Poly::add_term ring mismatch");
        }
    }
    auto [it, inserted] = t_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) t_.erase(it);
    }
}

void Poly::promote(std::size_t n) {
    if (n_ == n) return;
    if (n_ != 0) throw std::invalid_argument("Poly ring mismatch");
    std::map<Mono, Q> nt;
    for (auto& [m, c] : t_) nt.emplace(Mono(n, 0), c);
    t_ = std::move(nt);
    n_ = n;
}

Poly& Poly::operator+=(const Poly& o) {
    if (o.n_ != n_) {
        if (o.n_ == 0) {
            add_term(Mono(n_, 0), o.constant_term());
            return *this;
        }
        promote(o.n_);
    }
    for (auto& [m, c] : o.t_) add_term(m, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (o.n_ != n_) {
        if (o.n_ == 0) {
            add_term(Mono(n_, 0), -o.constant_term());
            return *this;
        }
        promote(o.n_);
    }
    for (auto& [m, c] : o.t_) add_term(m, -c);
    return *this;
}

Poly& Poly::operator*=(const Q& c) {
    if (c == 0) {
        t_.clear();
        return *this;
    }
    for (auto& kv : t_) kv.second *= c;
    return *this;
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& kv : r.t_) kv.second = -kv.second;
    return r;
}

Poly operator*(const Poly& a, const Poly& b) {
    std::size_t n = a.n_;
    if (a.n_ != b.n_) {
        if (a.n_ == 0) n = b.n_;
        else if (b.n_ != 0) throw std::invalid_argument("Poly ring mismatch in product");
    }
    Poly r(n);
    if (a.t_.empty() || b.t_.empty()) return r;
    Mono m(n, 0);
    for (auto& [ma, ca] : a.t_) {
        for (auto& [mb, cb] : b.t_) {
            for (std::size_t i = 0; i < n; ++i) {
                unsigned e = (a.n_ ? ma[i] : 0u) + (b.n_ ? mb[i] : 0u);
                if (e > 255) throw std::overflow_error("exponent overflow");
                m[i] = static_cast<std::uint8_t>(e);
            }
            r.add_term(m, ca * cb);
        }
    }
    return r;
}

bool operator==(const Poly& a, const Poly& b) {
    if (a.t_.empty() || b.t_.empty()) return a.t_.empty() && b.t_.empty();
    if (a.n_ == b.n_) return a.t_ == b.t_;
    if (a.is_constant() && b.is_constant()) return a.constant_term() == b.constant_term();
    return false;
}

Poly Poly::pow(unsigned k) const {
    Poly r = constant(n_, 1);
    Poly base = *this;
    while (k) {
        if (k & 1u) r = r * base;
        k >>= 1u;
        if (k) base = base * base;
    }
    return r;
}

Poly Poly::derivative(std::size_t i) const {
    Poly r(n_);
    if (i >= n_) return r;
    for (auto& [m, c] : t_) {
        if (m[i] == 0) continue;
        Mono d = m;
        d[i] -= 1;
        r.add_term(d, c * static_cast<unsigned long>(m[i]));
    }
    return r;
}

bool Poly::depends_on(std::size_t i) const {
    if (i >= n_) return false;
    for (auto& [m, c] : t_)
        if (m[i]) return true;
    return false;
}

unsigned Poly::degree_in(std::size_t i) const {
    unsigned d = 0;
    if (i >= n_) return 0;
    for (auto& [m, c] : t_) d = std::max<unsigned>(d, m[i]);
    return d;
}

unsigned Poly::total_degree() const {
    unsigned d = 0;
    for (auto& [m, c] : t_) d = std::max<unsigned>(d, std::accumulate(m.begin(), m.end(), 0u));
    return d;
}

Poly Poly::compose(const std::vector<Poly>& subs) const {
    if (n_ != 0 && subs.size() != n_) throw std::invalid_argument("Poly::compose arity");
    std::size_t out_n = 0;
    for (auto& s : subs) out_n = std::max(out_n, s.nvars());
    Poly r(out_n);
    // Cache powers per variable.
    std::vector<std::vector<Poly>> powers(n_);
    auto power = [&](std::size_t i, unsigned e) -> const Poly& {
        auto& v = powers[i];
        if (v.empty()) v.push_back(Poly::constant(out_n, 1));
        while (v.size() <= e) v.push_back(v.back() * subs[i]);
        return v[e];
    };
    for (auto& [m, c] : t_) {
        Poly term = Poly::constant(out_n, c);
        for (std::size_t i = 0; i < n_ && !term.is_zero(); ++i)
            if (m[i]) term = term * power(i, m[i]);
        r += term;
    }
    return r;
}

Poly Poly::substitute(std::size_t i, const Poly& value) const {
    std::vector<Poly> subs;
    subs.reserve(n_);
    for (std::size_t k = 0; k < n_; ++k) subs.push_back(k == i ? value.extend(n_) : Poly::var(n_, k));
    return compose(subs);
}

Q Poly::evaluate(const std::vector<Q>& point) const {
    if (n_ != 0 && point.size() != n_) throw std::invalid_argument("Poly::evaluate arity");
    Q total = 0;
    for (auto& [m, c] : t_) {
        Q v = c;
        for (std::size_t i = 0; i < n_; ++i)
            for (unsigned e = 0; e < m[i]; ++e) v *= point[i];
        total += v;
    }
    return total;
}

Poly Poly::extend(std::size_t nvars) const {
    if (nvars == n_) return *this;
    if (nvars < n_) throw std::invalid_argument("Poly::extend shrinks ring");
    Poly r(nvars);
    for (auto& [m, c] : t_) {
        Mono e(nvars, 0);
        std::copy(m.begin(), m.end(), e.begin());
        r.t_.emplace(std::move(e), c);
    }
    return r;
}

Poly Poly::remap(const std::vector<std::size_t>& map, std::size_t nvars) const {
    Poly r(nvars);
    for (auto& [m, c] : t_) {
        Mono e(nvars, 0);
        for (std::size_t i = 0; i < n_; ++i) {
            if (!m[i]) continue;
            if (map.at(i) >= nvars) throw std::out_of_range("Poly::remap target");
            e[map[i]] += m[i];
        }
        r.add_term(e, c);
    }
    return r;
}

long weighted_degree(const Mono& m, const std::vector<int>& weights) {
    long d = 0;
    for (std::size_t i = 0; i < m.size(); ++i) d += static_cast<long>(m[i]) * weights.at(i);
    return d;
}

std::optional<long> Poly::weighted_degree(const std::vector<int>& weights) const {
    if (t_.empty()) return std::nullopt;
    std::optional<long> d;
    for (auto& [m, c] : t_) {
        long w = mclab::weighted_degree(m, weights);
        if (d && *d != w) return std::nullopt;
        d = w;
    }
    return d;
}

std::map<long, Poly> Poly::homogeneous_parts(const std::vector<int>& weights) const {
    std::map<long, Poly> parts;
    for (auto& [m, c] : t_) {
        auto& p = parts.try_emplace(mclab::weighted_degree(m, weights), Poly(n_)).first->second;
        p.add_term(m, c);
    }
    return parts;
}

std::string mono_to_string(const Mono& m, const std::vector<std::string>& names) {
    std::string s;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (!m[i]) continue;
        if (!s.empty()) s += "*";
        s += i < names.size() ? names[i] : ("v" + std::to_string(i));
        if (m[i] > 1) s += "^" + std::to_string(m[i]);
    }
    return s;
}

namespace {

// Printing order: higher total degree first, then reverse-lex exponent order.
std::vector<std::pair<Mono, Q>> ordered_terms(const std::map<Mono, Q>& t) {
    std::vector<std::pair<Mono, Q>> v(t.begin(), t.end());
    std::stable_sort(v.begin(), v.end(), [](const auto& a, const auto& b) {
        unsigned da = std::accumulate(a.first.begin(), a.first.end(), 0u);
        unsigned db = std::accumulate(b.first.begin(), b.first.end(), 0u);
        if (da != db) return da > db;
        return a.first > b.first;
    });
    return v;
}

}  // namespace

std::string Poly::to_string(const std::vector<std::string>& names) const {
    if (t_.empty()) return "0";
    std::string out;
    bool first = true;
    for (auto& [m, c] : ordered_terms(t_)) {
        std::string ms = mono_to_string(m, names);
        Q a = abs(c);
        bool neg = c < 0;
        if (first) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        first = false;
        if (ms.empty()) {
            out += a.get_str();
        } else if (a == 1) {
            out += ms;
        } else {
            out += a.get_str() + "*" + ms;
        }
    }
    return out;
}

Poly Poly::normalized(Q* factor) const {
    if (t_.empty()) {
        if (factor) *factor = 1;
        return *this;
    }
    Z g = 0, l = 1;
    for (auto& [m, c] : t_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num_mpz_t());
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    }
    Q f(l, g);
    f.canonicalize();
    if (ordered_terms(t_).front().second < 0) f = -f;
    if (factor) *factor = f;
    return *this * f;
}

namespace {

struct PolyParser {
    const std::string& s;
    const std::vector<std::string>& names;
    std::size_t pos = 0;

    void skip() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    [[noreturn]] void fail(const std::string& what) const {
        throw std::invalid_argument("polynomial parse error at " + std::to_string(pos) + ": " + what);
    }
    Poly expr() {
        Poly r(names.size());
        skip();
        bool neg = false;
        if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) {
            neg = s[pos] == '-';
            ++pos;
        }
        Poly t = term();
        r += neg ? -t : t;
        for (;;) {
            skip();
            if (pos >= s.size() || (s[pos] != '+' && s[pos] != '-')) break;
            bool minus = s[pos] == '-';
            ++pos;
            Poly u = term();
            r += minus ? -u : u;
        }
        return r;
    }
    Poly term() {
        Poly r = factor();
        for (;;) {
            skip();
            if (pos < s.size() && s[pos] == '*') {
                ++pos;
                r = r * factor();
            } else if (pos < s.size() && s[pos] == '/') {
                ++pos;
                skip();
                std::size_t st = pos;
                while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
                if (st == pos) fail("expected integer divisor");
                r *= Q(1, Z(s.substr(st, pos - st)));
            } else {
                break;
            }
        }
        return r;
    }
    Poly factor() {
        skip();
        Poly base(names.size());
        if (pos >= s.size()) fail("unexpected end");
        if (s[pos] == '(') {
            ++pos;
            base = expr();
            skip();
            if (pos >= s.size() || s[pos] != ')') fail("expected ')'");
            ++pos;
        } else if (s[pos] == '-') {
            ++pos;
            base = -factor();
        } else if (std::isdigit(static_cast<unsigned char>(s[pos]))) {
            std::size_t st = pos;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
            Q c(Z(s.substr(st, pos - st)));
            if (pos < s.size() && s[pos] == '/' && pos + 1 < s.size() &&
                std::isdigit(static_cast<unsigned char>(s[pos + 1]))) {
                ++pos;
                std::size_t st2 = pos;
                while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
                c = Q(c.get_num(), Z(s.substr(st2, pos - st2)));
                c.canonicalize();
            }
            base = Poly::constant(names.size(), c);
        } else {
            std::size_t st = pos;
            while (pos < s.size() && (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_')) ++pos;
            std::string id = s.substr(st, pos - st);
            auto it = std::find(names.begin(), names.end(), id);
            if (id.empty() || it == names.end()) fail("unknown variable '" + id + "'");
            base = Poly::var(names.size(), static_cast<std::size_t>(it - names.begin()));
        }
        skip();
        if (pos < s.size() && s[pos] == '^') {
            ++pos;
            skip();
            std::size_t st = pos;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
            if (st == pos) fail("expected exponent");
            base = base.pow(static_cast<unsigned>(std::stoul(s.substr(st, pos - st))));
        }
        return base;
    }
};

}  // namespace

Poly parse_poly(const std::string& text, const std::vector<std::string>& names) {
    PolyParser p{text, names};
    Poly r = p.expr();
    p.skip();
    if (p.pos != text.size()) p.fail("trailing input");
    return r.extend(names.size());
}

std::vector<Mono> monomials_of_weight(std::size_t nvars, const std::vector<std::size_t>& vars,
                                      const std::vector<int>& weights, long d) {
    std::vector<Mono> out;
    if (d < 0) return out;
    Mono cur(nvars, 0);
    std::function<void(std::size_t, long)> rec = [&](std::size_t k, long left) {
        if (k == vars.size()) {
            if (left == 0) out.push_back(cur);
            return;
        }
        std::size_t v = vars[k];
        int w = weights.at(v);
        for (long e = left / w; e >= 0; --e) {
            cur[v] = static_cast<std::uint8_t>(e);
            rec(k + 1, left - e * w);
        }
        cur[v] = 0;
    };
    rec(0, d);
    return out;
}

}  // namespace mclab
