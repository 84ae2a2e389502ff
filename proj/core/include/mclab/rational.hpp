#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace mclab {

using Q = mpq_class;
using Z = mpz_class;

// "p/q", or "p" when q == 1.
inline std::string to_string(const Q& q) { return q.get_str(); }

inline Q parse_rational(const std::string& text) {
    std::string s;
    for (char c : text)
        if (c != ' ' && c != '\t') s.push_back(c);
    if (s.empty()) throw std::invalid_argument("empty rational");
    if (s.front() == '+') s.erase(0, 1);
    auto slash = s.find('/');
    Q out;
    try {
        if (slash == std::string::npos) {
            out = Q(Z(s), 1);
        } else {
            Z den(s.substr(slash + 1));
            if (den == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
            out = Q(Z(s.substr(0, slash)), den);
        }
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("not a rational: '" + text + "'");
    }
    out.canonicalize();
    return out;
}

}  // namespace mclab
