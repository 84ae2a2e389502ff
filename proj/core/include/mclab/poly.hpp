#pragma once

#include "mclab/rational.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace mclab {

using Mono = std::vector<std::uint8_t>;

// Sparse multivariate polynomial over Q with a fixed number of variables.
// A polynomial with nvars() == 0 is a constant and promotes to any ring.
class Poly {
public:
    Poly() = default;
    explicit Poly(std::size_t nvars) : n_(nvars) {}

    static Poly constant(std::size_t nvars, const Q& c);
    static Poly var(std::size_t nvars, std::size_t i, const Q& c = 1);
    static Poly monomial(const Mono& m, const Q& c);

    std::size_t nvars() const { return n_; }
    const std::map<Mono, Q>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    bool is_constant() const;
    Q constant_term() const;
    Q coeff(const Mono& m) const;
    std::size_t size() const { return t_.size(); }

    void add_term(const Mono& m, const Q& c);

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Q& c);
    Poly operator-() const;

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(Poly a, const Q& c) { return a *= c; }
    friend Poly operator*(const Q& c, Poly a) { return a *= c; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend bool operator==(const Poly& a, const Poly& b);
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    Poly pow(unsigned k) const;
    Poly derivative(std::size_t i) const;
    bool depends_on(std::size_t i) const;
    unsigned degree_in(std::size_t i) const;
    unsigned total_degree() const;

    // Substitute subs[i] for variable i; result lives in the ring of subs.
    Poly compose(const std::vector<Poly>& subs) const;
    Poly substitute(std::size_t i, const Poly& value) const;
    Q evaluate(const std::vector<Q>& point) const;

    // Same polynomial viewed in a ring with more variables (appended at the end).
    Poly extend(std::size_t nvars) const;
    // Rename variables: variable i becomes map[i] in a ring of size nvars.
    Poly remap(const std::vector<std::size_t>& map, std::size_t nvars) const;

    // Weighted degree if homogeneous, nullopt otherwise (or for zero).
    std::optional<long> weighted_degree(const std::vector<int>& weights) const;
    std::map<long, Poly> homogeneous_parts(const std::vector<int>& weights) const;

    // Deterministic rendering, e.g. "3/4*x^2*y - u + 1".
    std::string to_string(const std::vector<std::string>& names) const;

    // Primitive integer multiple with positive leading coefficient, and the factor used.
    Poly normalized(Q* factor = nullptr) const;

private:
    void promote(std::size_t n);

    std::size_t n_ = 0;
    std::map<Mono, Q> t_;
};

// Weighted degree of a monomial.
long weighted_degree(const Mono& m, const std::vector<int>& weights);

// All monomials in the variables `vars` (others zero) of exact weighted degree d, in a fixed order.
std::vector<Mono> monomials_of_weight(std::size_t nvars, const std::vector<std::size_t>& vars,
                                      const std::vector<int>& weights, long d);

std::string mono_to_string(const Mono& m, const std::vector<std::string>& names);

// Parse a polynomial written with the given variable names ("3/2*x*y - u^2 + 1").
Poly parse_poly(const std::string& text, const std::vector<std::string>& names);

}  // namespace mclab
