#pragma once
// Field-element representation. Every group [p^delta] factors uniquely into a
// product of generator powers chi_{u^n}^e with e < u: write each count c_k of
// delta = sum w^k * c_k in base u (u = k-th prime), and the base-u digit e at
// u^(n-1) contributes chi_{u^n}^e. An Element is a finite sum of such
// monomials with coefficients in 1..p-1; this factored form is the engine's
// working representation, and the maps below are kept sorted so equality and
// ordering are structural.

#include <compare>
#include <cstdint>
#include <map>

#include "onp/errors.hpp"
#include "onp/exp_ordinal.hpp"
#include "onp/ordinal.hpp"
#include "onp/primes.hpp"

namespace onp {

// chi_{u^n}: u prime, n >= 1.
struct GeneratorId {
    std::uint64_t u = 0;
    unsigned n = 0;
    auto operator<=>(const GeneratorId&) const = default;
};

// Product of generator powers, exponents in 1..u-1 once reduced.
struct Monomial {
    std::map<GeneratorId, std::uint64_t> exps;

    bool is_one() const { return exps.empty(); }
    auto operator<=>(const Monomial&) const = default;

    static Monomial generator(std::uint64_t u, unsigned n) {
        Monomial m;
        m.exps[GeneratorId{u, n}] = 1;
        return m;
    }
};

// Finite sum of monomials with coefficients in 1..p-1.
struct Element {
    std::map<Monomial, unsigned> terms;

    bool is_zero() const { return terms.empty(); }
    bool is_one() const {
        return terms.size() == 1 && terms.begin()->first.is_one() && terms.begin()->second == 1;
    }
    auto operator<=>(const Element&) const = default;

    static Element zero() { return Element{}; }
    static Element one() { return from_coeff(1); }
    static Element from_coeff(unsigned c) {
        Element e;
        if (c != 0) e.terms[Monomial{}] = c;
        return e;
    }
    static Element from_monomial(const Monomial& m, unsigned c = 1) {
        Element e;
        if (c != 0) e.terms[m] = c;
        return e;
    }
};

// The exponent position delta a monomial occupies: sum over generators of
// w^pi(u) * u^(n-1) * e.
inline ExpOrdinal monomial_delta(const Monomial& m) {
    ExpOrdinal delta;
    for (const auto& [g, e] : m.exps) {
        std::uint64_t k = prime_index(g.u);
        delta.set_count(k, delta.count_at(k) + bignat_pow(BigNat(g.u), g.n - 1) * e);
    }
    return delta;
}

// Factor the count c into generator powers of the prime u: base-u digit e at
// u^(n-1) becomes exponent e on chi_{u^n}.
inline void factor_count_into(Monomial& m, std::uint64_t u, BigNat c) {
    unsigned n = 1;
    while (c > 0) {
        std::uint64_t e = static_cast<std::uint64_t>(c % u);
        if (e != 0) m.exps[GeneratorId{u, n}] = e;
        c /= u;
        ++n;
    }
}

inline Element ordinal_to_element(const Ordinal& o, unsigned p) {
    Element out;
    for (const auto& [delta, a] : o.digits()) {
        if (a >= p) throw std::invalid_argument("ordinal_to_element: digit not below p");
        Monomial m;
        for (const auto& [k, c] : delta.terms())
            factor_count_into(m, kth_prime(k), c);
        out.terms[m] = a;
    }
    return out;
}

inline Ordinal element_to_ordinal(const Element& e, unsigned p) {
    Ordinal o;
    for (const auto& [m, c] : e.terms) {
        if (c >= p) throw std::invalid_argument("element_to_ordinal: coefficient not below p");
        for (const auto& [g, exp] : m.exps)
            if (exp >= g.u) throw std::invalid_argument("element_to_ordinal: monomial not reduced");
        o.set_digit(monomial_delta(m), c);
    }
    return o;
}

} // namespace onp
