#pragma once
// Structure of the subfield lattice. Fields below the first transcendental
// are exactly the chi_r for prime powers r; chi_h for composite h is
// assembled from its largest prime-power part and a recursive tail, with the
// divisibility test r | degree(chi_g) deciding whether chi_r must be added.
// alpha_u (the value of chi_u^u) is found by scanning [chi_{f(u)} + m] for
// increasing m until the candidate stops being a u-th power; u-th-power
// membership is the norm-style test beta^((p^D - 1)/u) == 1 over a field
// F_{p^D} containing beta with u | p^D - 1.
//
// Mutually recursive with arithmetic.hpp; include either, get both.

#include <numeric>

#include "onp/arithmetic.hpp"

namespace onp {

namespace detail {
inline std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}
} // namespace detail

// f(u): multiplicative order of p modulo u, for primes u != p. Divides u - 1.
inline std::uint64_t f_of(std::uint64_t u, Context& ctx) {
    if (!is_prime_u64(u)) throw std::invalid_argument("f_of: u must be prime");
    if (u == ctx.p()) throw std::invalid_argument("f_of: u must differ from the characteristic");
    std::uint64_t r = ctx.p() % u;
    std::uint64_t x = r, m = 1;
    while (x != 1) {
        x = detail::mulmod_u64(x, r, u);
        ++m;
    }
    return m;
}

// The field ordinal chi_{u^n} = [p^(w^pi(u) * u^(n-1))].
inline Ordinal chi_prime_power(std::uint64_t u, unsigned n, Context& ctx) {
    if (!is_prime_u64(u)) throw std::invalid_argument("chi_prime_power: u must be prime");
    if (n < 1) throw std::invalid_argument("chi_prime_power: n must be at least 1");
    (void)ctx;
    return Ordinal::group(ExpOrdinal::omega_power(prime_index(u), bignat_pow(BigNat(u), n - 1)));
}

// u-adic valuation: the exponent a with u^a dividing n but u^(a+1) not.
inline std::uint64_t u_part(std::uint64_t u, BigNat n) {
    if (n == 0) throw std::invalid_argument("u_part: zero has no u-part");
    std::uint64_t a = 0;
    while (n % u == 0) { n /= u; ++a; }
    return a;
}

// chi_h and the set Q(h) of prime powers it is assembled from.
inline const std::pair<Element, std::vector<std::uint64_t>>& chi_h(std::uint64_t h, Context& ctx) {
    if (h < 1) throw std::invalid_argument("chi_h: h must be positive");
    if (auto it = ctx.chi_cache.find(h); it != ctx.chi_cache.end()) return it->second;

    std::pair<Element, std::vector<std::uint64_t>> result;
    if (h == 1) {
        result = {Element::zero(), {}};
    } else if (auto [pu, pn] = as_prime_power(h); pn != 0) {
        result = {Element::from_monomial(Monomial::generator(pu, pn)), {h}};
    } else {
        std::uint64_t u = 2;
        while (h % u != 0) u = kth_prime(prime_index(u) + 1);
        auto [r, g] = split_prime_power(u, h);
        unsigned n = 0;
        for (std::uint64_t t = r; t > 1; t /= u) ++n;
        result = chi_h(g, ctx); // copy of (chi_g, Q(g))
        if (degree(result.first, ctx) % r != 0) {
            result.first = add(result.first,
                               Element::from_monomial(Monomial::generator(u, n)), ctx);
            result.second.push_back(r);
        }
    }
    return ctx.chi_cache.emplace(h, std::move(result)).first->second;
}

// Is beta a u-th power? Work inside F_{p^D} with D = lcm(degree(beta), f(u)),
// so that u divides p^D - 1, and test beta^((p^D - 1)/u) == 1.
inline bool is_uth_power(const Element& beta, std::uint64_t u, Context& ctx) {
    if (!is_prime_u64(u)) throw std::invalid_argument("is_uth_power: u must be prime");
    if (u == ctx.p())
        throw std::invalid_argument("is_uth_power: every element is a p-th power in characteristic p");
    if (beta.is_zero()) return true;
    std::uint64_t d = std::lcm(degree(beta, ctx), f_of(u, ctx));
    BigNat n = (bignat_pow(BigNat(ctx.p()), d) - 1) / u;
    return detail::ipow(detail::to_internal(beta, ctx), n, ctx) == detail::ione(ctx);
}

// alpha_u = [chi_{f(u)} + m]: scan m upward from the natural tail of
// chi_{f(u)}'s expansion; the first candidate that is not a u-th power is
// alpha_u, and everything below it in the scan is one.
inline const AlphaRecord& alpha_u(std::uint64_t u, Context& ctx) {
    if (auto it = ctx.alpha_cache.find(u); it != ctx.alpha_cache.end()) return it->second;
    if (!is_prime_u64(u)) throw std::invalid_argument("alpha_u: u must be prime");
    if (u == ctx.p())
        throw std::invalid_argument("alpha_u: defined for primes other than the characteristic");

    std::uint64_t f = f_of(u, ctx);
    const auto& [chi_f, q] = chi_h(f, ctx);
    Ordinal base = element_to_ordinal(chi_f, ctx.p());

    Ordinal lambda;            // limit digits of chi_f
    BigNat m1 = 0;             // natural tail
    for (const auto& [delta, a] : base.digits()) {
        if (delta.is_finite())
            m1 += BigNat(a) * bignat_pow(BigNat(ctx.p()),
                                         delta.finite_value().convert_to<std::uint64_t>());
        else
            lambda.set_digit(delta, a);
    }

    AlphaRecord record;
    record.u = u;
    record.f = f;
    record.Q = q;
    for (std::uint64_t step = 0; step <= ctx.config().alpha_scan_cap; ++step) {
        BigNat t = m1 + step;
        Ordinal candidate = lambda;
        Ordinal tail = Ordinal::from_nat(t, ctx.p());
        for (const auto& [delta, a] : tail.digits())
            candidate.set_digit(delta, a);
        Element cand = ordinal_to_element(candidate, ctx.p());
        if (!is_uth_power(cand, u, ctx)) {
            record.excess = step;
            record.alpha = std::move(cand);
            return ctx.alpha_cache.emplace(u, std::move(record)).first->second;
        }
    }
    throw resource_error("alpha_u: scan cap exceeded");
}

// The first `count` fields in increasing order. Every chi_{2^n} precedes
// chi_3 in the chi-ordering (u dominates, then n), so a finite prefix is the
// u = 2 tower: [p^(2^(n-1))] for n = 1..count.
inline std::vector<Ordinal> first_field_chain(unsigned p, std::size_t count) {
    if (!is_prime_u64(p)) throw std::invalid_argument("first_field_chain: p must be prime");
    std::vector<Ordinal> out;
    out.reserve(count);
    for (std::size_t n = 1; n <= count; ++n)
        out.push_back(Ordinal::group(ExpOrdinal::omega_power(0, bignat_pow(BigNat(2), n - 1))));
    return out;
}

} // namespace onp
