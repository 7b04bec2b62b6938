#pragma once
// Integer factoring support for the multiplicative-order diagnostic: ord(a)
// needs the full factorization of p^d - 1. The number is first split into
// cyclotomic pieces Phi_e(p) for e | d (exact divisions only), and each piece
// is factored by trial division followed by Brent's variant of Pollard rho
// with Miller-Rabin primality testing. All arithmetic is on arbitrary-
// precision naturals so large d never overflows.

#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "onp/errors.hpp"
#include "onp/primes.hpp"

namespace onp {

using BigNat = boost::multiprecision::cpp_int;

// p^e for machine exponent.
inline BigNat bignat_pow(const BigNat& base, std::uint64_t e) {
    BigNat result = 1, b = base;
    while (e) {
        if (e & 1) result *= b;
        b *= b;
        e >>= 1;
    }
    return result;
}

// Miller-Rabin. The witness set {2,...,37} is deterministic below 3.3e24,
// which covers every piece the cyclotomic split produces in practice; beyond
// that it is a (very) strong probable-prime test, fine for a diagnostic.
inline bool is_probable_prime(const BigNat& n) {
    if (n < 2) return false;
    static const unsigned small[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    for (unsigned q : small) {
        if (n == q) return true;
        if (n % q == 0) return false;
    }
    BigNat d = n - 1;
    std::uint64_t s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    for (unsigned a : small) {
        BigNat x = boost::multiprecision::powm(BigNat(a), d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (std::uint64_t i = 1; i < s; ++i) {
            x = x * x % n;
            if (x == n - 1) { composite = false; break; }
        }
        if (composite) return false;
    }
    return true;
}

namespace detail {

// Brent-cycle Pollard rho; returns a nontrivial factor of composite odd n.
inline BigNat pollard_rho(const BigNat& n, std::uint64_t iter_cap) {
    std::mt19937_64 rng(0x9e3779b97f4a7c15ULL ^ static_cast<std::uint64_t>(n % 1000003));
    for (int attempt = 0; attempt < 64; ++attempt) {
        BigNat c = BigNat(rng() % 1000003 + 1);
        BigNat x = BigNat(rng() % 1000003 + 2), y = x, d = 1;
        std::uint64_t steps = 0;
        auto step = [&](BigNat v) { return (v * v + c) % n; };
        while (d == 1) {
            if (++steps > iter_cap)
                throw resource_error("pollard_rho: iteration cap exceeded");
            x = step(x);
            y = step(step(y));
            BigNat diff = x > y ? x - y : y - x;
            if (diff == 0) break; // cycle without factor; retry with new c
            d = boost::multiprecision::gcd(diff, n);
        }
        if (d != 1 && d != n) return d;
    }
    throw resource_error("pollard_rho: failed to split composite");
}

inline void factor_into(BigNat n, std::map<BigNat, unsigned>& out,
                        std::uint64_t trial_bound, std::uint64_t rho_iter_cap) {
    if (n <= 1) return;
    for (std::uint64_t d = 2; d <= trial_bound && BigNat(d) * d <= n; d == 2 ? d = 3 : d += 2) {
        while (n % d == 0) { ++out[BigNat(d)]; n /= d; }
    }
    if (n == 1) return;
    if (is_probable_prime(n)) { ++out[n]; return; }
    BigNat f = pollard_rho(n, rho_iter_cap);
    factor_into(f, out, 2, rho_iter_cap);
    factor_into(n / f, out, 2, rho_iter_cap);
}

} // namespace detail

// Full factorization as prime -> multiplicity.
inline std::map<BigNat, unsigned> factor(const BigNat& n,
                                         std::uint64_t trial_bound = 1'000'000,
                                         std::uint64_t rho_iter_cap = 50'000'000) {
    std::map<BigNat, unsigned> out;
    detail::factor_into(n, out, trial_bound, rho_iter_cap);
    return out;
}

// Ascending divisors of a machine natural.
inline std::vector<std::uint64_t> divisors_of(std::uint64_t n) {
    std::vector<std::uint64_t> lo, hi;
    for (std::uint64_t d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            lo.push_back(d);
            if (d != n / d) hi.push_back(n / d);
        }
    }
    for (auto it = hi.rbegin(); it != hi.rend(); ++it) lo.push_back(*it);
    return lo;
}

// Phi_e(p) for all e | d, by exact division: Phi_e(p) = (p^e - 1) / prod of
// Phi_{e'}(p) over proper divisors e' of e. Returned keyed by e.
inline std::map<std::uint64_t, BigNat> cyclotomic_values(const BigNat& p, std::uint64_t d) {
    std::map<std::uint64_t, BigNat> phi;
    for (std::uint64_t e : divisors_of(d)) {
        BigNat val = bignat_pow(p, e) - 1;
        for (std::uint64_t e2 : divisors_of(e))
            if (e2 != e) val /= phi.at(e2);
        phi[e] = val;
    }
    return phi;
}

// Factorization of p^d - 1 through the cyclotomic split.
inline std::map<BigNat, unsigned> factor_pd_minus_1(const BigNat& p, std::uint64_t d,
                                                    std::uint64_t trial_bound = 1'000'000,
                                                    std::uint64_t rho_iter_cap = 50'000'000) {
    std::map<BigNat, unsigned> out;
    for (const auto& [e, value] : cyclotomic_values(p, d))
        detail::factor_into(value, out, trial_bound, rho_iter_cap);
    return out;
}

} // namespace onp
