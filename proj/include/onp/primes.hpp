#pragma once
// Small-prime utilities: primality for machine integers, the k-th prime, and
// pi(u) = number of primes strictly below u (the omega-power attached to the
// prime u in base-p expansions).

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace onp {

// Deterministic primality for 64-bit n via trial division by 2/3 and 6k+-1.
// Inputs here are small (generator primes, digit bases), so this is plenty.
inline bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    if (n % 3 == 0) return n == 3;
    for (std::uint64_t d = 5; d * d <= n; d += 6) {
        if (n % d == 0 || n % (d + 2) == 0) return false;
    }
    return true;
}

namespace detail {
// Grow-on-demand list of primes, shared per translation unit.
inline std::vector<std::uint64_t>& prime_list() {
    static std::vector<std::uint64_t> primes{2, 3, 5, 7, 11, 13};
    return primes;
}
inline void extend_primes_until(std::size_t count_at_least, std::uint64_t value_at_least) {
    auto& primes = prime_list();
    std::uint64_t candidate = primes.back();
    while (primes.size() < count_at_least || primes.back() < value_at_least) {
        do { ++candidate; } while (!is_prime_u64(candidate));
        primes.push_back(candidate);
    }
}
} // namespace detail

// k-th prime, zero-based: kth_prime(0) == 2, kth_prime(1) == 3, ...
inline std::uint64_t kth_prime(std::size_t k) {
    detail::extend_primes_until(k + 1, 0);
    return detail::prime_list()[k];
}

// pi(u): number of primes strictly below the prime u. prime_index(2) == 0,
// prime_index(3) == 1, prime_index(5) == 2, ...
inline std::size_t prime_index(std::uint64_t u) {
    if (!is_prime_u64(u)) throw std::invalid_argument("prime_index: argument is not prime");
    detail::extend_primes_until(0, u);
    const auto& primes = detail::prime_list();
    std::size_t lo = 0;
    while (primes[lo] != u) ++lo;
    return lo;
}

// Primes u with lo <= u <= hi, ascending.
inline std::vector<std::uint64_t> primes_in(std::uint64_t lo, std::uint64_t hi) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t u = lo < 2 ? 2 : lo; u <= hi; ++u)
        if (is_prime_u64(u)) out.push_back(u);
    return out;
}

// Largest power of the prime u dividing h, together with the cofactor.
// Returns {u^v, h / u^v}.
inline std::pair<std::uint64_t, std::uint64_t> split_prime_power(std::uint64_t u, std::uint64_t h) {
    std::uint64_t r = 1;
    while (h % u == 0) { h /= u; r *= u; }
    return {r, h};
}

// If h is a prime power u^n with n >= 1, return {u, n}; otherwise {0, 0}.
inline std::pair<std::uint64_t, unsigned> as_prime_power(std::uint64_t h) {
    if (h < 2) return {0, 0};
    std::uint64_t u = h;
    for (std::uint64_t d = 2; d * d <= h; ++d) {
        if (h % d == 0) { u = d; break; }
    }
    unsigned n = 0;
    std::uint64_t rest = h;
    while (rest % u == 0) { rest /= u; ++n; }
    if (rest != 1) return {0, 0};
    return {u, n};
}

} // namespace onp
