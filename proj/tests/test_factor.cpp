#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <onp/factor.hpp>
#include <onp/primes.hpp>

using namespace onp;

TEST_CASE("small prime utilities") {
    CHECK(is_prime_u64(2));
    CHECK(is_prime_u64(43));
    CHECK(!is_prime_u64(1));
    CHECK(!is_prime_u64(91)); // 7 * 13
    CHECK(kth_prime(0) == 2);
    CHECK(kth_prime(3) == 7);
    CHECK(kth_prime(13) == 43);
    CHECK(prime_index(2) == 0);
    CHECK(prime_index(3) == 1);
    CHECK(prime_index(11) == 4);
    CHECK(primes_in(2, 43) ==
          std::vector<std::uint64_t>{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43});
    CHECK(primes_in(14, 16).empty());
}

TEST_CASE("prime power decomposition") {
    CHECK(as_prime_power(8) == std::pair<std::uint64_t, unsigned>{2, 3});
    CHECK(as_prime_power(7) == std::pair<std::uint64_t, unsigned>{7, 1});
    CHECK(as_prime_power(121) == std::pair<std::uint64_t, unsigned>{11, 2});
    CHECK(as_prime_power(12).second == 0);
    CHECK(as_prime_power(1).second == 0);
    CHECK(split_prime_power(2, 12) == std::pair<std::uint64_t, std::uint64_t>{4, 3});
    CHECK(split_prime_power(3, 12) == std::pair<std::uint64_t, std::uint64_t>{3, 4});
    CHECK(split_prime_power(5, 12) == std::pair<std::uint64_t, std::uint64_t>{1, 12});
}

TEST_CASE("bignat_pow") {
    CHECK(bignat_pow(BigNat(2), 10) == 1024);
    CHECK(bignat_pow(BigNat(7), 0) == 1);
    CHECK(bignat_pow(BigNat(3), 20) == 3486784401ull);
}

TEST_CASE("probable prime classification") {
    CHECK(is_probable_prime(BigNat(2)));
    CHECK(is_probable_prime(BigNat(3)));
    CHECK(!is_probable_prime(BigNat(1)));
    CHECK(!is_probable_prime(BigNat(561)));   // Carmichael
    CHECK(!is_probable_prime(BigNat(29341))); // Carmichael
    CHECK(is_probable_prime(BigNat("170141183460469231731687303715884105727"))); // 2^127-1
    CHECK(!is_probable_prime(BigNat("170141183460469231731687303715884105725")));
    CHECK(is_probable_prime(BigNat(1000000007)));
}

TEST_CASE("factor returns the full multiset") {
    auto f = factor(BigNat(720)); // 2^4 * 3^2 * 5
    CHECK(f.at(BigNat(2)) == 4);
    CHECK(f.at(BigNat(3)) == 2);
    CHECK(f.at(BigNat(5)) == 1);
    CHECK(f.size() == 3);
    CHECK(factor(BigNat(1)).empty());
    auto g = factor(BigNat(43));
    CHECK(g.at(BigNat(43)) == 1);
    // semiprime beyond the trial bound exercises rho
    BigNat a("2147483647"), b("2305843009213693951"); // M31 * M61
    auto h = factor(a * b);
    CHECK(h.at(a) == 1);
    CHECK(h.at(b) == 1);
}

TEST_CASE("divisors") {
    CHECK(divisors_of(12) == std::vector<std::uint64_t>{1, 2, 3, 4, 6, 12});
    CHECK(divisors_of(1) == std::vector<std::uint64_t>{1});
    CHECK(divisors_of(49) == std::vector<std::uint64_t>{1, 7, 49});
}

TEST_CASE("cyclotomic split of p^d - 1") {
    // product over e | d of Phi_e(p) equals p^d - 1
    for (unsigned p : {2u, 3u, 7u})
        for (std::uint64_t d : {1ull, 2ull, 4ull, 6ull, 12ull}) {
            BigNat prod = 1;
            for (const auto& [e, v] : cyclotomic_values(p, d)) prod *= v;
            CHECK(prod == bignat_pow(BigNat(p), d) - 1);
        }
    // Phi_1(3)=2, Phi_2(3)=4, Phi_4(3)=10
    auto vals = cyclotomic_values(3, 4);
    REQUIRE(vals.size() == 3);
    CHECK(vals.at(1) == 2);   // Phi_1(3) = 3 - 1
    CHECK(vals.at(2) == 4);   // Phi_2(3) = 3 + 1
    CHECK(vals.at(4) == 10);  // Phi_4(3) = 3^2 + 1
}

TEST_CASE("factoring p^d - 1 via the cyclotomic split") {
    auto f = factor_pd_minus_1(3, 4); // 80 = 2^4 * 5
    CHECK(f.at(BigNat(2)) == 4);
    CHECK(f.at(BigNat(5)) == 1);
    auto g = factor_pd_minus_1(2, 11); // 2047 = 23 * 89
    CHECK(g.at(BigNat(23)) == 1);
    CHECK(g.at(BigNat(89)) == 1);
    // the big one used by the p=2, u=23 table row
    auto h = factor_pd_minus_1(2, 22);
    BigNat prod = 1;
    for (const auto& [q, e] : h) {
        CHECK(is_probable_prime(q));
        for (unsigned i = 0; i < e; ++i) prod *= q;
    }
    CHECK(prod == bignat_pow(BigNat(2), 22) - 1);
}
