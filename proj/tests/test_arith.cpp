#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "anbn/arith.hpp"

#include <numeric>
#include <random>

using namespace anbn;

namespace {

// Independent oracle: repeated multiplication.
Int pow_mod_oracle(Int base, std::uint64_t exp, const Int& m) {
    base = mod_reduce(base, m);
    Int r = mod_reduce(1, m);
    for (std::uint64_t i = 0; i < exp; ++i) r = r * base % m;
    return r;
}

// Independent oracle: count integers in [1, n] coprime to n.
std::uint64_t phi_oracle(std::uint64_t n) {
    std::uint64_t count = 0;
    for (std::uint64_t k = 1; k <= n; ++k)
        if (std::gcd(k, n) == 1) ++count;
    return count;
}

// Independent oracle: scan every exponent e <= log2(n) for an exact e-th root.
std::optional<std::pair<std::uint64_t, unsigned>> perfect_power_oracle(std::uint64_t n) {
    std::optional<std::pair<std::uint64_t, unsigned>> best;
    for (unsigned e = 2; (1ULL << e) <= n; ++e) {
        for (std::uint64_t b = 2;; ++b) {
            Int p;
            mpz_ui_pow_ui(p.get_mpz_t(), b, e);
            if (p > n) break;
            if (p == n) best = {b, e};  // later e wins: maximal exponent
        }
    }
    return best;
}

}  // namespace

TEST_CASE("pow_mod examples") {
    CHECK(pow_mod(2, 0, 7) == 1);
    CHECK(pow_mod(5, 3, 1) == 0);
    CHECK(pow_mod(2, 10, 1000) == 24);
    CHECK(pow_mod(-3, 3, 7) == mod_reduce(Int(-27), 7));
    CHECK_THROWS_AS(pow_mod(2, 3, 0), arith_error);
    CHECK_THROWS_AS(pow_mod(2, -1, 5), arith_error);
}

TEST_CASE("pow_mod agrees with the repeated-multiplication oracle") {
    std::mt19937_64 rng(12345);
    for (int i = 0; i < 10000; ++i) {
        Int base(static_cast<long>(static_cast<std::int64_t>(rng() % 2000001) - 1000000));
        std::uint64_t exp = rng() % 300;
        Int m(static_cast<unsigned long>(rng() % 1000000 + 1));
        CHECK(pow_mod(base, Int(static_cast<unsigned long>(exp)), m) ==
              pow_mod_oracle(base, exp, m));
    }
}

TEST_CASE("factorize examples") {
    CHECK(factorize(1).factors.empty());
    auto f12 = factorize(12);
    REQUIRE(f12.factors.size() == 2);
    CHECK(f12.factors[0] == std::pair<Int, unsigned>{2, 2});
    CHECK(f12.factors[1] == std::pair<Int, unsigned>{3, 1});
    auto f29 = factorize(29);
    REQUIRE(f29.factors.size() == 1);
    CHECK(f29.factors[0] == std::pair<Int, unsigned>{29, 1});
    CHECK_THROWS_AS(factorize(0), arith_error);
    CHECK_THROWS_AS(factorize(Int("1000000000001")), capacity_error);
    CHECK_THROWS_WITH_AS(factorize(Int("1000000000001")), "too large to factor", capacity_error);
}

TEST_CASE("factorization invariants for all n <= 1e5") {
    for (unsigned long n = 1; n <= 100000; ++n) {
        auto f = factorize(n);
        CHECK(f.value() == n);
        CHECK(f.empty() == (n == 1));
        for (std::size_t i = 0; i + 1 < f.factors.size(); ++i)
            CHECK(f.factors[i].first < f.factors[i + 1].first);
    }
}

TEST_CASE("euler_phi examples and oracle") {
    CHECK(euler_phi(1) == 1);
    CHECK(euler_phi(12) == 4);
    CHECK(euler_phi(109) == 108);
    for (unsigned long n = 1; n <= 10000; ++n)
        CHECK(euler_phi(n) == phi_oracle(n));
}

TEST_CASE("mod_inverse") {
    CHECK(mod_inverse(1, 5) == 1);
    CHECK(mod_inverse(3, 7) == 5);
    CHECK_THROWS_WITH_AS(mod_inverse(2, 4), "not invertible", arith_error);
    std::mt19937_64 rng(99);
    for (int i = 0; i < 2000; ++i) {
        Int m(static_cast<unsigned long>(rng() % 10000 + 1));
        Int a(static_cast<long>(static_cast<std::int64_t>(rng() % 20001) - 10000));
        Int g;
        mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
        if (g != 1) continue;
        Int inv = mod_inverse(a, m);
        CHECK(inv >= 0);
        CHECK(inv < m);
        CHECK(mod_reduce(inv * a, m) == mod_reduce(1, m));
    }
}

TEST_CASE("is_probable_prime examples") {
    CHECK(is_probable_prime(2));
    CHECK_FALSE(is_probable_prime(561));  // 3 * 11 * 17
    CHECK(is_probable_prime(8191));
    CHECK_FALSE(is_probable_prime(1));
    CHECK_FALSE(is_probable_prime(0));
    CHECK_FALSE(is_probable_prime(-7));
    // strong pseudoprimes to base 2 must still be rejected
    CHECK_FALSE(is_probable_prime(2047));
    CHECK_FALSE(is_probable_prime(Int("3215031751")));
    // a large prime and a large composite above 2^64
    CHECK(is_probable_prime(Int("170141183460469231731687303715884105727")));  // 2^127 - 1
    CHECK_FALSE(is_probable_prime(Int("170141183460469231731687303715884105725")));
}

TEST_CASE("is_probable_prime agrees with trial division up to 1e6") {
    auto primes = primes_up_to(1000000);
    std::vector<char> is_p(1000001, 0);
    for (auto p : primes) is_p[p] = 1;
    for (long n = 0; n <= 1000000; ++n)
        CHECK(is_probable_prime(n) == static_cast<bool>(is_p[n]));
}

TEST_CASE("is_perfect_power examples") {
    auto w27 = is_perfect_power(27);
    REQUIRE(w27);
    CHECK(w27->base == 3);
    CHECK(w27->exponent == 3);
    auto w121 = is_perfect_power(121);
    REQUIRE(w121);
    CHECK(w121->base == 11);
    CHECK(w121->exponent == 2);
    auto w16 = is_perfect_power(16);
    REQUIRE(w16);
    CHECK(w16->base == 2);
    CHECK(w16->exponent == 4);
    CHECK_FALSE(is_perfect_power(12));
    CHECK_FALSE(is_perfect_power(2));
    // 2^30 = (2^15)^2 = ... maximal exponent must win
    auto w = is_perfect_power(Int(1) << 30);
    REQUIRE(w);
    CHECK(w->base == 2);
    CHECK(w->exponent == 30);
}

TEST_CASE("is_perfect_power agrees with the exponent-scan oracle up to 1e4") {
    for (std::uint64_t n = 2; n <= 10000; ++n) {
        auto got = is_perfect_power(Int(static_cast<unsigned long>(n)));
        auto want = perfect_power_oracle(n);
        CHECK(got.has_value() == want.has_value());
        if (got && want) {
            CHECK(got->base == want->first);
            CHECK(got->exponent == want->second);
            Int p;
            mpz_pow_ui(p.get_mpz_t(), got->base.get_mpz_t(), got->exponent);
            CHECK(p == n);
        }
    }
}

TEST_CASE("prime sieve") {
    CHECK(nth_prime(1) == 2);
    CHECK(nth_prime(4) == 7);
    CHECK(nth_prime(29) == 109);
    auto p100 = primes_up_to(100);
    CHECK(p100.size() == 25);
    CHECK(p100.front() == 2);
    CHECK(p100.back() == 97);
    CHECK(primes_up_to(1).empty());
    CHECK_THROWS_AS(primes_up_to(500'000'000), capacity_error);
    CHECK_THROWS_AS(nth_prime(0), arith_error);
}
