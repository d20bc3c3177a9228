#pragma once

// Exact integer and modular arithmetic kernels shared by every other module.
// All values are GMP integers; no floating point enters any function here.

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace anbn {

using Int = mpz_class;

struct arith_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Thrown when an input exceeds a configured table/sieve/factorization bound.
struct capacity_error : arith_error {
    using arith_error::arith_error;
};

// Reduce a into the canonical residue range [0, m). m >= 1.
Int mod_reduce(const Int& a, const Int& m);

// base^exp mod modulus, exp >= 0, modulus >= 1. Negative bases are reduced
// into [0, modulus) first; exp = 0 gives 1 mod modulus.
Int pow_mod(const Int& base, const Int& exp, const Int& modulus);

// Multiset of (prime, exponent) pairs, ascending by prime. Empty iff n = 1.
struct Factorization {
    std::vector<std::pair<Int, unsigned>> factors;

    Int value() const;  // product reconstruction
    bool empty() const { return factors.empty(); }
};

inline const Int& default_factor_bound() {
    static const Int bound("1000000000000");  // 10^12
    return bound;
}

// Trial division with a mod-30 wheel. Throws capacity_error("too large to
// factor") when n exceeds the bound.
Factorization factorize(const Int& n, const Int& bound = default_factor_bound());

// phi(n) computed from the factorization of n.
Int euler_phi(const Int& n);

// Inverse of a modulo m, in [0, m). Throws arith_error("not invertible")
// when gcd(a, m) != 1.
Int mod_inverse(const Int& a, const Int& modulus);

struct PrpConfig {
    int rounds = 32;              // random strong-test rounds above 2^64
    unsigned long seed = 0x5eedbeefUL;
};

// Strong probable-prime test. Deterministic (fixed 12-witness set) for
// n < 2^64; above that, a base-2 strong test plus cfg.rounds seeded random
// rounds. Never returns false for a prime.
bool is_probable_prime(const Int& n, const PrpConfig& cfg = {});

// True iff the test for this magnitude is probabilistic (n >= 2^64).
bool primality_is_probabilistic(const Int& n);

struct PerfectPowerWitness {
    Int base;            // minimal base, >= 2
    unsigned exponent;   // maximal exponent, >= 2
};

// Maximal-exponent representation n = base^exponent with exponent >= 2,
// or nullopt. Prime exponents are tested by exact k-th roots; composite
// exponents follow by recursing on the root.
std::optional<PerfectPowerWitness> is_perfect_power(const Int& n);

// Ascending primes <= limit. Backed by a cached sieve that grows on demand;
// throws capacity_error beyond the hard sieve cap.
std::vector<std::uint64_t> primes_up_to(std::uint64_t limit);

// 1-based: nth_prime(1) = 2.
std::uint64_t nth_prime(std::uint64_t n);

// Immutable snapshot of the sieve, for hot loops that should not copy.
// The vector holds all primes up to at least `limit` (possibly more).
std::shared_ptr<const std::vector<std::uint64_t>> prime_snapshot(std::uint64_t limit);

}  // namespace anbn
