#include "anbn/arith.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <mutex>

namespace anbn {

Int mod_reduce(const Int& a, const Int& m) {
    if (m < 1) throw arith_error("mod_reduce: modulus must be positive");
    Int r;
    mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

Int pow_mod(const Int& base, const Int& exp, const Int& modulus) {
    if (modulus < 1) throw arith_error("pow_mod: modulus must be positive");
    if (exp < 0) throw arith_error("pow_mod: negative exponent");
    Int b = mod_reduce(base, modulus);
    Int r;
    mpz_powm(r.get_mpz_t(), b.get_mpz_t(), exp.get_mpz_t(), modulus.get_mpz_t());
    return r;
}

Int Factorization::value() const {
    Int v = 1;
    for (const auto& [p, e] : factors) {
        Int pe;
        mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), e);
        v *= pe;
    }
    return v;
}

Factorization factorize(const Int& n, const Int& bound) {
    if (n < 1) throw arith_error("factorize: n must be positive");
    if (n > bound) throw capacity_error("too large to factor");
    Factorization f;
    Int rem = n;
    auto strip = [&](const Int& p) {
        unsigned e = 0;
        while (mpz_divisible_p(rem.get_mpz_t(), p.get_mpz_t())) {
            rem /= p;
            ++e;
        }
        if (e) f.factors.emplace_back(p, e);
    };
    strip(2);
    strip(3);
    strip(5);
    // wheel mod 30 starting at 7
    static const int steps[8] = {4, 2, 4, 2, 4, 6, 2, 6};
    Int p = 7;
    int i = 0;
    while (p * p <= rem) {
        strip(p);
        p += steps[i];
        i = (i + 1) & 7;
    }
    if (rem > 1) f.factors.emplace_back(rem, 1);
    return f;
}

Int euler_phi(const Int& n) {
    Int phi = 1;
    for (const auto& [p, e] : factorize(n).factors) {
        Int pe;
        mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), e - 1);
        phi *= pe * (p - 1);
    }
    return phi;
}

Int mod_inverse(const Int& a, const Int& modulus) {
    if (modulus < 1) throw arith_error("mod_inverse: modulus must be positive");
    Int r;
    if (!mpz_invert(r.get_mpz_t(), a.get_mpz_t(), modulus.get_mpz_t()))
        throw arith_error("not invertible");
    return mod_reduce(r, modulus);
}

namespace {

// One strong (Miller-Rabin) round. n odd, n - 1 = 2^s * d with d odd.
bool strong_round(const Int& n, const Int& a, const Int& d, unsigned long s) {
    Int base = mod_reduce(a, n);
    if (base <= 1) return true;  // uninformative witness
    Int x = pow_mod(base, d, n);
    if (x == 1 || x == n - 1) return true;
    for (unsigned long i = 1; i < s; ++i) {
        x = x * x % n;
        if (x == n - 1) return true;
    }
    return false;
}

}  // namespace

bool primality_is_probabilistic(const Int& n) {
    return mpz_sizeinbase(n.get_mpz_t(), 2) > 64;
}

bool is_probable_prime(const Int& n, const PrpConfig& cfg) {
    if (n < 2) return false;
    static const std::array<unsigned long, 12> small_witnesses = {2,  3,  5,  7,  11, 13,
                                                                  17, 19, 23, 29, 31, 37};
    for (unsigned long p : small_witnesses) {
        if (n == p) return true;
        if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return false;
    }
    Int d = n - 1;
    unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
    d >>= s;
    if (!primality_is_probabilistic(n)) {
        // deterministic below 2^64 with the published 12-witness set
        for (unsigned long a : small_witnesses)
            if (!strong_round(n, Int(a), d, s)) return false;
        return true;
    }
    if (!strong_round(n, 2, d, s)) return false;
    gmp_randclass rng(gmp_randinit_default);
    rng.seed(cfg.seed ^ mpz_get_ui(n.get_mpz_t()));
    for (int i = 0; i < cfg.rounds; ++i) {
        Int a = rng.get_z_range(n - 3) + 2;  // in [2, n-2]
        if (!strong_round(n, a, d, s)) return false;
    }
    return true;
}

std::optional<PerfectPowerWitness> is_perfect_power(const Int& n) {
    if (n < 2) return std::nullopt;
    Int base = n;
    unsigned exponent = 1;
    for (;;) {
        // candidate prime exponents k need 2^k <= base, i.e. k <= floor(log2)
        std::size_t maxk = mpz_sizeinbase(base.get_mpz_t(), 2) - 1;
        if (maxk < 2) break;
        auto primes = prime_snapshot(maxk);
        bool shrunk = false;
        for (std::uint64_t k : *primes) {
            if (k > maxk) break;
            Int root;
            if (mpz_root(root.get_mpz_t(), base.get_mpz_t(), k)) {
                base = root;
                exponent *= static_cast<unsigned>(k);
                shrunk = true;
                break;
            }
        }
        if (!shrunk) break;
    }
    if (exponent < 2) return std::nullopt;
    return PerfectPowerWitness{base, exponent};
}

namespace {

constexpr std::uint64_t kSieveCap = 400'000'000;  // hard cap on the sieve limit

class SieveCache {
  public:
    static SieveCache& instance() {
        static SieveCache c;
        return c;
    }

    std::shared_ptr<const std::vector<std::uint64_t>> ensure_limit(std::uint64_t limit) {
        if (limit > kSieveCap) throw capacity_error("sieve capacity exceeded");
        std::lock_guard<std::mutex> lock(mu_);
        if (limit_ < limit) grow(limit);
        return primes_;
    }

    std::uint64_t nth(std::uint64_t n) {
        if (n == 0) throw arith_error("nth_prime: index is 1-based");
        std::lock_guard<std::mutex> lock(mu_);
        while (primes_->size() < n) {
            // Rosser-style upper bound for p_n, then doubling as fallback
            double dn = static_cast<double>(std::max<std::uint64_t>(n, 6));
            auto guess = static_cast<std::uint64_t>(dn * (std::log(dn) + std::log(std::log(dn)))) + 16;
            std::uint64_t target = std::max({guess, limit_ * 2, std::uint64_t{1024}});
            if (target > kSieveCap) {
                if (limit_ >= kSieveCap) throw capacity_error("sieve capacity exceeded");
                target = kSieveCap;
            }
            grow(target);
        }
        return (*primes_)[n - 1];
    }

  private:
    void grow(std::uint64_t limit) {
        std::vector<bool> composite(limit + 1, false);
        auto next = std::make_shared<std::vector<std::uint64_t>>();
        for (std::uint64_t i = 2; i <= limit; ++i) {
            if (composite[i]) continue;
            next->push_back(i);
            for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = true;
        }
        primes_ = std::move(next);
        limit_ = limit;
    }

    std::mutex mu_;
    std::shared_ptr<const std::vector<std::uint64_t>> primes_ =
        std::make_shared<std::vector<std::uint64_t>>();
    std::uint64_t limit_ = 0;
};

}  // namespace

std::shared_ptr<const std::vector<std::uint64_t>> prime_snapshot(std::uint64_t limit) {
    return SieveCache::instance().ensure_limit(limit);
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t limit) {
    auto snap = prime_snapshot(limit);
    auto end = std::upper_bound(snap->begin(), snap->end(), limit);
    return std::vector<std::uint64_t>(snap->begin(), end);
}

std::uint64_t nth_prime(std::uint64_t n) {
    return SieveCache::instance().nth(n);
}

}  // namespace anbn
