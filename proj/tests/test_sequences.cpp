#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "anbn/sequences.hpp"

#include <cmath>
#include <random>

using namespace anbn;

namespace {

// Independent oracle: count partitions of n into parts <= maxp by recursion.
std::uint64_t partition_oracle(int n, int maxp) {
    if (n == 0) return 1;
    if (n < 0 || maxp == 0) return 0;
    return partition_oracle(n - maxp, maxp) + partition_oracle(n, maxp - 1);
}

// Independent oracle: count partitions of n into distinct parts <= maxp.
std::uint64_t strict_partition_oracle(int n, int maxp) {
    if (n == 0) return 1;
    if (n < 0 || maxp == 0) return 0;
    return strict_partition_oracle(n - maxp, maxp - 1) + strict_partition_oracle(n, maxp - 1);
}

// Independent oracle: count set partitions of {1..n} by enumerating
// restricted growth strings.
std::uint64_t bell_oracle_rec(int pos, int n, int max_used) {
    if (pos == n) return 1;
    std::uint64_t total = 0;
    for (int c = 0; c <= max_used + 1; ++c)
        total += bell_oracle_rec(pos + 1, n, std::max(max_used, c));
    return total;
}
std::uint64_t bell_oracle(int n) { return n == 0 ? 1 : bell_oracle_rec(1, n, 0); }

// Independent oracle: count Dyck paths of length 2n by DP over prefix height.
std::uint64_t dyck_oracle(int n) {
    std::vector<std::uint64_t> h(2 * n + 2, 0);
    h[0] = 1;
    for (int step = 0; step < 2 * n; ++step) {
        std::vector<std::uint64_t> nh(2 * n + 2, 0);
        for (int y = 0; y <= 2 * n; ++y) {
            if (!h[y]) continue;
            nh[y + 1] += h[y];
            if (y > 0) nh[y - 1] += h[y];
        }
        h = std::move(nh);
    }
    return h[0];
}

}  // namespace

TEST_CASE("partition tables match small values and the enumeration oracle") {
    PartitionTable p(PartitionKind::unrestricted, 40);
    PartitionTable q(PartitionKind::strict, 40);
    CHECK(p.at(0) == 1);
    CHECK(p.at(5) == 7);
    CHECK(q.at(5) == 3);
    CHECK(q.at(0) == 1);
    CHECK(q.at(1) == 1);
    for (int n = 0; n <= 40; ++n) {
        CHECK(p.at(n) == partition_oracle(n, n));
        CHECK(q.at(n) == strict_partition_oracle(n, n));
    }
    CHECK_THROWS_AS(p.at(41), capacity_error);
}

TEST_CASE("partition invariants") {
    PartitionTable p(PartitionKind::unrestricted, 300);
    PartitionTable q(PartitionKind::strict, 300);
    for (int n = 1; n <= 300; ++n) {
        CHECK(p.at(n) >= p.at(n - 1));  // monotone
        CHECK(q.at(n) <= p.at(n));      // strict partitions are partitions
        CHECK(q.at(n) >= 1);
    }
    // pentagonal recurrence replayed directly against the built table
    for (int n = 1; n <= 300; ++n) {
        Int s = 0;
        for (int k = 1;; ++k) {
            long g1 = static_cast<long>(k) * (3 * k - 1) / 2;
            long g2 = static_cast<long>(k) * (3 * k + 1) / 2;
            if (g1 > n) break;
            int sign = (k % 2 == 1) ? 1 : -1;
            s += sign * p.at(n - g1);
            if (g2 <= n) s += sign * p.at(n - g2);
        }
        CHECK(p.at(n) == s);
    }
}

TEST_CASE("partition_residues matches the exact table") {
    PartitionTable q(PartitionKind::strict, 500);
    auto res = partition_residues(PartitionKind::strict, 500, 42);
    REQUIRE(res.size() == 501);
    for (int n = 0; n <= 500; ++n) CHECK(res[n] == mpz_get_ui(Int(q.at(n) % 42).get_mpz_t()));
    auto res_p = partition_residues(PartitionKind::unrestricted, 200, 7);
    PartitionTable p(PartitionKind::unrestricted, 200);
    for (int n = 0; n <= 200; ++n) CHECK(res_p[n] == mpz_get_ui(Int(p.at(n) % 7).get_mpz_t()));
}

TEST_CASE("q(8400) = 31 (mod 42)") {
    auto res = partition_residues(PartitionKind::strict, 8400, 42);
    CHECK(res[8400] == 31);
    // and no smaller index hits residue 31
    for (int n = 0; n < 8400; ++n) CHECK(res[n] != 31);
}

TEST_CASE("bell numbers match the set-partition oracle") {
    CHECK(bell(0) == 1);
    CHECK(bell(1) == 1);
    CHECK(bell(2) == 2);
    CHECK(bell(3) == 5);
    CHECK(bell(5) == 52);
    for (int n = 0; n <= 8; ++n) CHECK(bell(n) == bell_oracle(n));
    CHECK(bell(25) == Int("4638590332229999353"));
    CHECK_THROWS_AS(bell(5001), capacity_error);
}

TEST_CASE("central binomial and catalan") {
    CHECK(central_binomial(0) == 1);
    CHECK(central_binomial(1) == 2);
    CHECK(central_binomial(4) == 70);
    CHECK(catalan(0) == 1);
    CHECK(catalan(1) == 1);
    CHECK(catalan(3) == 5);
    for (int n = 0; n <= 15; ++n) CHECK(catalan(n) == dyck_oracle(n));
    for (unsigned n = 0; n <= 200; ++n) {
        Int b1, b2;
        mpz_bin_uiui(b1.get_mpz_t(), 2 * n, n);
        mpz_bin_uiui(b2.get_mpz_t(), 2 * n, n + 1);
        CHECK(central_binomial(n) == b1);
        CHECK(catalan(n) == b1 - b2);
        CHECK(catalan(n) * (n + 1) == b1);
    }
}

TEST_CASE("seq_term examples") {
    CHECK(seq_term(SequenceSpec::of(SeqKind::PrimeMinusN), 4) == 3);   // 7 - 4
    CHECK(seq_term(SequenceSpec::of(SeqKind::NTimesPrime), 3) == 15);  // 3 * 5
    CHECK(seq_term(SequenceSpec::of(SeqKind::CentralBinomPlusN), 2) == 8);
    CHECK(seq_term(SequenceSpec::of(SeqKind::CentralBinomMinusN), 2) == 4);
    CHECK(seq_term(SequenceSpec::of(SeqKind::CatalanPlusN), 3) == 8);
    CHECK(seq_term(SequenceSpec::of(SeqKind::CatalanMinusN), 3) == 2);
    CHECK(seq_term(SequenceSpec::exp_linear(2, -1), 5) == 27);
    CHECK(seq_term(SequenceSpec::exp_linear(0, 1), 3) == 3);
}

TEST_CASE("seq_term_mod equals exact term reduced") {
    std::mt19937_64 rng(7);
    std::vector<SequenceSpec> specs = {
        SequenceSpec::exp_linear(2, -1), SequenceSpec::exp_linear(-3, 5),
        SequenceSpec::exp_linear(0, 1),  SequenceSpec::of(SeqKind::PrimeMinusN),
        SequenceSpec::of(SeqKind::NTimesPrime), SequenceSpec::of(SeqKind::CentralBinomPlusN),
        SequenceSpec::of(SeqKind::CentralBinomMinusN), SequenceSpec::of(SeqKind::CatalanPlusN),
        SequenceSpec::of(SeqKind::CatalanMinusN)};
    for (const auto& spec : specs)
        for (int i = 0; i < 200; ++i) {
            std::uint64_t n = rng() % 120 + 1;
            Int m(static_cast<unsigned long>(rng() % 997 + 1));
            CHECK(seq_term_mod(spec, n, m) == mod_reduce(seq_term(spec, n), m));
        }
}

TEST_CASE("hardy-ramanujan leading order tracks the exact values") {
    PartitionTable p(PartitionKind::unrestricted, 2000);
    PartitionTable q(PartitionKind::strict, 2000);
    for (std::uint64_t n : {100ULL, 500ULL, 1000ULL, 2000ULL}) {
        double est_p = hardy_ramanujan_estimate(n, PartitionKind::unrestricted);
        double est_q = hardy_ramanujan_estimate(n, PartitionKind::strict);
        double exact_p = mpz_get_d(p.at(n).get_mpz_t());
        double exact_q = mpz_get_d(q.at(n).get_mpz_t());
        CHECK(est_p / exact_p == doctest::Approx(1.0).epsilon(0.15));
        CHECK(est_q / exact_q == doctest::Approx(1.0).epsilon(0.15));
    }
    // the relative error shrinks as n grows
    double r100 = hardy_ramanujan_estimate(100, PartitionKind::unrestricted) /
                  mpz_get_d(p.at(100).get_mpz_t());
    double r2000 = hardy_ramanujan_estimate(2000, PartitionKind::unrestricted) /
                   mpz_get_d(p.at(2000).get_mpz_t());
    CHECK(std::abs(r2000 - 1.0) < std::abs(r100 - 1.0));
}

TEST_CASE("capacity limits") {
    CHECK_THROWS_AS(PartitionTable(PartitionKind::unrestricted, 600000), capacity_error);
    CHECK_THROWS_AS(partition_residues(PartitionKind::strict, 6'000'000, 42), capacity_error);
}
