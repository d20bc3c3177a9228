#pragma once

// Constructive content of the a^n + bn theorem: for gcd(b, m) = 1 and any
// target residue, produce n in [1, m^2] with a^n + b*n = r (mod m), with a
// replayable certificate, a brute-force oracle, and a generic coverage engine.

#include "anbn/arith.hpp"
#include "anbn/sequences.hpp"

#include <optional>
#include <string>
#include <vector>

namespace anbn {

struct WitnessQuery {
    Int a, b, m, target_residue;

    // Enforces m >= 1 and gcd(b, m) = 1; the target is kept as given and
    // interpreted mod m.
    WitnessQuery(Int a, Int b, Int m, Int target_residue);
};

// One induction level of the coprime construction: modulus m_level is split
// as reduced_modulus * largest_prime, k is the witness inherited from the
// reduced modulus, q in [0, largest_prime) is the lift multiplier.
struct TraceFrame {
    Int m_level, largest_prime, reduced_modulus, k, q;
};

struct WitnessCertificate {
    WitnessQuery query;
    Int n;
    Int u, v, s;  // m = u*v split from proof part (ii); u = 1, v = m when gcd(a, m) = 1
    std::vector<TraceFrame> frames;
};

// Proof part (i): requires gcd(a*b, m) = 1. Returns (n, trace); base case
// m = 1 gives n = 1 with an empty trace.
std::pair<Int, std::vector<TraceFrame>> witness_coprime(const Int& a, const Int& b,
                                                        const Int& m, const Int& r);

// Full construction for any a with gcd(b, m) = 1.
WitnessCertificate witness(const WitnessQuery& query);

struct VerifyResult {
    bool ok = false;
    std::string reason;  // empty when ok
};

// Re-derives n from the trace and checks every certificate invariant by
// direct modular evaluation. Never trusts the stored n.
VerifyResult verify_certificate(const WitnessCertificate& cert);

// Least n <= cap with a^n + b*n = r (mod m), maintained incrementally with
// one modular multiplication per step.
std::optional<Int> brute_witness(const Int& a, const Int& b, const Int& m, const Int& r,
                                 const Int& cap);

struct CoverageReport {
    SequenceSpec spec;
    Int m;
    bool covered = false;
    std::optional<std::uint64_t> first_cover_index;  // least covering prefix length
    std::uint64_t cap = 0;
    std::vector<Int> residues_missing;  // empty iff covered
};

// Least N <= cap such that terms 1..N of the sequence hit every residue
// class mod m. Terms are evaluated mod m only (incremental recurrences where
// available). Requires cap >= m.
CoverageReport coverage_index(const SequenceSpec& spec, const Int& m, std::uint64_t cap);

}  // namespace anbn
