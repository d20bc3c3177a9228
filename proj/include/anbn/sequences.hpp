#pragma once

// Exact integer kernels for the sequences the conjecture checkers inspect:
// partition p(n), strict partition q(n), Bell numbers, central binomial
// coefficients, Catalan numbers, and the prime sequence.

#include "anbn/arith.hpp"

#include <cstddef>
#include <string>

namespace anbn {

enum class SeqKind {
    ExpLinear,           // a^n + b*n
    PrimeMinusN,         // p_n - n
    NTimesPrime,         // n * p_n
    CentralBinomPlusN,   // binom(2n,n) + n
    CentralBinomMinusN,  // binom(2n,n) - n
    CatalanPlusN,        // C_n + n
    CatalanMinusN,       // C_n - n
};

struct SequenceSpec {
    SeqKind kind = SeqKind::ExpLinear;
    Int a = 0, b = 0;  // ExpLinear coefficients only

    static SequenceSpec exp_linear(Int a, Int b);
    static SequenceSpec of(SeqKind kind);
    std::string name() const;
};

// Exact term of the sequence at index n >= 1.
Int seq_term(const SequenceSpec& spec, std::uint64_t n);

// seq_term(spec, n) reduced into [0, m). ExpLinear goes through pow_mod and
// never materializes a^n.
Int seq_term_mod(const SequenceSpec& spec, std::uint64_t n, const Int& m);

enum class PartitionKind { unrestricted, strict };

// Exact table of p(0..N) or q(0..N). Built once, immutable afterwards.
class PartitionTable {
  public:
    PartitionTable(PartitionKind kind, std::size_t n_max);

    const Int& at(std::size_t n) const;  // capacity_error beyond n_max
    std::size_t capacity() const { return values_.size() - 1; }
    PartitionKind kind() const { return kind_; }

  private:
    PartitionKind kind_;
    std::vector<Int> values_;
};

// Residue table q(0..N) mod m (or p(0..N) mod m) without big-integer values;
// used where only residues matter and N is large.
std::vector<std::uint64_t> partition_residues(PartitionKind kind, std::size_t n_max,
                                              std::uint64_t m);

// Convenience accessors over shared cached tables (grown on demand,
// thread-safe, hard capacity 500000 / 5000 for Bell).
Int partition_p(std::size_t n);
Int strict_partition_q(std::size_t n);
Int bell(std::size_t n);

Int central_binomial(std::uint64_t n);  // (2n)! / (n!)^2
Int catalan(std::uint64_t n);           // central_binomial(n) / (n+1), exact

// Leading-order Hardy-Ramanujan asymptotic for p(n) or q(n). Floating point,
// sanity ratios only; never feeds exact logic.
double hardy_ramanujan_estimate(std::uint64_t n, PartitionKind kind);

}  // namespace anbn
