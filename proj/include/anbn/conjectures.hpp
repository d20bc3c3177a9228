#pragma once

// One checker per conjecture family: coverage checks, representation
// searches, perfect-power scans, prime searches. Each instance yields a
// ConjectureRecord; counterexamples are exhaustive disproofs within the
// clause's own bound, never a mere budget cap.

#include "anbn/arith.hpp"
#include "anbn/sequences.hpp"
#include "anbn/witness.hpp"

#include <json.hpp>

#include <cstdint>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

namespace anbn {

enum class Status { verified, counterexample, exhausted_cap, indeterminate };

std::string to_string(Status s);
Status status_from_string(const std::string& s);

struct ConjectureRecord {
    std::string conjecture_id;
    std::int64_t parameter = 0;  // the n or m instance
    nlohmann::json witness;      // structured payload, clause-specific
    Status status = Status::verified;
    double elapsed_ms = 0.0;
    int prp_rounds = 0;  // nonzero iff a probabilistic primality test was used
};

// Shared state for a verification run: PRP policy and lazily built
// read-only tables. Safe to share across worker threads; prewarm() sizes the
// tables up front so workers never rebuild.
class CheckerContext {
  public:
    PrpConfig prp{};
    bool long_mode = false;
    bool strict_phi = false;  // Conjecture 1.8: require each totient fraction integral

    std::shared_ptr<const PartitionTable> p_table(std::size_t need);
    std::shared_ptr<const PartitionTable> q_table(std::size_t need);

  private:
    std::mutex mu_;
    std::shared_ptr<const PartitionTable> p_, q_;
};

// Representation clauses, with their per-clause applicability
// thresholds (least n claimed).
enum class Clause {
    c13i_first,   // n > 1:  k < n with n - k + 2^k prime
    c13i_second,  // n > 3:  k < n with n + k + 2^k prime
    c13ii,        // n > 3:  n = p + (2^k - k) + (2^m - m)
    c16ii,        // n > 3:  n = p + p(k) + p(m)
    c16iii,       // n > 4:  n = p + 2^k + p(m)
    c17ii_plus,   // n > 1:  q(k) q(n-k) + 1 prime, 0 < k < n
    c17ii_minus,  // n > 5:  q(k) q(n-k) - 1 prime, 0 < k < n
    c17iii,       // n > 1:  p(k)^2 + q(n-k)^2 (or p(k) + q(n-k)) prime
    c18i_plus,    // n > 9:  n = k + m with 2^(phi(k)/2 + phi(m)/6) + 3 prime
    c18i_minus,   // n > 13: same with - 3
    c18ii_plus,   // n > 25: 3 * 2^(phi(k)/2 + phi(m)/8) + 1 prime
    c18ii_minus,  // n > 14: 3 * 2^(phi(k)/2 + phi(m)/12) - 1 prime
};

const char* clause_id(Clause c);
std::int64_t clause_threshold(Clause c);  // least applicable n

ConjectureRecord representation_search(Clause clause, std::int64_t n, CheckerContext& ctx);

// Coverage families. sign is +1 or -1 (the b of a^n + b*n).
ConjectureRecord check_c11(const Int& a, int sign, std::int64_t m, CheckerContext& ctx);
ConjectureRecord check_c14i(std::int64_t m, CheckerContext& ctx);
ConjectureRecord check_c15i(std::int64_t m, CheckerContext& ctx);
// The covering theorem restated as a finite check: coverage with cap m^2.
ConjectureRecord check_t11_empirical(const Int& a, const Int& b, std::int64_t m,
                                     CheckerContext& ctx);

// Conjecture 1.2 diophantine scan.
struct C12Solution {
    int sign = +1;  // x^n + n or x^n - n
    std::int64_t x = 0, n = 0;
    Int y;
    unsigned m = 0;
};
std::vector<C12Solution> diophantine_scan_c12(std::int64_t x_max, std::int64_t exp_max,
                                              const Int& value_cap);
// Per-x record for the range runner.
ConjectureRecord check_c12_x(std::int64_t x, std::int64_t exp_max, const Int& value_cap,
                             CheckerContext& ctx);

// Perfect-power scans over sequence values.
enum class PowerScanTarget {
    PartitionValues,     // p(n)
    BellValues,          // Bell(n)
    NTimesPrimePlus1,    // n * p_n + 1
    CentralBinomPlusN,
    CentralBinomMinusN,
    CatalanPlusN,
    CatalanMinusN,
};
Int power_scan_value(PowerScanTarget target, std::int64_t n, CheckerContext& ctx);
std::vector<std::pair<std::int64_t, PerfectPowerWitness>> perfect_power_scan(
    PowerScanTarget target, std::int64_t lo, std::int64_t hi, CheckerContext& ctx);
// Per-n records: "1.6i" (p), "1.6i-bell", "1.4ii" (n p_n + 1, n = 3 excluded
// by the clause), "1.5ii" (the four shifts at their thresholds).
ConjectureRecord check_c16i(std::int64_t n, CheckerContext& ctx);
ConjectureRecord check_c16i_bell(std::int64_t n, CheckerContext& ctx);
ConjectureRecord check_c14ii(std::int64_t n, CheckerContext& ctx);
ConjectureRecord check_c15ii(std::int64_t n, CheckerContext& ctx);

// Conjecture 1.7(i) analogue of Newman's conjecture: least n <= cap with
// q(n) = r (mod m).
std::optional<std::int64_t> newman_analogue_least_n(std::uint64_t m, std::uint64_t r,
                                                    std::int64_t cap);
ConjectureRecord check_c17i(std::uint64_t m, std::uint64_t r, std::int64_t cap,
                            CheckerContext& ctx);

// Independent re-evaluation of a record's witness (direct predicate
// evaluation, not a re-search). Used by verify-report and round-trip tests.
bool replay_record(const ConjectureRecord& rec, CheckerContext& ctx, std::string* why = nullptr);

}  // namespace anbn
