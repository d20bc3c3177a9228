#pragma once

// Checkpointed range execution: one dispatcher, N workers, one writer.
// Records may complete out of order but are emitted in ascending parameter
// order; the checkpoint advances one parameter at a time.

#include "anbn/conjectures.hpp"
#include "anbn/report.hpp"

#include <iosfwd>
#include <string>

namespace anbn {

inline constexpr const char* kToolVersion = "0.1.0";

struct RunConfig {
    std::string command = "conjecture";
    std::string conjecture_id;
    std::int64_t from = 0, to = -1;  // to < from means "use the default range"
    bool long_mode = false;
    bool strict_phi = false;
    int prp_rounds = 32;
    int workers = 1;
    unsigned long seed = 0x5eedbeefUL;
    std::string output_path;      // empty: stdout
    std::string checkpoint_path;  // empty: no checkpointing
    std::string format = "jsonl";

    // family parameters
    Int a = 2;
    int sign = -1;                                        // 1.1
    std::int64_t exp_max = 20;                            // 1.2
    Int value_cap = Int("1000000000000000000000000000000");  // 1.2: 10^30
    std::uint64_t modulus = 42;                           // 1.7i
    std::int64_t cap = 10000;                             // 1.7i scan cap
    std::string target = "p";                             // 1.6i: p | bell

    std::int64_t stop_after = -1;  // test hook: emulate a kill after N parameters
};

// Hash of the RunConfig fields that affect record content. Range, worker
// count, and paths are excluded: they change which records exist, never
// what any record contains.
std::string config_digest(const RunConfig& cfg);

// Least/greatest parameter the default suite runs for a conjecture id.
// Throws arith_error for an unknown id.
std::pair<std::int64_t, std::int64_t> default_range(const std::string& conjecture_id);

// All records for one parameter value (possibly several sub-clause records,
// possibly none below the clause thresholds).
std::vector<ConjectureRecord> produce_records(const RunConfig& cfg, std::int64_t parameter,
                                              CheckerContext& ctx);

// Execute the configured range. Exit codes: 0 all verified, 2 at least one
// counterexample (run aborts at it), 1 usage/capacity errors.
int run_range(const RunConfig& cfg, std::ostream& err);

// Replay every record of a JSON-lines report. Returns true iff all records
// re-validate; counts go to `out`.
bool verify_report_file(const std::string& path, CheckerContext& ctx, std::ostream& out);

}  // namespace anbn
