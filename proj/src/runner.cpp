#include "anbn/runner.hpp"

#include <atomic>
#include <condition_variable>
#include <ctime>
#include <fstream>
#include <iostream>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

namespace anbn {

using nlohmann::json;

std::string config_digest(const RunConfig& cfg) {
    std::ostringstream os;
    os << "command=" << cfg.command << ";id=" << cfg.conjecture_id << ";a=" << cfg.a.get_str()
       << ";sign=" << cfg.sign << ";exp_max=" << cfg.exp_max
       << ";value_cap=" << cfg.value_cap.get_str() << ";modulus=" << cfg.modulus
       << ";cap=" << cfg.cap << ";target=" << cfg.target << ";prp_rounds=" << cfg.prp_rounds
       << ";seed=" << cfg.seed << ";long=" << cfg.long_mode << ";strict_phi=" << cfg.strict_phi
       << ";format=" << cfg.format;
    return fnv1a_hex(os.str());
}

std::pair<std::int64_t, std::int64_t> default_range(const std::string& id) {
    if (id == "1.1") return {1, 29};
    if (id == "1.2") return {2, 100};
    if (id == "1.3i") return {2, 2000};
    if (id == "1.3ii") return {4, 10000};
    if (id == "1.4i") return {1, 30};
    if (id == "1.4ii") return {1, 10000};
    if (id == "1.5i") return {1, 20};
    if (id == "1.5ii") return {3, 500};
    if (id == "1.6i") return {1, 2000};
    if (id == "1.6ii") return {4, 10000};
    if (id == "1.6iii") return {5, 10000};
    if (id == "1.7i") return {0, 41};  // residues mod the default modulus 42
    if (id == "1.7ii") return {2, 2000};
    if (id == "1.7iii") return {2, 2000};
    if (id == "1.8i") return {10, 1000};
    if (id == "1.8ii") return {15, 1000};
    throw arith_error("unknown conjecture id: " + id);
}

std::vector<ConjectureRecord> produce_records(const RunConfig& cfg, std::int64_t p,
                                              CheckerContext& ctx) {
    const std::string& id = cfg.conjecture_id;
    std::vector<ConjectureRecord> recs;
    if (id == "1.1") {
        if (p >= 1) recs.push_back(check_c11(cfg.a, cfg.sign, p, ctx));
    } else if (id == "1.2") {
        if (p >= 2) recs.push_back(check_c12_x(p, cfg.exp_max, cfg.value_cap, ctx));
    } else if (id == "1.3i") {
        if (p >= 2) recs.push_back(representation_search(Clause::c13i_first, p, ctx));
        if (p >= 4) recs.push_back(representation_search(Clause::c13i_second, p, ctx));
    } else if (id == "1.3ii") {
        if (p >= 4) recs.push_back(representation_search(Clause::c13ii, p, ctx));
    } else if (id == "1.4i") {
        if (p >= 1) recs.push_back(check_c14i(p, ctx));
    } else if (id == "1.4ii") {
        if (p >= 1) recs.push_back(check_c14ii(p, ctx));
    } else if (id == "1.5i") {
        if (p >= 1) recs.push_back(check_c15i(p, ctx));
    } else if (id == "1.5ii") {
        if (p >= 3) recs.push_back(check_c15ii(p, ctx));
    } else if (id == "1.6i") {
        if (p >= 1)
            recs.push_back(cfg.target == "bell" ? check_c16i_bell(p, ctx) : check_c16i(p, ctx));
    } else if (id == "1.6ii") {
        if (p >= 4) recs.push_back(representation_search(Clause::c16ii, p, ctx));
    } else if (id == "1.6iii") {
        if (p >= 5) recs.push_back(representation_search(Clause::c16iii, p, ctx));
    } else if (id == "1.7i") {
        if (p >= 0 && p < static_cast<std::int64_t>(cfg.modulus))
            recs.push_back(check_c17i(cfg.modulus, static_cast<std::uint64_t>(p), cfg.cap, ctx));
    } else if (id == "1.7ii") {
        if (p >= 2) recs.push_back(representation_search(Clause::c17ii_plus, p, ctx));
        if (p >= 6) recs.push_back(representation_search(Clause::c17ii_minus, p, ctx));
    } else if (id == "1.7iii") {
        if (p >= 2) recs.push_back(representation_search(Clause::c17iii, p, ctx));
    } else if (id == "1.8i") {
        if (p >= 10) recs.push_back(representation_search(Clause::c18i_plus, p, ctx));
        if (p >= 14) recs.push_back(representation_search(Clause::c18i_minus, p, ctx));
    } else if (id == "1.8ii") {
        if (p >= 26) recs.push_back(representation_search(Clause::c18ii_plus, p, ctx));
        if (p >= 15) recs.push_back(representation_search(Clause::c18ii_minus, p, ctx));
    } else {
        throw arith_error("unknown conjecture id: " + id);
    }
    return recs;
}

namespace {

void prewarm(const RunConfig& cfg, CheckerContext& ctx) {
    const std::string& id = cfg.conjecture_id;
    auto n = static_cast<std::size_t>(std::max<std::int64_t>(cfg.to, 1));
    if (id == "1.1" || id == "1.4i") nth_prime(static_cast<std::uint64_t>(n));
    if (id == "1.3i" || id == "1.3ii") prime_snapshot(std::max<std::uint64_t>(n, 64));
    if (id == "1.4ii") nth_prime(static_cast<std::uint64_t>(n));
    if (id == "1.6i" && cfg.target != "bell") ctx.p_table(n);
    if (id == "1.6ii" || id == "1.6iii") {
        ctx.p_table(128);
        prime_snapshot(std::max<std::uint64_t>(n, 64));
    }
    if (id == "1.7ii") ctx.q_table(n);
    if (id == "1.7iii") {
        ctx.p_table(n);
        ctx.q_table(n);
    }
}

std::string iso_timestamp() {
    std::time_t t = std::time(nullptr);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
    return buf;
}

constexpr std::int64_t kChunk = 64;

}  // namespace

int run_range(const RunConfig& cfg, std::ostream& err) {
    try {
        default_range(cfg.conjecture_id);  // id validity
    } catch (const arith_error& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    if (cfg.from > cfg.to) {
        err << "error: malformed range [" << cfg.from << ", " << cfg.to << "]\n";
        return 1;
    }
    if ((cfg.conjecture_id == "1.3i" || cfg.conjecture_id == "1.3ii") && cfg.to > 200000 &&
        !cfg.long_mode) {
        err << "error: range beyond 200000 for " << cfg.conjecture_id << " requires --long\n";
        return 1;
    }

    const std::string digest = config_digest(cfg);
    std::int64_t start = cfg.from;
    bool resume = false;
    if (!cfg.checkpoint_path.empty()) {
        if (auto cp = load_checkpoint(cfg.checkpoint_path)) {
            if (cp->conjecture_id != cfg.conjecture_id) {
                err << "error: checkpoint is for conjecture " << cp->conjecture_id << '\n';
                return 1;
            }
            if (cp->config_digest != digest) {
                err << "error: checkpoint config digest mismatch\n";
                return 1;
            }
            start = std::max(start, cp->last_completed_parameter + 1);
            resume = true;
        }
    }

    std::ofstream fout;
    std::ostream* out = &std::cout;
    if (!cfg.output_path.empty()) {
        fout.open(cfg.output_path, resume ? std::ios::app : std::ios::trunc);
        if (!fout) {
            err << "error: cannot open output " << cfg.output_path << '\n';
            return 1;
        }
        out = &fout;
    }

    CheckerContext ctx;
    ctx.prp = PrpConfig{cfg.prp_rounds, cfg.seed};
    ctx.long_mode = cfg.long_mode;
    ctx.strict_phi = cfg.strict_phi;
    try {
        prewarm(cfg, ctx);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }

    const bool csv = cfg.format == "csv";
    json header{{"header", true},
                {"tool", "anbn"},
                {"version", kToolVersion},
                {"command", cfg.command},
                {"conjecture_id", cfg.conjecture_id},
                {"seed", cfg.seed},
                {"prp_rounds", cfg.prp_rounds},
                {"strict_phi", cfg.strict_phi},
                {"long", cfg.long_mode},
                {"config_digest", digest},
                {"timestamp", iso_timestamp()},
                {"from", start},
                {"to", cfg.to}};
    if (csv) {
        *out << "# " << header.dump() << '\n';
        if (!resume) *out << record_csv_header() << '\n';
    } else {
        *out << header.dump() << '\n';
    }

    if (start > cfg.to) return 0;

    std::atomic<std::int64_t> next{start};
    std::atomic<bool> stop{false};
    std::mutex mu;
    std::condition_variable cv;
    std::map<std::int64_t, std::vector<ConjectureRecord>> done;
    std::exception_ptr worker_error;

    auto work = [&] {
        for (;;) {
            if (stop.load()) return;
            std::int64_t lo = next.fetch_add(kChunk);
            if (lo > cfg.to) return;
            std::int64_t hi = std::min(cfg.to, lo + kChunk - 1);
            for (std::int64_t p = lo; p <= hi; ++p) {
                if (stop.load()) return;
                std::vector<ConjectureRecord> recs;
                try {
                    recs = produce_records(cfg, p, ctx);
                } catch (...) {
                    std::lock_guard<std::mutex> lk(mu);
                    if (!worker_error) worker_error = std::current_exception();
                    stop.store(true);
                    cv.notify_all();
                    return;
                }
                {
                    std::lock_guard<std::mutex> lk(mu);
                    done[p] = std::move(recs);
                }
                cv.notify_all();
            }
        }
    };

    int nworkers = std::max(1, cfg.workers);
    std::vector<std::thread> pool;
    pool.reserve(nworkers);
    for (int i = 0; i < nworkers; ++i) pool.emplace_back(work);

    int exit_code = 0;
    std::int64_t emitted_params = 0;
    for (std::int64_t p = start; p <= cfg.to; ++p) {
        std::unique_lock<std::mutex> lk(mu);
        cv.wait(lk, [&] { return done.count(p) != 0 || worker_error; });
        if (worker_error) break;
        auto recs = std::move(done[p]);
        done.erase(p);
        lk.unlock();

        for (const ConjectureRecord& rec : recs) {
            if (csv)
                *out << record_to_csv(rec) << '\n';
            else
                *out << record_to_json(rec).dump() << '\n';
            if (rec.status == Status::counterexample) {
                exit_code = 2;
                err << "COUNTEREXAMPLE " << rec.conjecture_id << " at parameter "
                    << rec.parameter << ": " << rec.witness.dump() << '\n';
            }
        }
        out->flush();
        if (!cfg.checkpoint_path.empty())
            save_checkpoint(cfg.checkpoint_path, Checkpoint{cfg.conjecture_id, p, digest});
        ++emitted_params;
        if (exit_code == 2) break;  // abort the run at the first counterexample
        if (cfg.stop_after >= 0 && emitted_params >= cfg.stop_after) break;
    }

    stop.store(true);
    cv.notify_all();
    for (auto& t : pool) t.join();
    if (worker_error) {
        try {
            std::rethrow_exception(worker_error);
        } catch (const std::exception& e) {
            err << "error: " << e.what() << '\n';
        }
        return 1;
    }
    return exit_code;
}

bool verify_report_file(const std::string& path, CheckerContext& ctx, std::ostream& out) {
    std::ifstream in(path);
    if (!in) {
        out << "error: cannot open report " << path << '\n';
        return false;
    }
    std::size_t checked = 0, failed = 0;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        json j = json::parse(line);
        if (j.contains("header")) continue;
        ConjectureRecord rec = record_from_json(j);
        std::string why;
        ++checked;
        if (!replay_record(rec, ctx, &why)) {
            ++failed;
            out << "FAIL " << rec.conjecture_id << " parameter " << rec.parameter << ": " << why
                << '\n';
        }
    }
    out << "verify-report: " << checked - failed << "/" << checked << " records re-validated\n";
    return failed == 0;
}

}  // namespace anbn
