// anbn: witness construction for a^n + b*n residues and a verification
// harness for the companion conjectures. See README.md for usage.

#include "anbn/runner.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace {

using namespace anbn;
using nlohmann::json;

int cmd_witness(const std::string& a, const std::string& b, const std::string& m,
                const std::string& r, const std::string& out_path) {
    WitnessQuery query{Int(a), Int(b), Int(m), Int(r)};
    WitnessCertificate cert = witness(query);
    VerifyResult vr = verify_certificate(cert);
    json j = certificate_to_json(cert);
    j["verified"] = vr.ok;
    if (!vr.ok) j["reason"] = vr.reason;
    if (out_path.empty()) {
        std::cout << j.dump(2) << '\n';
    } else {
        std::ofstream out(out_path, std::ios::trunc);
        out << j.dump() << '\n';
    }
    return vr.ok ? 0 : 1;
}

SequenceSpec parse_seq(const std::string& name, const std::string& a, const std::string& b) {
    if (name == "explinear") return SequenceSpec::exp_linear(Int(a), Int(b));
    if (name == "prime-minus-n") return SequenceSpec::of(SeqKind::PrimeMinusN);
    if (name == "n-times-prime") return SequenceSpec::of(SeqKind::NTimesPrime);
    if (name == "cb-plus-n") return SequenceSpec::of(SeqKind::CentralBinomPlusN);
    if (name == "cb-minus-n") return SequenceSpec::of(SeqKind::CentralBinomMinusN);
    if (name == "catalan-plus-n") return SequenceSpec::of(SeqKind::CatalanPlusN);
    if (name == "catalan-minus-n") return SequenceSpec::of(SeqKind::CatalanMinusN);
    throw arith_error("unknown sequence: " + name);
}

int cmd_cover(const std::string& seq, const std::string& a, const std::string& b,
              const std::string& m, std::uint64_t cap, const std::string& out_path) {
    Int modulus(m);
    if (cap == 0) {
        Int c = modulus * modulus;
        if (!c.fits_ulong_p()) throw capacity_error("coverage cap too large");
        cap = mpz_get_ui(c.get_mpz_t());
    }
    CoverageReport rep = coverage_index(parse_seq(seq, a, b), modulus, cap);
    json j{{"sequence", rep.spec.name()},
           {"m", mpz_to_json(rep.m)},
           {"covered", rep.covered},
           {"cap", rep.cap}};
    j["first_cover_index"] = rep.first_cover_index ? json(*rep.first_cover_index) : json();
    json missing = json::array();
    for (const Int& x : rep.residues_missing) missing.push_back(mpz_to_json(x));
    j["residues_missing"] = missing;
    if (out_path.empty()) {
        std::cout << j.dump(2) << '\n';
    } else {
        std::ofstream out(out_path, std::ios::trunc);
        out << j.dump() << '\n';
    }
    return 0;
}

int cmd_seq(const std::string& kind, const std::string& a, const std::string& b, std::int64_t n,
            const std::string& mod) {
    Int value;
    if (kind == "p")
        value = partition_p(static_cast<std::size_t>(n));
    else if (kind == "q")
        value = strict_partition_q(static_cast<std::size_t>(n));
    else if (kind == "bell")
        value = bell(static_cast<std::size_t>(n));
    else if (kind == "catalan")
        value = catalan(static_cast<std::uint64_t>(n));
    else if (kind == "central-binomial")
        value = central_binomial(static_cast<std::uint64_t>(n));
    else if (kind == "prime")
        value = Int(static_cast<unsigned long>(nth_prime(static_cast<std::uint64_t>(n))));
    else
        value = seq_term(parse_seq(kind, a, b), static_cast<std::uint64_t>(n));
    if (!mod.empty()) value = mod_reduce(value, Int(mod));
    std::cout << value.get_str() << '\n';
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"a^n + b*n residue witnesses and conjecture verification"};
    app.require_subcommand(1);

    // witness
    auto* sc_witness = app.add_subcommand("witness", "construct and verify a residue witness");
    std::string wa = "2", wb = "1", wm = "1", wr = "0", w_out;
    sc_witness->add_option("--a", wa, "base a");
    sc_witness->add_option("--b", wb, "linear coefficient b, coprime to m");
    sc_witness->add_option("--m", wm, "modulus")->required();
    sc_witness->add_option("--r", wr, "target residue");
    sc_witness->add_option("--out", w_out, "write the certificate JSON here");

    // cover
    auto* sc_cover = app.add_subcommand("cover", "first covering prefix of a sequence mod m");
    std::string ca = "2", cb = "1", cm = "1", c_seq = "explinear", c_out;
    std::uint64_t c_cap = 0;
    sc_cover->add_option("--seq", c_seq,
                         "explinear | prime-minus-n | n-times-prime | cb-plus-n | cb-minus-n | "
                         "catalan-plus-n | catalan-minus-n");
    sc_cover->add_option("--a", ca, "explinear base");
    sc_cover->add_option("--b", cb, "explinear linear coefficient");
    sc_cover->add_option("--m", cm, "modulus")->required();
    sc_cover->add_option("--cap", c_cap, "scan limit (default m^2)");
    sc_cover->add_option("--out", c_out, "write the report JSON here");

    // seq
    auto* sc_seq = app.add_subcommand("seq", "evaluate a sequence term exactly");
    std::string sk, sa = "2", sb = "1", s_mod;
    std::int64_t sn = 1;
    sc_seq->add_option("--kind", sk,
                       "p | q | bell | catalan | central-binomial | prime | explinear | "
                       "prime-minus-n | n-times-prime | cb-plus-n | cb-minus-n | "
                       "catalan-plus-n | catalan-minus-n")
        ->required();
    sc_seq->add_option("--a", sa);
    sc_seq->add_option("--b", sb);
    sc_seq->add_option("--n", sn, "index (1-based; p and q accept 0)")->required();
    sc_seq->add_option("--mod", s_mod, "reduce the value modulo this");

    // conjecture
    auto* sc_conj = app.add_subcommand("conjecture", "run a conjecture checker over a range");
    RunConfig cfg;
    std::string ja = "2", jsign = "minus", jcap;
    bool range_set = false;
    sc_conj->add_option("--id", cfg.conjecture_id,
                        "1.1 1.2 1.3i 1.3ii 1.4i 1.4ii 1.5i 1.5ii 1.6i 1.6ii 1.6iii 1.7i "
                        "1.7ii 1.7iii 1.8i 1.8ii")
        ->required();
    auto* from_opt = sc_conj->add_option("--from,--m-from,--n-from", cfg.from, "range start");
    auto* to_opt = sc_conj->add_option("--to,--m-to,--n-to", cfg.to, "range end");
    sc_conj->add_option("--a", ja, "base a (1.1)");
    sc_conj->add_option("--sign", jsign, "minus | plus (1.1)");
    sc_conj->add_option("--exp-max", cfg.exp_max, "exponent bound (1.2)");
    sc_conj->add_option("--value-cap", jcap, "value cap for x^n (1.2, default 10^30)");
    sc_conj->add_option("--m", cfg.modulus, "modulus (1.7i)");
    sc_conj->add_option("--cap", cfg.cap, "scan cap (1.7i)");
    sc_conj->add_option("--target", cfg.target, "p | bell (1.6i)");
    sc_conj->add_flag("--strict-phi", cfg.strict_phi,
                      "require each totient fraction individually integral (1.8)");
    sc_conj->add_option("--workers", cfg.workers, "worker threads");
    sc_conj->add_flag("--long", cfg.long_mode, "allow long-running large-scale ranges");
    sc_conj->add_option("--prp-rounds", cfg.prp_rounds, "random strong-test rounds above 2^64");
    sc_conj->add_option("--seed", cfg.seed, "run-level PRP seed");
    sc_conj->add_option("--out", cfg.output_path, "report file (default stdout)");
    sc_conj->add_option("--checkpoint", cfg.checkpoint_path, "checkpoint file for kill/resume");
    sc_conj->add_option("--format", cfg.format, "jsonl | csv");
    sc_conj->add_option("--stop-after", cfg.stop_after)->group("");  // test hook, hidden

    // verify-report
    auto* sc_verify = app.add_subcommand("verify-report", "replay every record of a report");
    std::string v_in;
    int v_prp_rounds = 32;
    unsigned long v_seed = 0x5eedbeefUL;
    sc_verify->add_option("--in", v_in, "JSON-lines report")->required();
    sc_verify->add_option("--prp-rounds", v_prp_rounds);
    sc_verify->add_option("--seed", v_seed);

    CLI11_PARSE(app, argc, argv);

    try {
        if (sc_witness->parsed()) return cmd_witness(wa, wb, wm, wr, w_out);
        if (sc_cover->parsed()) return cmd_cover(c_seq, ca, cb, cm, c_cap, c_out);
        if (sc_seq->parsed()) return cmd_seq(sk, sa, sb, sn, s_mod);
        if (sc_conj->parsed()) {
            cfg.command = "conjecture";
            cfg.a = Int(ja);
            if (jsign == "minus")
                cfg.sign = -1;
            else if (jsign == "plus")
                cfg.sign = +1;
            else {
                std::cerr << "error: --sign must be minus or plus\n";
                return 1;
            }
            if (!jcap.empty()) cfg.value_cap = Int(jcap);
            range_set = from_opt->count() || to_opt->count();
            if (!range_set) {
                auto [lo, hi] = default_range(cfg.conjecture_id);
                cfg.from = lo;
                cfg.to = hi;
                if (cfg.conjecture_id == "1.7i") {
                    cfg.from = 0;
                    cfg.to = static_cast<std::int64_t>(cfg.modulus) - 1;
                }
            } else {
                if (!from_opt->count()) cfg.from = default_range(cfg.conjecture_id).first;
                if (!to_opt->count()) {
                    std::cerr << "error: malformed range (--to missing)\n";
                    return 1;
                }
            }
            return run_range(cfg, std::cerr);
        }
        if (sc_verify->parsed()) {
            CheckerContext ctx;
            ctx.prp = PrpConfig{v_prp_rounds, v_seed};
            return verify_report_file(v_in, ctx, std::cout) ? 0 : 1;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: invalid integer argument (" << e.what() << ")\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 1;
}
