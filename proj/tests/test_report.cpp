#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "anbn/runner.hpp"

#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

using namespace anbn;
using nlohmann::json;

namespace {

std::filesystem::path temp_file(const std::string& stem) {
    return std::filesystem::temp_directory_path() / ("anbn_test_" + stem);
}

// All non-header records of a JSON-lines report.
std::vector<ConjectureRecord> read_records(const std::filesystem::path& p) {
    std::ifstream in(p);
    REQUIRE(in.good());
    std::vector<ConjectureRecord> recs;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        json j = json::parse(line);
        if (j.contains("header")) continue;
        recs.push_back(record_from_json(j));
    }
    return recs;
}

// Content key ignoring elapsed_ms (timing is never part of record identity).
std::string record_key(const ConjectureRecord& r) {
    return r.conjecture_id + "|" + std::to_string(r.parameter) + "|" + r.witness.dump() + "|" +
           to_string(r.status) + "|" + std::to_string(r.prp_rounds);
}

std::multiset<std::string> record_keys(const std::vector<ConjectureRecord>& recs) {
    std::multiset<std::string> keys;
    for (const auto& r : recs) keys.insert(record_key(r));
    return keys;
}

}  // namespace

TEST_CASE("integer JSON encoding") {
    CHECK(mpz_to_json(Int(42)).is_number_integer());
    CHECK(mpz_to_json(Int(-7)) == -7);
    Int big = Int(1) << 80;
    json jb = mpz_to_json(big);
    CHECK(jb.is_string());
    CHECK(mpz_from_json(jb) == big);
    CHECK(mpz_from_json(mpz_to_json(-big)) == -big);
    CHECK(mpz_from_json(json::parse("18446744073709551615")) == Int("18446744073709551615"));
    CHECK(mpz_from_json(json(123)) == 123);
}

TEST_CASE("record JSON round trip") {
    ConjectureRecord rec;
    rec.conjecture_id = "1.3ii";
    rec.parameter = 97;
    rec.witness = {{"p", 89}, {"k", 2}, {"m", 3}};
    rec.status = Status::verified;
    rec.elapsed_ms = 1.25;
    rec.prp_rounds = 32;
    json j = record_to_json(rec);
    CHECK(j.size() == 6);  // exactly the contract fields
    for (const char* key :
         {"conjecture_id", "parameter", "witness", "status", "elapsed_ms", "prp_rounds"})
        CHECK(j.contains(key));
    ConjectureRecord back = record_from_json(j);
    CHECK(back.conjecture_id == rec.conjecture_id);
    CHECK(back.parameter == rec.parameter);
    CHECK(back.witness == rec.witness);
    CHECK(back.status == rec.status);
    CHECK(back.elapsed_ms == rec.elapsed_ms);
    CHECK(back.prp_rounds == rec.prp_rounds);
}

TEST_CASE("status strings") {
    for (Status s : {Status::verified, Status::counterexample, Status::exhausted_cap,
                     Status::indeterminate})
        CHECK(status_from_string(to_string(s)) == s);
    CHECK_THROWS_AS(status_from_string("nope"), arith_error);
}

TEST_CASE("csv projection") {
    CHECK(record_csv_header() == "conjecture_id,parameter,status,elapsed_ms,prp_rounds,witness");
    ConjectureRecord rec;
    rec.conjecture_id = "1.7i";
    rec.parameter = 5;
    rec.witness = {{"note", "say \"hi\""}};
    rec.status = Status::exhausted_cap;
    std::string row = record_to_csv(rec);
    CHECK(row.substr(0, 5) == "1.7i,");
    CHECK(row.find("exhausted_cap") != std::string::npos);
    CHECK(row.find(R"(\""hi\"")") != std::string::npos);  // quotes doubled inside the cell
}

TEST_CASE("certificate JSON keeps the contract field names and round trips") {
    WitnessCertificate cert = witness(WitnessQuery{2, 3, 20, 7});
    json j = certificate_to_json(cert);
    for (const char* key : {"a", "b", "m", "r", "n", "u", "v", "s", "frames"})
        CHECK(j.contains(key));
    CHECK(j.size() == 9);
    for (const auto& f : j["frames"]) {
        CHECK(f.size() == 5);
        for (const char* key : {"m_level", "largest_prime", "m0", "k", "q"}) CHECK(f.contains(key));
    }
    WitnessCertificate back = certificate_from_json(j);
    CHECK(back.n == cert.n);
    CHECK(back.u == cert.u);
    CHECK(back.frames.size() == cert.frames.size());
    CHECK(verify_certificate(back).ok);
}

TEST_CASE("checkpoint save and load") {
    auto path = temp_file("cp.json");
    std::filesystem::remove(path);
    CHECK_FALSE(load_checkpoint(path.string()).has_value());
    save_checkpoint(path.string(), Checkpoint{"1.3i", 57, "0123456789abcdef"});
    auto cp = load_checkpoint(path.string());
    REQUIRE(cp.has_value());
    CHECK(cp->conjecture_id == "1.3i");
    CHECK(cp->last_completed_parameter == 57);
    CHECK(cp->config_digest == "0123456789abcdef");
    std::filesystem::remove(path);
}

TEST_CASE("config digest covers content-affecting knobs only") {
    RunConfig a;
    a.conjecture_id = "1.3i";
    RunConfig b = a;
    b.from = 100;
    b.to = 5000;
    b.workers = 8;
    b.output_path = "elsewhere.jsonl";
    b.checkpoint_path = "cp";
    b.stop_after = 3;
    CHECK(config_digest(a) == config_digest(b));  // resuming into a larger range is allowed

    RunConfig c = a;
    c.seed = 1;
    CHECK(config_digest(a) != config_digest(c));
    RunConfig d = a;
    d.conjecture_id = "1.3ii";
    CHECK(config_digest(a) != config_digest(d));
    RunConfig e = a;
    e.strict_phi = true;
    CHECK(config_digest(a) != config_digest(e));
}

TEST_CASE("default ranges") {
    CHECK(default_range("1.1") == std::pair<std::int64_t, std::int64_t>{1, 29});
    CHECK(default_range("1.8ii") == std::pair<std::int64_t, std::int64_t>{15, 1000});
    CHECK_THROWS_AS(default_range("2.1"), arith_error);
}

TEST_CASE("run_range produces ordered verified records and a replayable report") {
    RunConfig cfg;
    cfg.conjecture_id = "1.4ii";
    cfg.from = 1;
    cfg.to = 50;
    auto out = temp_file("c14ii.jsonl");
    cfg.output_path = out.string();
    std::ostringstream err;
    CHECK(run_range(cfg, err) == 0);
    CHECK(err.str().empty());

    std::ifstream in(out);
    std::string first;
    std::getline(in, first);
    json header = json::parse(first);
    CHECK(header.at("header") == true);
    CHECK(header.at("tool") == "anbn");
    CHECK(header.at("version") == kToolVersion);
    CHECK(header.at("config_digest") == config_digest(cfg));
    CHECK(header.contains("seed"));
    CHECK(header.contains("timestamp"));

    auto recs = read_records(out);
    REQUIRE(recs.size() == 50);
    for (std::size_t i = 0; i < recs.size(); ++i) {
        CHECK(recs[i].parameter == static_cast<std::int64_t>(i + 1));
        CHECK(recs[i].status == Status::verified);
    }

    CheckerContext ctx;
    std::ostringstream vout;
    CHECK(verify_report_file(out.string(), ctx, vout));
    CHECK(vout.str().find("50/50 records re-validated") != std::string::npos);
    std::filesystem::remove(out);
}

TEST_CASE("worker count does not change the emitted records") {
    auto out1 = temp_file("w1.jsonl"), out4 = temp_file("w4.jsonl");
    for (const auto& [path, workers] : {std::pair{out1, 1}, std::pair{out4, 4}}) {
        RunConfig cfg;
        cfg.conjecture_id = "1.3ii";
        cfg.from = 4;
        cfg.to = 1200;
        cfg.workers = workers;
        cfg.output_path = path.string();
        std::ostringstream err;
        CHECK(run_range(cfg, err) == 0);
    }
    auto r1 = read_records(out1), r4 = read_records(out4);
    REQUIRE(r1.size() == r4.size());
    for (std::size_t i = 0; i < r1.size(); ++i) CHECK(record_key(r1[i]) == record_key(r4[i]));
    std::filesystem::remove(out1);
    std::filesystem::remove(out4);
}

TEST_CASE("kill and resume reproduces the uninterrupted run") {
    RunConfig full;
    full.conjecture_id = "1.3i";
    full.from = 2;
    full.to = 90;
    auto out_full = temp_file("full.jsonl");
    full.output_path = out_full.string();
    std::ostringstream err;
    REQUIRE(run_range(full, err) == 0);

    auto out_part = temp_file("part.jsonl");
    auto cp_path = temp_file("part.cp");
    std::filesystem::remove(out_part);
    std::filesystem::remove(cp_path);
    RunConfig part = full;
    part.output_path = out_part.string();
    part.checkpoint_path = cp_path.string();
    part.stop_after = 30;  // emulate a kill mid-run
    REQUIRE(run_range(part, err) == 0);
    auto partial = read_records(out_part);
    CHECK(partial.back().parameter == 31);  // parameters 2..31

    auto cp = load_checkpoint(cp_path.string());
    REQUIRE(cp.has_value());
    CHECK(cp->last_completed_parameter == 31);

    part.stop_after = -1;
    REQUIRE(run_range(part, err) == 0);  // resumes and appends
    auto resumed = read_records(out_part);
    CHECK(record_keys(resumed) == record_keys(read_records(out_full)));

    CheckerContext ctx;
    std::ostringstream vout;
    CHECK(verify_report_file(out_part.string(), ctx, vout));

    std::filesystem::remove(out_full);
    std::filesystem::remove(out_part);
    std::filesystem::remove(cp_path);
}

TEST_CASE("checkpoint refusal on config mismatch") {
    auto cp_path = temp_file("bad.cp");
    RunConfig cfg;
    cfg.conjecture_id = "1.3i";
    cfg.from = 2;
    cfg.to = 20;
    cfg.checkpoint_path = cp_path.string();

    save_checkpoint(cp_path.string(), Checkpoint{"1.3i", 10, "feedfacefeedface"});
    std::ostringstream err;
    CHECK(run_range(cfg, err) == 1);
    CHECK(err.str().find("digest mismatch") != std::string::npos);

    save_checkpoint(cp_path.string(), Checkpoint{"1.6ii", 10, config_digest(cfg)});
    std::ostringstream err2;
    CHECK(run_range(cfg, err2) == 1);
    std::filesystem::remove(cp_path);
}

TEST_CASE("run_range usage errors") {
    std::ostringstream err;
    RunConfig cfg;
    cfg.conjecture_id = "9.9";
    cfg.from = 1;
    cfg.to = 2;
    CHECK(run_range(cfg, err) == 1);

    RunConfig bad_range;
    bad_range.conjecture_id = "1.3i";
    bad_range.from = 10;
    bad_range.to = 5;
    CHECK(run_range(bad_range, err) == 1);

    RunConfig too_far;
    too_far.conjecture_id = "1.3ii";
    too_far.from = 4;
    too_far.to = 300000;
    std::ostringstream err3;
    CHECK(run_range(too_far, err3) == 1);
    CHECK(err3.str().find("--long") != std::string::npos);
}

TEST_CASE("a counterexample aborts the run with exit code 2") {
    // Under the per-term integrality reading the 1.8ii shapes fail within
    // [26, 40]; the run must stop at the first failing parameter.
    RunConfig cfg;
    cfg.conjecture_id = "1.8ii";
    cfg.from = 26;
    cfg.to = 40;
    cfg.strict_phi = true;
    auto out = temp_file("strict.jsonl");
    cfg.output_path = out.string();
    std::ostringstream err;
    CHECK(run_range(cfg, err) == 2);
    CHECK(err.str().find("COUNTEREXAMPLE") != std::string::npos);
    auto recs = read_records(out);
    REQUIRE(!recs.empty());
    std::int64_t worst = recs.back().parameter;
    CHECK(worst <= 29);
    bool found = false;
    for (const auto& r : recs) found |= r.status == Status::counterexample;
    CHECK(found);
    std::filesystem::remove(out);
}

TEST_CASE("csv output carries a commented header and the column row") {
    RunConfig cfg;
    cfg.conjecture_id = "1.5ii";
    cfg.from = 3;
    cfg.to = 12;
    cfg.format = "csv";
    auto out = temp_file("rows.csv");
    cfg.output_path = out.string();
    std::ostringstream err;
    CHECK(run_range(cfg, err) == 0);
    std::ifstream in(out);
    std::string l1, l2, l3;
    std::getline(in, l1);
    std::getline(in, l2);
    std::getline(in, l3);
    CHECK(l1.rfind("# ", 0) == 0);
    CHECK(l2 == record_csv_header());
    CHECK(l3.rfind("1.5ii,3,", 0) == 0);
    std::filesystem::remove(out);
}
