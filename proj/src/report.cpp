#include "anbn/report.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace anbn {

using nlohmann::json;

json mpz_to_json(const Int& v) {
    if (v.fits_slong_p()) return json(static_cast<std::int64_t>(v.get_si()));
    return json(v.get_str());
}

Int mpz_from_json(const json& j) {
    if (j.is_string()) return Int(j.get<std::string>());
    if (j.is_number_unsigned()) {
        Int v;
        mpz_import(v.get_mpz_t(), 1, 1, sizeof(std::uint64_t), 0, 0,
                   &j.get_ref<const std::uint64_t&>());
        return v;
    }
    return Int(static_cast<long>(j.get<std::int64_t>()));
}

json record_to_json(const ConjectureRecord& rec) {
    return json{{"conjecture_id", rec.conjecture_id}, {"parameter", rec.parameter},
                {"witness", rec.witness},             {"status", to_string(rec.status)},
                {"elapsed_ms", rec.elapsed_ms},       {"prp_rounds", rec.prp_rounds}};
}

ConjectureRecord record_from_json(const json& j) {
    ConjectureRecord rec;
    rec.conjecture_id = j.at("conjecture_id").get<std::string>();
    rec.parameter = j.at("parameter").get<std::int64_t>();
    rec.witness = j.at("witness");
    rec.status = status_from_string(j.at("status").get<std::string>());
    rec.elapsed_ms = j.at("elapsed_ms").get<double>();
    rec.prp_rounds = j.at("prp_rounds").get<int>();
    return rec;
}

std::string record_csv_header() {
    return "conjecture_id,parameter,status,elapsed_ms,prp_rounds,witness";
}

namespace {

std::string csv_escape(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    out += '"';
    return out;
}

}  // namespace

std::string record_to_csv(const ConjectureRecord& rec) {
    std::ostringstream os;
    os << rec.conjecture_id << ',' << rec.parameter << ',' << to_string(rec.status) << ','
       << rec.elapsed_ms << ',' << rec.prp_rounds << ',' << csv_escape(rec.witness.dump());
    return os.str();
}

json certificate_to_json(const WitnessCertificate& cert) {
    json frames = json::array();
    for (const TraceFrame& f : cert.frames)
        frames.push_back({{"m_level", mpz_to_json(f.m_level)},
                          {"largest_prime", mpz_to_json(f.largest_prime)},
                          {"m0", mpz_to_json(f.reduced_modulus)},
                          {"k", mpz_to_json(f.k)},
                          {"q", mpz_to_json(f.q)}});
    return json{{"a", mpz_to_json(cert.query.a)},
                {"b", mpz_to_json(cert.query.b)},
                {"m", mpz_to_json(cert.query.m)},
                {"r", mpz_to_json(cert.query.target_residue)},
                {"n", mpz_to_json(cert.n)},
                {"u", mpz_to_json(cert.u)},
                {"v", mpz_to_json(cert.v)},
                {"s", mpz_to_json(cert.s)},
                {"frames", frames}};
}

WitnessCertificate certificate_from_json(const json& j) {
    WitnessQuery q(mpz_from_json(j.at("a")), mpz_from_json(j.at("b")), mpz_from_json(j.at("m")),
                   mpz_from_json(j.at("r")));
    WitnessCertificate cert{q, mpz_from_json(j.at("n")), mpz_from_json(j.at("u")),
                            mpz_from_json(j.at("v")), mpz_from_json(j.at("s")), {}};
    for (const auto& f : j.at("frames"))
        cert.frames.push_back(TraceFrame{mpz_from_json(f.at("m_level")),
                                         mpz_from_json(f.at("largest_prime")),
                                         mpz_from_json(f.at("m0")), mpz_from_json(f.at("k")),
                                         mpz_from_json(f.at("q"))});
    return cert;
}

std::optional<Checkpoint> load_checkpoint(const std::string& path) {
    std::ifstream in(path);
    if (!in) return std::nullopt;
    json j;
    in >> j;
    Checkpoint cp;
    cp.conjecture_id = j.at("conjecture_id").get<std::string>();
    cp.last_completed_parameter = j.at("last_completed_parameter").get<std::int64_t>();
    cp.config_digest = j.at("config_digest").get<std::string>();
    return cp;
}

void save_checkpoint(const std::string& path, const Checkpoint& cp) {
    std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        out << json{{"conjecture_id", cp.conjecture_id},
                    {"last_completed_parameter", cp.last_completed_parameter},
                    {"config_digest", cp.config_digest}}
                   .dump()
            << '\n';
    }
    std::rename(tmp.c_str(), path.c_str());
}

std::string fnv1a_hex(const std::string& data) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

}  // namespace anbn
