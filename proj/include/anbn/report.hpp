#pragma once

// Report serialization (JSON-lines canonical, CSV projection), witness
// certificate JSON, and run checkpoints.

#include "anbn/conjectures.hpp"
#include "anbn/witness.hpp"

#include <json.hpp>

#include <optional>
#include <string>

namespace anbn {

// Integers serialize as JSON numbers when they fit int64, else as decimal
// strings; parsing accepts both.
nlohmann::json mpz_to_json(const Int& v);
Int mpz_from_json(const nlohmann::json& j);

nlohmann::json record_to_json(const ConjectureRecord& rec);
ConjectureRecord record_from_json(const nlohmann::json& j);

// Lossy convenience projection: witness flattened to a JSON string column.
std::string record_csv_header();
std::string record_to_csv(const ConjectureRecord& rec);

// Field names fixed by contract: a, b, m, r, n, u, v, s, frames[].
nlohmann::json certificate_to_json(const WitnessCertificate& cert);
WitnessCertificate certificate_from_json(const nlohmann::json& j);

struct Checkpoint {
    std::string conjecture_id;
    std::int64_t last_completed_parameter = 0;
    std::string config_digest;
};

std::optional<Checkpoint> load_checkpoint(const std::string& path);
void save_checkpoint(const std::string& path, const Checkpoint& cp);

// FNV-1a 64 over a canonical key=value rendering, hex encoded.
std::string fnv1a_hex(const std::string& data);

}  // namespace anbn
