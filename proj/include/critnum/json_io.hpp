#pragma once

// JSON forms of subsets and certificates. Keys are emitted in sorted order,
// so dumps are byte-stable.

#include <json.hpp>

#include "critnum/subset.hpp"
#include "critnum/witness.hpp"

namespace critnum {

/// Array of coordinate vectors in ascending index order.
nlohmann::json subset_to_json(const GroupSubset& a);
GroupSubset subset_from_json(const Group& g, const nlohmann::json& j);

nlohmann::json to_json(const WitnessCertificate& c);
nlohmann::json to_json(const BoundCertificate& c);

/// Rebuilds a certificate from JSON and recomputes its check flags from the
/// set, so a tampered file shows up as a failed check.
WitnessCertificate witness_from_json(const nlohmann::json& j);
BoundCertificate bound_from_json(const nlohmann::json& j);

/// Indented dump with object-free arrays kept on one line, e.g.
/// "set": [[0, 1], [1, 3]]. Key order is the sorted order of nlohmann::json.
std::string dump_readable(const nlohmann::json& j, int indent = 2);

}  // namespace critnum
