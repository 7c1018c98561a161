#ifndef LISOM_REPORT_JSON_HPP
#define LISOM_REPORT_JSON_HPP

#include <json.hpp>

#include "lisom/knots.hpp"

namespace lisom {

// Reports keep a stable field order and carry big integers as decimal
// strings; nothing is ever serialized as a float.
using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

Json factors_json(const FactoredCharPoly& F);
Json sh_json(const ShGroup& sh);
Json parity_json(const ParityVector& v);
Json decision_json(const DecisionReport& rep);
Json knot_indices_json(const KnotIndexReport& rep);

/// Envelope shared by all commands: schema version, command echo, payload.
Json report_envelope(const std::string& command, Json input, Json payload, long timing_ms);

} // namespace lisom

#endif
