#pragma once

/**
 * JSON network format:
 *   { "n": 3, "subsystems": [ { "A": [[2,1]], "B": [[1,1]] },
 *                             { "A": [[3,2]], "B": [], "m": 1 } ] }
 * "A"/"B" list 1-based [row, col] nonzero positions. "B": [] means m_i = 0
 * unless the optional "m" field gives the input count explicitly (needed to
 * represent an all-zero B with m_i > 0). Optional "label" names a subsystem.
 */

#include <string>

#include <nlohmann/json_fwd.hpp>

#include "tempnet/model.hpp"

namespace tempnet {

TemporalNetwork network_from_json(const nlohmann::json& j);
nlohmann::json network_to_json(const TemporalNetwork& net);

// Reads and parses a network file; throws ParseError on any failure.
TemporalNetwork load_network(const std::string& path);

} // namespace tempnet
