#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "isacnet/netmodel.hpp"

namespace isacnet {

struct RateAssignment;  // regioncore.hpp

/// Parses the JSON network format:
///   {"nodes": N, "source": i, "sink": j, "sensing_area": [..],
///    "links": [{"a": 1, "b": 2, "capacity": 5.0}, ...]}
/// Performs syntactic checks only (plus self-loop and duplicate-pair
/// detection); full invariant checking happens in validate_network.
/// Throws ParseError with line/field identification.
NetworkSpec parse_network(std::string_view text);

/// Serializes a spec back to the network format. For a ValidatedNetwork's
/// spec(), parse_network(serialize_network(s)) reproduces s exactly.
std::string serialize_network(const NetworkSpec& spec);

/// Reads and parses a network file. Throws IoError if unreadable.
NetworkSpec load_network(const std::string& path);

/// Witness file format: a JSON array of {"from", "to", "f", "s"}
/// records; links with f == 0 and s == 0 are omitted.
std::string serialize_witness(const RateAssignment& assign, const ValidatedNetwork& net);

/// Parses a witness file against `net`. Unknown directed links or
/// negative rates are parse errors.
RateAssignment parse_witness(std::string_view text, const ValidatedNetwork& net);

/// Writes `content` to `path` atomically (write to temp, then rename).
/// Throws IoError on failure.
void write_file_atomic(const std::string& path, std::string_view content);

}  // namespace isacnet
