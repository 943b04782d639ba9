#pragma once

#include "qdiamond/congruence.hpp"

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace qdiamond {

/// {"k":..,"A":..,"B":..,"M":..,"bound":..,"family":..,"status":"holds_up_to_bound"}
std::string to_jsonl(const Congruence& claim, std::size_t bound);

void write_jsonl(std::ostream& os, std::span<const Congruence> claims, std::size_t bound);

struct JsonlRecord {
    Congruence claim;
    std::size_t bound;
    std::string status;
};

/// Parses one record per non-empty line; std::invalid_argument on schema errors.
std::vector<JsonlRecord> read_jsonl(std::istream& is);

} // namespace qdiamond
