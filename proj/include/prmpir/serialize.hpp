#pragma once

#include <string>

#include <json.hpp>

#include "prmpir/bounds.hpp"
#include "prmpir/gf2.hpp"
#include "prmpir/pirsim.hpp"
#include "prmpir/prm.hpp"
#include "prmpir/shorten.hpp"

namespace prmpir {

// Matrices serialize as {"rows": r, "cols": c, "data": ["0101...", ...]},
// one binary string per row, leftmost character = column 0.
nlohmann::json to_json(const Gf2Matrix& m);
Gf2Matrix matrix_from_json(const nlohmann::json& j);

// Code descriptor: subsets appear as integer bitmasks; the first k
// coordinates are the message symbols in colex order.
nlohmann::json to_json(const PirCode& code);

nlohmann::json to_json(const ShorteningPlan& plan);
nlohmann::json to_json(const BoundReport& report);
nlohmann::json to_json(const Table1Row& row);
nlohmann::json to_json(const Table2Cell& cell);

// One transcript line: {"server": s, "query": "0110", "answer": 0} with the
// query's leftmost character = record 0.
nlohmann::json transcript_line(const TranscriptEntry& entry, int records);

std::string query_bits_string(uint64_t query, int records);

}  // namespace prmpir
