#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "bnloci/oracle.hpp"
#include "bnloci/regions.hpp"
#include "bnloci/sweep.hpp"

namespace bnloci {

using Json = nlohmann::ordered_json;

Json to_json(const Rat& r);
Json to_json(const BNPoint& p);
Json to_json(const Classification& c);
Json to_json(const Polyline& p);
Json to_json(const SweepReport& r);
Json to_json(const H0Max& h);
Json to_json(const RegionDiff& d, std::int64_t genus, std::int64_t max_den);

/// RFC 4180 table, one row per classification, CRLF line ends.
std::string to_csv(const std::vector<Classification>& rows);

}  // namespace bnloci
