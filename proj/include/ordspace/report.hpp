#pragma once

#include "ordspace/balls.hpp"
#include "ordspace/census.hpp"
#include "ordspace/core.hpp"
#include "ordspace/euclid.hpp"
#include "ordspace/line.hpp"
#include "ordspace/orddist.hpp"

#include <json.hpp>

#include <cstdint>
#include <string>

namespace ordspace {

using Json = nlohmann::ordered_json;

std::string version();

/// {"tool", "version", "command", "seed"} header shared by every report.
Json envelope(const std::string& command, std::uint64_t seed);

// Points are rendered 1-based and rationals as "p/q" strings throughout.
Json to_json(const OrdinalSpace& s);
Json to_json(const BallSet& b);
Json to_json(const HasseDiagram& h);
Json to_json(const LineWitness& w);
Json to_json(const EuclidWitness& w);
Json to_json(const CMResult& c);
Json to_json(const R2Report& r);
Json to_json(const MengerProbe& p);
Json to_json(const OrdDistResult& r);
Json to_json(const CensusReport& r);
Json to_json(const MajorizationResult& m);

Json permutation_json(const Permutation& f);

}  // namespace ordspace
