#pragma once

#include <nlohmann/json.hpp>

#include "nanospin/cs_matrix.hpp"
#include "nanospin/density_matrix.hpp"
#include "nanospin/discord.hpp"
#include "nanospin/entanglement.hpp"

namespace nanospin {

/// {"p": [p1, ..., p7]}
nlohmann::json to_json(const CSDensityMatrix& m);
CSDensityMatrix cs_from_json(const nlohmann::json& j);

/// Row-major array of 16 [re, im] pairs.
nlohmann::json to_json(const DensityMatrix4& rho);
DensityMatrix4 density_from_json(const nlohmann::json& j);

nlohmann::json to_json(const ConcurrenceResult& r);
nlohmann::json to_json(const DiscordResult& r);

}  // namespace nanospin
