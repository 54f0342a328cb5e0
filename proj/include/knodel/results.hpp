#pragma once

#include <cstdint>
#include <optional>
#include <utility>

#include "knodel/sumrep.hpp"

namespace knodel {

enum class DistanceMethod : std::uint8_t { ClosedForm, Bfs };

// A distance value plus how it was obtained and, on request, a walk of
// exactly that length connecting the queried endpoints.
struct DistanceResult {
    std::int64_t value = 0;
    DistanceMethod method = DistanceMethod::Bfs;
    std::optional<Walk> witness;
};

enum class DiameterMethod : std::uint8_t { Formula, DiametralPair, Bfs };

struct DiameterResult {
    std::int64_t value = 0;
    DiameterMethod method = DiameterMethod::Bfs;
    std::optional<std::pair<Vertex, Vertex>> witness_pair;
};

} // namespace knodel
