#pragma once

#include <cstdint>
#include <limits>

namespace sparse_ec {

using Vertex = std::uint32_t;
using EdgeId = std::uint32_t;
/// Colors are 1..D; 0 marks an uncolored edge.
using Color = std::uint32_t;

inline constexpr Vertex kNoVertex = std::numeric_limits<Vertex>::max();
inline constexpr EdgeId kNoEdge = std::numeric_limits<EdgeId>::max();
inline constexpr Color kUncolored = 0;

}  // namespace sparse_ec
