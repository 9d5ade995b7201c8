#pragma once

#include <cstdint>

namespace leva {

// Position in a +-1 array / Euler tour. Stored tables keep these as 32-bit
// words; supported array lengths stay below 2^32.
using index_t = std::uint32_t;

// Element of a +-1 array (a tree level, or its negation).
using value_t = std::int32_t;

// Vertex id of the input tree.
using vertex_t = std::uint32_t;

}  // namespace leva
