#pragma once

#include <cstdint>

namespace catena {

// Resource caps.  Exceeding one raises errc::budget_exceeded (searches) or
// errc::fiber_cap_exceeded (fiber enumeration); an exhausted search that
// simply finds nothing returns an empty result instead.
struct Limits {
    std::uint64_t solver_nodes = 10'000'000;   // Contejean-Devie nodes per call
    std::uint64_t fiber_cap = 1'000'000;       // factorizations per fiber
    std::uint64_t completion_pairs = 1'000'000; // critical pairs per completion
};

} // namespace catena
