#pragma once

#include <optional>

#include "cgk/graph.hpp"
#include "cgk/ordering.hpp"

namespace cgk {

/// Decides whether g admits a proper interval ordering and returns one if
/// so. The construction runs breadth-first sweeps with neighborhood
/// refinement (lexicographic BFS, seeded at an endpoint found by a double
/// BFS sweep, twice restarted from the previous sweep's last vertex);
/// correctness rests on the checker, which re-validates the candidate and
/// turns any failure into a NONE verdict. Components are ordered by their
/// smallest vertex and each component's ordering is canonicalized to the
/// lexicographically smaller of itself and its reversal.
std::optional<VertexOrdering> recognize(const Graph& g);

}  // namespace cgk
