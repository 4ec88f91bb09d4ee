#pragma once

#include <random>

#include "cgk/graph.hpp"

namespace cgk {

/// Uniformly labeled random connected graph: a random attachment tree
/// (vertex i attaches to a uniform earlier vertex) plus a uniform number
/// of extra edges drawn without replacement from the remaining pairs.
/// mt19937_64 keeps the sequence identical across platforms for a fixed
/// seed.
Graph random_connected_graph(int n, std::mt19937_64& rng);

}  // namespace cgk
