#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "cgk/graph.hpp"

namespace cgk {

/// Default cap on enumerated shortest paths per diametral pair.
inline constexpr std::uint64_t kDefaultPathGuard = 1'000'000;

/// All unordered pairs at distance exactly diameter(g), sorted
/// lexicographically with first < second. Requires a connected graph.
std::vector<std::pair<int, int>> diametral_pairs(const Graph& g);

/// Union of all shortest s-t paths, as a DAG layered by distance from s:
/// arc x -> y exists iff {x, y} is an edge lying on some shortest s-t path
/// with d(s, x) + 1 = d(s, y).
struct ShortestPathDag {
    int source = 0;
    int target = 0;
    int length = 0;
    std::vector<std::vector<int>> succ;  // ascending successor lists
};

ShortestPathDag shortest_path_dag(const Graph& g, int s, int t);

/// Every shortest path between every diametral pair, each path listed once
/// as a vertex sequence from the smaller endpoint. Pairs are visited in
/// lexicographic order and each pair's paths in lexicographic sequence
/// order. Exceeding `guard` paths for one pair raises GraphError.
std::vector<std::vector<int>> enumerate_longest_shortest_paths(
    const Graph& g, std::uint64_t guard = kDefaultPathGuard);

/// A vertex together with a longest shortest path it fails to touch:
/// every path vertex is at distance >= 2 from `vertex`.
struct NarrownessWitness {
    int vertex = 0;
    std::vector<int> path;

    bool operator==(const NarrownessWitness& other) const {
        return vertex == other.vertex && path == other.path;
    }
};

/// Narrowness decision without path enumeration: for each vertex v
/// (ascending) and each diametral pair (lexicographic), remove N[v] from
/// the pair's shortest-path DAG and test whether a full-length path
/// survives. The witness carries the lexicographically least surviving
/// path. Requires a connected graph; nullopt means narrow.
std::optional<NarrownessWitness> is_narrow(const Graph& g);

/// Reference decision by explicit enumeration: checks every vertex against
/// every longest shortest path. Verdicts always match is_narrow; witnesses
/// may differ. Requires a connected graph.
std::optional<NarrownessWitness> narrowness_oracle(const Graph& g,
                                                   std::uint64_t guard = kDefaultPathGuard);

/// Re-checks a witness: the path must be a shortest path between a
/// diametral pair and every path vertex must be at distance >= 2 from the
/// witness vertex.
bool validate_narrowness_witness(const Graph& g, const NarrownessWitness& w);

}  // namespace cgk
