#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cgk {

/// Raised for invalid construction (loops, out-of-range vertices), guard
/// violations, and operations applied to unsuitable inputs (e.g. diameter
/// of a disconnected graph).
class GraphError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Distance value for vertices outside the source's component.
inline constexpr int kUnreachable = -1;

/// Finite simple undirected graph on vertices 0..n-1.
///
/// Neighbor lists are kept sorted. For n <= 64 a per-vertex adjacency
/// bitmask is maintained alongside, so edge tests inside the exhaustive
/// sweeps are single AND operations. Instances are treated as immutable
/// once built and are safe to share across threads.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    int vertex_count() const { return n_; }
    int edge_count() const { return m_; }

    /// Inserts an undirected edge. Duplicate insertions are collapsed;
    /// loops and out-of-range endpoints raise GraphError.
    void add_edge(int u, int v);

    bool has_edge(int u, int v) const;

    /// Sorted open neighborhood N(v).
    const std::vector<int>& neighbors(int v) const;
    int degree(int v) const { return static_cast<int>(neighbors(v).size()); }

    bool has_masks() const { return !mask_.empty(); }
    std::uint64_t adjacency_mask(int v) const { return mask_[v]; }
    std::uint64_t closed_mask(int v) const { return mask_[v] | (1ull << v); }

    /// Edges as pairs (u, v) with u < v, lexicographically sorted.
    std::vector<std::pair<int, int>> edge_list() const;

    bool operator==(const Graph& other) const {
        return n_ == other.n_ && adj_ == other.adj_;
    }

private:
    void check_vertex(int v) const;

    int n_ = 0;
    int m_ = 0;
    std::vector<std::vector<int>> adj_;
    std::vector<std::uint64_t> mask_;
};

/// Builds a graph from an edge list. Every endpoint must lie in [0, n) and
/// no pair may be a loop; violations are reported with the offending pair.
/// Duplicate pairs are collapsed silently.
Graph build_graph(int n, const std::vector<std::pair<int, int>>& edges);

struct InducedSubgraph {
    Graph graph;
    std::vector<int> vertex_map;  ///< new index -> original vertex, ascending
};

/// Subgraph induced by the vertex set `s` (deduplicated, sorted ascending),
/// together with the relabeling back to the host graph.
InducedSubgraph induced_subgraph(const Graph& g, const std::vector<int>& s);

struct DistanceTable {
    int source = 0;
    std::vector<int> dist;  ///< kUnreachable outside the source's component
};

/// Exact shortest-path distances from `source` by breadth-first search.
DistanceTable bfs_distances(const Graph& g, int source);

/// Maximum distance over all vertex pairs. Requires a connected, nonempty
/// graph; disconnected input raises GraphError rather than yielding an
/// infinite value.
int diameter(const Graph& g);

/// Partition of V into maximal connected sets, each sorted ascending, the
/// list ordered by smallest member.
std::vector<std::vector<int>> connected_components(const Graph& g);

bool is_connected(const Graph& g);

/// All 2^(n(n-1)/2) labeled graphs on n vertices (1 <= n <= 7), addressable
/// by edge-set bitmask. Bit k of the mask corresponds to the k-th vertex
/// pair in lexicographic order (0,1), (0,2), ..., (1,2), ... Enumeration
/// order is ascending mask; ranges of masks can be handed to workers
/// independently.
class GraphEnumeration {
public:
    explicit GraphEnumeration(int n);

    int vertex_count() const { return n_; }
    std::uint64_t size() const { return std::uint64_t{1} << pairs_.size(); }
    Graph at(std::uint64_t mask) const;

    template <typename F>
    void for_each(F&& f) const {
        for (std::uint64_t mask = 0; mask < size(); ++mask) f(at(mask));
    }

private:
    int n_;
    std::vector<std::pair<int, int>> pairs_;
};

}  // namespace cgk
