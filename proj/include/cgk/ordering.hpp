#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "cgk/graph.hpp"

namespace cgk {

/// Bijection between vertices and positions 1..n. Vertices stay 0-based
/// throughout the library; positions follow the 1-based convention used by
/// all serialized output.
class VertexOrdering {
public:
    VertexOrdering() = default;

    /// Builds from the vertex sequence in position order; raises GraphError
    /// unless it is a permutation of 0..n-1.
    static VertexOrdering from_order(std::vector<int> order);

    static VertexOrdering identity(int n);

    /// Parses "3,1,2": comma-separated 1-based labels in position order.
    static VertexOrdering parse(const std::string& text, int n);

    int size() const { return static_cast<int>(order_.size()); }
    int vertex_at(int position) const { return order_[position - 1]; }
    int position(int v) const { return pos_[v] + 1; }

    /// order()[i] is the vertex at position i+1.
    const std::vector<int>& order() const { return order_; }

    VertexOrdering reversed() const;

    /// Serializes as comma-separated 1-based labels in position order.
    std::string to_label_string() const;

    bool operator==(const VertexOrdering& other) const { return order_ == other.order_; }

private:
    std::vector<int> order_;  // position index -> vertex
    std::vector<int> pos_;    // vertex -> position index
};

/// A concrete reason an ordering fails one of the two checkers, reported as
/// the lexicographically least offender. `vertices` lists the three
/// participating vertices in position order.
///
///   ProperTriple:    {v_i, v_k} is an edge but v_j between them misses
///                    {v_i, v_j} or {v_j, v_k}.
///   ClosedSharedMin: edges {v_i, v_j} and {v_i, v_k} share their earlier
///                    endpoint, yet {v_j, v_k} is not an edge.
///   ClosedSharedMax: edges {v_i, v_k} and {v_j, v_k} share their later
///                    endpoint, yet {v_i, v_j} is not an edge.
struct OrderingViolation {
    enum class Kind { ProperTriple, ClosedSharedMin, ClosedSharedMax };
    Kind kind;
    std::array<int, 3> vertices;

    bool operator==(const OrderingViolation& other) const {
        return kind == other.kind && vertices == other.vertices;
    }
};

/// Umbrella condition: for positions i < j < k, an edge {v_i, v_k} forces
/// both {v_i, v_j} and {v_j, v_k}. Returns the least violating triple in
/// lexicographic position order, or nullopt when the ordering passes.
std::optional<OrderingViolation> check_proper_interval_ordering(const Graph& g,
                                                                const VertexOrdering& sigma);

/// Pairwise edge condition: two edges sharing their earlier endpoint force
/// an edge between the later endpoints, and dually for shared later
/// endpoints. Returns the least violating edge pair (reported through the
/// three participating vertices), or nullopt when the ordering passes.
std::optional<OrderingViolation> check_closed_ordering(const Graph& g,
                                                       const VertexOrdering& sigma);

/// Allocation-light boolean forms used by the exhaustive sweeps.
bool passes_proper_interval_ordering(const Graph& g, const std::vector<int>& order);
bool passes_closed_ordering(const Graph& g, const std::vector<int>& order);

/// True when both checkers return the same verdict on sigma.  Guaranteed on
/// connected graphs; a disconnected graph can pass the closed check yet fail
/// the umbrella check when an isolated vertex sits between two adjacent
/// positions, so callers sweeping all graphs must gate on connectivity.
bool orderings_agree(const Graph& g, const VertexOrdering& sigma);

/// minadj[p-1] / maxadj[p-1] give the smallest / largest 1-based position
/// adjacent to the vertex at position p, with p itself as default for
/// isolated positions.
struct AdjacencyProfile {
    std::vector<int> minadj;
    std::vector<int> maxadj;
};

AdjacencyProfile adjacency_profile(const Graph& g, const VertexOrdering& sigma);

enum class OrderingKind { Closed, ProperInterval };

/// Scans all n! orderings in lexicographic order and returns the first one
/// accepted by the requested checker, so the result is the
/// lexicographically smallest valid ordering. Guarded to n <= 10.
std::optional<VertexOrdering> brute_force_search(const Graph& g, OrderingKind kind);

/// Re-checks a reported violation directly against the graph.
bool validate_violation(const Graph& g, const VertexOrdering& sigma,
                        const OrderingViolation& violation);

}  // namespace cgk
