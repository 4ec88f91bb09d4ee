#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "cgk/graph.hpp"
#include "cgk/ordering.hpp"

namespace cgk {

/// A direction for every edge of a base graph. Arrows are kept sorted, so
/// equal orientations compare equal structurally.
class Orientation {
public:
    /// Raises GraphError unless `arrows` directs every base edge exactly once.
    Orientation(Graph base, std::vector<std::pair<int, int>> arrows);

    const Graph& base() const { return base_; }
    const std::vector<std::pair<int, int>>& arrows() const { return arrows_; }

    /// True iff the arrow u -> v is present.
    bool points(int u, int v) const;

    /// Tails of arrows into v / heads of arrows out of v, ascending.
    const std::vector<int>& inset(int v) const { return in_[v]; }
    const std::vector<int>& outset(int v) const { return out_[v]; }

    bool operator==(const Orientation& other) const {
        return base_ == other.base_ && arrows_ == other.arrows_;
    }

private:
    Graph base_;
    std::vector<std::pair<int, int>> arrows_;
    std::vector<std::vector<int>> in_;
    std::vector<std::vector<int>> out_;
};

/// An order v_1..v_n under which every inset is a block of immediate
/// predecessors and every outset a block of immediate successors.
struct StraightEnumeration {
    VertexOrdering order;
    Orientation orientation;
};

/// First 1-based position whose inset is not a contiguous block of
/// immediate predecessors or whose outset is not a contiguous block of
/// immediate successors; nullopt when the order is a straight enumeration
/// of d. Raises GraphError when the order size differs from the base.
std::optional<int> first_straightness_failure(const Orientation& d,
                                              const VertexOrdering& order);

bool is_straight_enumeration(const Orientation& d, const VertexOrdering& order);

/// Directs each edge from the earlier to the later endpoint under sigma.
/// Raises GraphError unless sigma passes check_proper_interval_ordering.
Orientation orient_from_ordering(const Graph& g, const VertexOrdering& sigma);

/// Straight enumeration built on the recognition ordering, re-verified by
/// first_straightness_failure before returning; nullopt when recognition
/// fails.
std::optional<StraightEnumeration> straight_orientation(const Graph& g);

/// Reverses every arrow; an involution.
Orientation full_reversal(const Orientation& d);

/// Every orientation admitting at least one straight enumeration, found by
/// scanning all n! orders, directing edges earlier to later, and keeping
/// the orders that pass first_straightness_failure. Deduplicated and
/// sorted by arrow list. Guarded to n <= 7.
std::vector<Orientation> all_straight_orientations(const Graph& g);

/// Partition of the vertices by closed-neighborhood equality, together
/// with the quotient graph on the classes. Classes are listed by smallest
/// member, members ascending; two classes are quotient-adjacent iff any
/// (equivalently every) cross pair is adjacent.
struct ReducedQuotient {
    Graph quotient;
    std::vector<std::vector<int>> classes;
    std::vector<int> representative;  // classes[c].front()
    std::vector<int> class_of;        // vertex -> class index
};

ReducedQuotient closed_neighborhood_classes(const Graph& g);

/// True when all closed neighborhoods are pairwise distinct.
bool is_reduced(const Graph& g);

/// An edge is balanced when its endpoints have equal closed neighborhoods.
enum class EdgeBalance { Balanced, Unbalanced };

/// Raises GraphError when {u, v} is not an edge.
EdgeBalance classify_edge(const Graph& g, int u, int v);

/// Lifts an ordering of the quotient classes to an ordering of the original
/// vertices by listing each class consecutively, members ascending.
VertexOrdering expand_quotient_ordering(const ReducedQuotient& q,
                                        const VertexOrdering& quotient_order);

}  // namespace cgk
