#pragma once

#include <vector>

#include "cgk/graph.hpp"
#include "cgk/ordering.hpp"

namespace cgk {

/// Closed integer interval [l, r].
struct Interval {
    long long l = 0;
    long long r = 0;

    bool operator==(const Interval& other) const { return l == other.l && r == other.r; }
};

inline bool intervals_overlap(const Interval& a, const Interval& b) {
    return std::max(a.l, b.l) <= std::min(a.r, b.r);
}

/// a properly contains b: a covers b and they differ.
inline bool properly_contains(const Interval& a, const Interval& b) {
    return a.l <= b.l && b.r <= a.r && (a.l < b.l || b.r < a.r);
}

/// One interval per vertex, indexed by vertex.
struct IntervalRepresentation {
    std::vector<Interval> intervals;
};

/// Exact integer representation from an ordering passing
/// check_proper_interval_ordering (raises GraphError otherwise). The vertex
/// at position i receives [i*(n+1), maxadj(i)*(n+1) + i], which gives
/// strictly increasing left and right endpoints, overlap exactly on edges,
/// and no containments.
IntervalRepresentation build_representation(const Graph& g, const VertexOrdering& sigma);

/// A vertex pair breaking the representation contract.
///
///   FalseOverlap:   intervals overlap but the vertices are not adjacent
///                   (u < v).
///   MissingOverlap: vertices are adjacent but the intervals are disjoint
///                   (u < v).
///   Containment:    interval of u properly contains interval of v.
struct RepresentationViolation {
    enum class Kind { FalseOverlap, MissingOverlap, Containment };
    Kind kind;
    int u;
    int v;

    bool operator==(const RepresentationViolation& other) const {
        return kind == other.kind && u == other.u && v == other.v;
    }
};

/// Every violating pair, scanning pairs in lexicographic order with the
/// overlap mismatch (if any) reported before the containment (if any).
/// Empty result means the representation is a proper interval model of g.
/// Raises GraphError when the representation misses a vertex or an
/// interval is inverted.
std::vector<RepresentationViolation> validate_representation(const Graph& g,
                                                             const IntervalRepresentation& rep);

}  // namespace cgk
