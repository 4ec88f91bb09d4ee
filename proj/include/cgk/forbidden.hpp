#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "cgk/graph.hpp"

namespace cgk {

enum class Pattern { Claw, Net, Tent };

/// Witness for a forbidden structure. `vertices` is ordered by role:
///   ChordlessCycle: the cycle in traversal order (length >= 4);
///   Claw:           center, then the three pairwise nonadjacent leaves;
///   Net:            triangle a, b, c, then pendants x-a, y-b, z-c;
///   Tent:           inner triangle b, c, e, then outer a on {b,c},
///                   d on {c,e}, f on {b,e}.
struct ForbiddenWitness {
    enum class Kind { ChordlessCycle, Claw, Net, Tent };
    Kind kind;
    std::vector<int> vertices;

    bool operator==(const ForbiddenWitness& other) const {
        return kind == other.kind && vertices == other.vertices;
    }
};

/// Order in which all vertices can be eliminated so that the later
/// neighbors of each vertex form a clique.
struct EliminationOrdering {
    std::vector<int> vertices;  // eliminated front to back
};

/// Chordality test by maximum cardinality search: returns a perfect
/// elimination ordering, or an induced chordless cycle of length >= 4.
std::variant<EliminationOrdering, ForbiddenWitness> is_chordal(const Graph& g);

/// Exhaustive search for an induced copy of the pattern. The witness is
/// the least role tuple in lexicographic vertex order; nullopt when the
/// graph is pattern-free.
std::optional<ForbiddenWitness> find_induced_pattern(const Graph& g, Pattern pattern);

/// The four structure flags together with the witnesses that falsify them.
struct Classification {
    bool chordal = false;
    bool claw_free = false;
    bool net_free = false;
    bool tent_free = false;
    std::optional<ForbiddenWitness> chordality_witness;
    std::optional<ForbiddenWitness> claw_witness;
    std::optional<ForbiddenWitness> net_witness;
    std::optional<ForbiddenWitness> tent_witness;

    bool all() const { return chordal && claw_free && net_free && tent_free; }
};

Classification classify(const Graph& g);

/// Re-checks a witness directly against the graph: exact adjacency and
/// nonadjacency of the claimed structure.
bool validate_witness(const Graph& g, const ForbiddenWitness& w);

/// Re-checks an elimination ordering: every vertex's later neighbors must
/// be pairwise adjacent.
bool validate_elimination_ordering(const Graph& g, const EliminationOrdering& peo);

}  // namespace cgk
