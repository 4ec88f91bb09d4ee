#pragma once

#include <vector>

#include "cgk/graph.hpp"

namespace cgk::fixtures {

/// Path 0-1-...-(n-1).
inline Graph path(int n) {
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

/// Cycle on n >= 3 vertices.
inline Graph cycle(int n) {
    Graph g = path(n);
    if (n >= 3) g.add_edge(0, n - 1);
    return g;
}

inline Graph complete(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    }
    return g;
}

/// K_{1,3}: center 0 with leaves 1, 2, 3.
inline Graph claw() {
    return build_graph(4, {{0, 1}, {0, 2}, {0, 3}});
}

/// Triangle 0,1,2 with a pendant vertex on each corner: 3-0, 4-1, 5-2.
inline Graph net() {
    return build_graph(6, {{0, 1}, {0, 2}, {1, 2}, {3, 0}, {4, 1}, {5, 2}});
}

/// Triangle 1,2,4 whose three edges each carry an outer vertex adjacent to
/// both endpoints: 0 on {1,2}, 3 on {2,4}, 5 on {1,4}.
inline Graph tent() {
    return build_graph(6, {{1, 2}, {1, 4}, {2, 4}, {0, 1}, {0, 2}, {3, 2}, {3, 4}, {5, 1}, {5, 4}});
}

/// Path of cliques: consecutive blocks are joined completely, so the result
/// is an expansion of a path by true twins. Vertices are numbered block by
/// block.
inline Graph clique_path(const std::vector<int>& sizes) {
    int n = 0;
    for (int s : sizes) n += s;
    Graph g(n);
    int offset = 0;
    int prev_offset = -1;
    int prev_size = 0;
    for (int s : sizes) {
        for (int i = 0; i < s; ++i) {
            for (int j = i + 1; j < s; ++j) g.add_edge(offset + i, offset + j);
        }
        if (prev_offset >= 0) {
            for (int i = 0; i < prev_size; ++i) {
                for (int j = 0; j < s; ++j) g.add_edge(prev_offset + i, offset + j);
            }
        }
        prev_offset = offset;
        prev_size = s;
        offset += s;
    }
    return g;
}

}  // namespace cgk::fixtures
