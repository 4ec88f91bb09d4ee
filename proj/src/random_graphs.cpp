#include "cgk/random_graphs.hpp"

#include <utility>
#include <vector>

namespace cgk {

namespace {

// Modulo reduction keeps the draw sequence independent of the standard
// library's distribution internals.
std::uint64_t draw(std::mt19937_64& rng, std::uint64_t bound) {
    return rng() % bound;
}

}  // namespace

Graph random_connected_graph(int n, std::mt19937_64& rng) {
    if (n < 1) throw GraphError("random_connected_graph: n must be positive");
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<std::size_t>(n) * 2);
    for (int v = 1; v < n; ++v) {
        edges.emplace_back(static_cast<int>(draw(rng, v)), v);
    }
    const Graph tree = build_graph(n, edges);
    std::vector<std::pair<int, int>> pool;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (!tree.has_edge(u, v)) pool.emplace_back(u, v);
        }
    }
    const std::size_t extra = pool.empty() ? 0 : draw(rng, pool.size() + 1);
    for (std::size_t i = 0; i < extra; ++i) {
        std::swap(pool[i], pool[i + draw(rng, pool.size() - i)]);
        edges.push_back(pool[i]);
    }
    return build_graph(n, edges);
}

}  // namespace cgk
