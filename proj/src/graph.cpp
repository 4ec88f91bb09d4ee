#include "cgk/graph.hpp"

#include <algorithm>
#include <queue>

namespace cgk {

Graph::Graph(int n) : n_(n) {
    if (n < 0) throw GraphError("vertex count must be nonnegative");
    adj_.resize(static_cast<std::size_t>(n));
    if (n <= 64) mask_.assign(static_cast<std::size_t>(n), 0);
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n_) {
        throw GraphError("vertex " + std::to_string(v) + " out of range [0, " +
                         std::to_string(n_) + ")");
    }
}

void Graph::add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw GraphError("loop edge (" + std::to_string(u) + ", " + std::to_string(v) + ")");
    auto& au = adj_[u];
    auto it = std::lower_bound(au.begin(), au.end(), v);
    if (it != au.end() && *it == v) return;
    au.insert(it, v);
    auto& av = adj_[v];
    av.insert(std::lower_bound(av.begin(), av.end(), u), u);
    if (!mask_.empty()) {
        mask_[u] |= 1ull << v;
        mask_[v] |= 1ull << u;
    }
    ++m_;
}

bool Graph::has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    if (u == v) return false;
    if (!mask_.empty()) return (mask_[u] >> v) & 1ull;
    const auto& au = adj_[u];
    return std::binary_search(au.begin(), au.end(), v);
}

const std::vector<int>& Graph::neighbors(int v) const {
    check_vertex(v);
    return adj_[v];
}

std::vector<std::pair<int, int>> Graph::edge_list() const {
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<std::size_t>(m_));
    for (int u = 0; u < n_; ++u) {
        for (int v : adj_[u]) {
            if (v > u) edges.emplace_back(u, v);
        }
    }
    return edges;
}

Graph build_graph(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g(n);
    for (const auto& [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n) {
            throw GraphError("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                             "): vertex out of range [0, " + std::to_string(n) + ")");
        }
        if (u == v) {
            throw GraphError("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                             ") is a loop");
        }
        g.add_edge(u, v);
    }
    return g;
}

InducedSubgraph induced_subgraph(const Graph& g, const std::vector<int>& s) {
    std::vector<int> verts = s;
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    for (int v : verts) {
        if (v < 0 || v >= g.vertex_count()) {
            throw GraphError("induced subgraph: vertex " + std::to_string(v) +
                             " out of range [0, " + std::to_string(g.vertex_count()) + ")");
        }
    }
    InducedSubgraph out;
    out.vertex_map = verts;
    Graph h(static_cast<int>(verts.size()));
    for (int i = 0; i < static_cast<int>(verts.size()); ++i) {
        for (int j = i + 1; j < static_cast<int>(verts.size()); ++j) {
            if (g.has_edge(verts[i], verts[j])) h.add_edge(i, j);
        }
    }
    out.graph = std::move(h);
    return out;
}

DistanceTable bfs_distances(const Graph& g, int source) {
    if (source < 0 || source >= g.vertex_count()) {
        throw GraphError("bfs source " + std::to_string(source) + " out of range");
    }
    DistanceTable table;
    table.source = source;
    table.dist.assign(static_cast<std::size_t>(g.vertex_count()), kUnreachable);
    table.dist[source] = 0;
    std::queue<int> q;
    q.push(source);
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int w : g.neighbors(u)) {
            if (table.dist[w] == kUnreachable) {
                table.dist[w] = table.dist[u] + 1;
                q.push(w);
            }
        }
    }
    return table;
}

int diameter(const Graph& g) {
    if (g.vertex_count() == 0) throw GraphError("diameter of empty graph");
    int best = 0;
    for (int v = 0; v < g.vertex_count(); ++v) {
        DistanceTable t = bfs_distances(g, v);
        for (int d : t.dist) {
            if (d == kUnreachable) throw GraphError("diameter of disconnected graph");
            best = std::max(best, d);
        }
    }
    return best;
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
    std::vector<std::vector<int>> comps;
    std::vector<char> seen(static_cast<std::size_t>(g.vertex_count()), 0);
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (seen[v]) continue;
        std::vector<int> comp;
        std::queue<int> q;
        q.push(v);
        seen[v] = 1;
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            comp.push_back(u);
            for (int w : g.neighbors(u)) {
                if (!seen[w]) {
                    seen[w] = 1;
                    q.push(w);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

GraphEnumeration::GraphEnumeration(int n) : n_(n) {
    if (n < 1 || n > 7) {
        throw GraphError("graph enumeration supports 1 <= n <= 7, got " + std::to_string(n));
    }
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) pairs_.emplace_back(u, v);
    }
}

Graph GraphEnumeration::at(std::uint64_t mask) const {
    if (mask >= size()) throw GraphError("graph enumeration index out of range");
    Graph g(n_);
    for (std::size_t k = 0; k < pairs_.size(); ++k) {
        if ((mask >> k) & 1ull) g.add_edge(pairs_[k].first, pairs_[k].second);
    }
    return g;
}

}  // namespace cgk
