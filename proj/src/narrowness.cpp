#include "cgk/narrowness.hpp"

#include <algorithm>
#include <functional>

#include "cgk/graph.hpp"

namespace cgk {

namespace {

// Distance >= 2 from v, i.e. outside the closed neighborhood of v.
bool avoids(const Graph& g, int v, int x) {
    return x != v && !g.has_edge(v, x);
}

}  // namespace

std::vector<std::pair<int, int>> diametral_pairs(const Graph& g) {
    const int diam = diameter(g);
    const int n = g.vertex_count();
    std::vector<std::pair<int, int>> pairs;
    for (int s = 0; s < n; ++s) {
        const auto table = bfs_distances(g, s);
        for (int t = s + 1; t < n; ++t) {
            if (table.dist[t] == diam) pairs.emplace_back(s, t);
        }
    }
    return pairs;
}

ShortestPathDag shortest_path_dag(const Graph& g, int s, int t) {
    const int n = g.vertex_count();
    if (s < 0 || s >= n || t < 0 || t >= n) {
        throw GraphError("shortest_path_dag: vertex out of range");
    }
    const auto from_s = bfs_distances(g, s).dist;
    const auto from_t = bfs_distances(g, t).dist;
    if (from_s[t] == kUnreachable) {
        throw GraphError("shortest_path_dag: endpoints not connected");
    }
    ShortestPathDag dag;
    dag.source = s;
    dag.target = t;
    dag.length = from_s[t];
    dag.succ.assign(n, {});
    for (int x = 0; x < n; ++x) {
        if (from_s[x] == kUnreachable || from_t[x] == kUnreachable) continue;
        if (from_s[x] + from_t[x] != dag.length) continue;
        for (int y : g.neighbors(x)) {
            if (from_s[y] == from_s[x] + 1 && from_s[x] + 1 + from_t[y] == dag.length) {
                dag.succ[x].push_back(y);
            }
        }
    }
    return dag;
}

std::vector<std::vector<int>> enumerate_longest_shortest_paths(const Graph& g,
                                                               std::uint64_t guard) {
    std::vector<std::vector<int>> out;
    for (const auto& [s, t] : diametral_pairs(g)) {
        const ShortestPathDag dag = shortest_path_dag(g, s, t);
        std::uint64_t count = 0;
        std::vector<int> path;
        std::function<void(int)> walk = [&](int x) {
            path.push_back(x);
            if (x == t) {
                if (++count > guard) {
                    throw GraphError("enumerate_longest_shortest_paths: path guard exceeded");
                }
                out.push_back(path);
            } else {
                for (int y : dag.succ[x]) walk(y);
            }
            path.pop_back();
        };
        walk(s);
    }
    return out;
}

std::optional<NarrownessWitness> is_narrow(const Graph& g) {
    const int diam = diameter(g);
    // With diameter at most 1, every vertex meets the closed neighborhood
    // of every path vertex.
    if (diam <= 1) return std::nullopt;
    const int n = g.vertex_count();

    std::vector<ShortestPathDag> dags;
    for (const auto& [s, t] : diametral_pairs(g)) {
        dags.push_back(shortest_path_dag(g, s, t));
    }

    std::vector<signed char> reach;
    for (int v = 0; v < n; ++v) {
        for (const ShortestPathDag& dag : dags) {
            if (!avoids(g, v, dag.source) || !avoids(g, v, dag.target)) continue;
            // Can x still reach the target through vertices avoiding N[v]?
            reach.assign(n, -1);
            std::function<bool(int)> reaches = [&](int x) -> bool {
                if (reach[x] != -1) return reach[x] == 1;
                bool ok = false;
                if (avoids(g, v, x)) {
                    if (x == dag.target) {
                        ok = true;
                    } else {
                        for (int y : dag.succ[x]) {
                            if (reaches(y)) {
                                ok = true;
                                break;
                            }
                        }
                    }
                }
                reach[x] = ok ? 1 : 0;
                return ok;
            };
            if (!reaches(dag.source)) continue;
            NarrownessWitness w;
            w.vertex = v;
            int x = dag.source;
            w.path.push_back(x);
            while (x != dag.target) {
                for (int y : dag.succ[x]) {
                    if (reaches(y)) {
                        x = y;
                        break;
                    }
                }
                w.path.push_back(x);
            }
            return w;
        }
    }
    return std::nullopt;
}

std::optional<NarrownessWitness> narrowness_oracle(const Graph& g, std::uint64_t guard) {
    diameter(g);  // reject disconnected input up front
    const auto paths = enumerate_longest_shortest_paths(g, guard);
    const int n = g.vertex_count();
    for (int v = 0; v < n; ++v) {
        for (const auto& path : paths) {
            bool avoided = true;
            for (int x : path) {
                if (!avoids(g, v, x)) {
                    avoided = false;
                    break;
                }
            }
            if (avoided) return NarrownessWitness{v, path};
        }
    }
    return std::nullopt;
}

bool validate_narrowness_witness(const Graph& g, const NarrownessWitness& w) {
    const int n = g.vertex_count();
    if (w.vertex < 0 || w.vertex >= n) return false;
    if (w.path.empty()) return false;
    for (int x : w.path) {
        if (x < 0 || x >= n) return false;
        if (!avoids(g, w.vertex, x)) return false;
    }
    int diam = 0;
    try {
        diam = diameter(g);
    } catch (const GraphError&) {
        return false;
    }
    if (static_cast<int>(w.path.size()) != diam + 1) return false;
    const auto from_start = bfs_distances(g, w.path.front()).dist;
    for (std::size_t i = 0; i < w.path.size(); ++i) {
        if (from_start[w.path[i]] != static_cast<int>(i)) return false;
        if (i > 0 && !g.has_edge(w.path[i - 1], w.path[i])) return false;
    }
    return true;
}

}  // namespace cgk
