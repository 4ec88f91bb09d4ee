#include "cgk/forbidden.hpp"

#include <algorithm>
#include <queue>

namespace cgk {

namespace {

// Maximum cardinality search: repeatedly select the unnumbered vertex with
// the most numbered neighbors (ties to the smallest label). Reversing the
// selection yields a perfect elimination ordering exactly when the graph
// is chordal.
std::vector<int> mcs_selection(const Graph& g) {
    int n = g.vertex_count();
    std::vector<int> weight(n, 0);
    std::vector<char> numbered(n, 0);
    std::vector<int> selection;
    selection.reserve(n);
    for (int round = 0; round < n; ++round) {
        int best = -1;
        for (int v = 0; v < n; ++v) {
            if (!numbered[v] && (best < 0 || weight[v] > weight[best])) best = v;
        }
        numbered[best] = 1;
        selection.push_back(best);
        for (int u : g.neighbors(best)) {
            if (!numbered[u]) ++weight[u];
        }
    }
    return selection;
}

// Shortest x-y path avoiding `blocked`, or empty when none exists. BFS
// with ascending neighbor visits keeps the result deterministic.
std::vector<int> shortest_avoiding_path(const Graph& g, int x, int y,
                                        const std::vector<char>& blocked) {
    std::vector<int> parent(g.vertex_count(), -2);
    std::queue<int> q;
    parent[x] = -1;
    q.push(x);
    while (!q.empty() && parent[y] == -2) {
        int u = q.front();
        q.pop();
        for (int w : g.neighbors(u)) {
            if (parent[w] == -2 && !blocked[w]) {
                parent[w] = u;
                q.push(w);
            }
        }
    }
    if (parent[y] == -2) return {};
    std::vector<int> path;
    for (int v = y; v != -1; v = parent[v]) path.push_back(v);
    std::reverse(path.begin(), path.end());
    return path;
}

// A graph that is not chordal contains a triple (u, x, y) with x, y
// nonadjacent neighbors of u that stay connected once N[u] \ {x, y} is
// removed; closing the shortest such connection through u gives an induced
// cycle. Triples are scanned in ascending order, so the extracted witness
// is deterministic.
ForbiddenWitness extract_chordless_cycle(const Graph& g) {
    int n = g.vertex_count();
    std::vector<char> blocked(n, 0);
    for (int u = 0; u < n; ++u) {
        const auto& nbrs = g.neighbors(u);
        for (std::size_t a = 0; a < nbrs.size(); ++a) {
            for (std::size_t b = a + 1; b < nbrs.size(); ++b) {
                int x = nbrs[a];
                int y = nbrs[b];
                if (g.has_edge(x, y)) continue;
                std::fill(blocked.begin(), blocked.end(), 0);
                blocked[u] = 1;
                for (int w : nbrs) blocked[w] = 1;
                blocked[x] = 0;
                blocked[y] = 0;
                std::vector<int> path = shortest_avoiding_path(g, x, y, blocked);
                if (path.empty()) continue;
                std::vector<int> cycle;
                cycle.reserve(path.size() + 1);
                cycle.push_back(u);
                cycle.insert(cycle.end(), path.begin(), path.end());
                return ForbiddenWitness{ForbiddenWitness::Kind::ChordlessCycle, std::move(cycle)};
            }
        }
    }
    throw GraphError("internal: failed elimination ordering without a chordless cycle");
}

}  // namespace

std::variant<EliminationOrdering, ForbiddenWitness> is_chordal(const Graph& g) {
    std::vector<int> selection = mcs_selection(g);
    std::vector<int> elimination(selection.rbegin(), selection.rend());
    EliminationOrdering peo{std::move(elimination)};
    if (validate_elimination_ordering(g, peo)) return peo;
    return extract_chordless_cycle(g);
}

bool validate_elimination_ordering(const Graph& g, const EliminationOrdering& peo) {
    int n = g.vertex_count();
    if (static_cast<int>(peo.vertices.size()) != n) return false;
    std::vector<int> when(n, -1);
    for (int i = 0; i < n; ++i) {
        int v = peo.vertices[i];
        if (v < 0 || v >= n || when[v] != -1) return false;
        when[v] = i;
    }
    for (int v = 0; v < n; ++v) {
        std::vector<int> later;
        for (int u : g.neighbors(v)) {
            if (when[u] > when[v]) later.push_back(u);
        }
        for (std::size_t a = 0; a < later.size(); ++a) {
            for (std::size_t b = a + 1; b < later.size(); ++b) {
                if (!g.has_edge(later[a], later[b])) return false;
            }
        }
    }
    return true;
}

std::optional<ForbiddenWitness> find_induced_pattern(const Graph& g, Pattern pattern) {
    int n = g.vertex_count();
    switch (pattern) {
        case Pattern::Claw: {
            // center, then leaves ascending
            for (int c = 0; c < n; ++c) {
                const auto& nbrs = g.neighbors(c);
                for (std::size_t i = 0; i < nbrs.size(); ++i) {
                    for (std::size_t j = i + 1; j < nbrs.size(); ++j) {
                        if (g.has_edge(nbrs[i], nbrs[j])) continue;
                        for (std::size_t k = j + 1; k < nbrs.size(); ++k) {
                            if (g.has_edge(nbrs[i], nbrs[k]) || g.has_edge(nbrs[j], nbrs[k])) {
                                continue;
                            }
                            return ForbiddenWitness{ForbiddenWitness::Kind::Claw,
                                                    {c, nbrs[i], nbrs[j], nbrs[k]}};
                        }
                    }
                }
            }
            return std::nullopt;
        }
        case Pattern::Net: {
            // triangle a, b, c with pendants x-a, y-b, z-c
            for (int a = 0; a < n; ++a) {
                for (int b : g.neighbors(a)) {
                    for (int c : g.neighbors(a)) {
                        if (c == b || !g.has_edge(b, c)) continue;
                        for (int x : g.neighbors(a)) {
                            if (x == b || x == c || g.has_edge(x, b) || g.has_edge(x, c)) continue;
                            for (int y : g.neighbors(b)) {
                                if (y == a || y == c || y == x || g.has_edge(y, a) ||
                                    g.has_edge(y, c) || g.has_edge(y, x)) {
                                    continue;
                                }
                                for (int z : g.neighbors(c)) {
                                    if (z == a || z == b || z == x || z == y ||
                                        g.has_edge(z, a) || g.has_edge(z, b) ||
                                        g.has_edge(z, x) || g.has_edge(z, y)) {
                                        continue;
                                    }
                                    return ForbiddenWitness{ForbiddenWitness::Kind::Net,
                                                            {a, b, c, x, y, z}};
                                }
                            }
                        }
                    }
                }
            }
            return std::nullopt;
        }
        case Pattern::Tent: {
            // inner triangle b, c, e; outer a on {b,c}, d on {c,e}, f on {b,e}
            for (int b = 0; b < n; ++b) {
                for (int c : g.neighbors(b)) {
                    for (int e : g.neighbors(b)) {
                        if (e == c || !g.has_edge(c, e)) continue;
                        for (int a : g.neighbors(b)) {
                            if (a == c || a == e || !g.has_edge(a, c) || g.has_edge(a, e)) continue;
                            for (int d : g.neighbors(c)) {
                                if (d == b || d == e || d == a || !g.has_edge(d, e) ||
                                    g.has_edge(d, b) || g.has_edge(d, a)) {
                                    continue;
                                }
                                for (int f : g.neighbors(b)) {
                                    if (f == c || f == e || f == a || f == d ||
                                        !g.has_edge(f, e) || g.has_edge(f, c) ||
                                        g.has_edge(f, a) || g.has_edge(f, d)) {
                                        continue;
                                    }
                                    return ForbiddenWitness{ForbiddenWitness::Kind::Tent,
                                                            {b, c, e, a, d, f}};
                                }
                            }
                        }
                    }
                }
            }
            return std::nullopt;
        }
    }
    return std::nullopt;
}

Classification classify(const Graph& g) {
    Classification result;
    auto chordality = is_chordal(g);
    result.chordal = std::holds_alternative<EliminationOrdering>(chordality);
    if (!result.chordal) result.chordality_witness = std::get<ForbiddenWitness>(chordality);
    result.claw_witness = find_induced_pattern(g, Pattern::Claw);
    result.net_witness = find_induced_pattern(g, Pattern::Net);
    result.tent_witness = find_induced_pattern(g, Pattern::Tent);
    result.claw_free = !result.claw_witness.has_value();
    result.net_free = !result.net_witness.has_value();
    result.tent_free = !result.tent_witness.has_value();
    return result;
}

namespace {

bool check_exact_structure(const Graph& g, const std::vector<int>& v,
                           const std::vector<std::pair<int, int>>& edges) {
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] < 0 || v[i] >= g.vertex_count()) return false;
        for (std::size_t j = i + 1; j < v.size(); ++j) {
            if (v[i] == v[j]) return false;
        }
    }
    auto wanted = [&edges](std::size_t i, std::size_t j) {
        for (const auto& [a, b] : edges) {
            if ((a == static_cast<int>(i) && b == static_cast<int>(j)) ||
                (a == static_cast<int>(j) && b == static_cast<int>(i))) {
                return true;
            }
        }
        return false;
    };
    for (std::size_t i = 0; i < v.size(); ++i) {
        for (std::size_t j = i + 1; j < v.size(); ++j) {
            if (g.has_edge(v[i], v[j]) != wanted(i, j)) return false;
        }
    }
    return true;
}

}  // namespace

bool validate_witness(const Graph& g, const ForbiddenWitness& w) {
    switch (w.kind) {
        case ForbiddenWitness::Kind::ChordlessCycle: {
            int k = static_cast<int>(w.vertices.size());
            if (k < 4) return false;
            std::vector<std::pair<int, int>> edges;
            for (int i = 0; i < k; ++i) edges.emplace_back(i, (i + 1) % k);
            return check_exact_structure(g, w.vertices, edges);
        }
        case ForbiddenWitness::Kind::Claw:
            return w.vertices.size() == 4 &&
                   check_exact_structure(g, w.vertices, {{0, 1}, {0, 2}, {0, 3}});
        case ForbiddenWitness::Kind::Net:
            return w.vertices.size() == 6 &&
                   check_exact_structure(g, w.vertices,
                                         {{0, 1}, {0, 2}, {1, 2}, {3, 0}, {4, 1}, {5, 2}});
        case ForbiddenWitness::Kind::Tent:
            return w.vertices.size() == 6 &&
                   check_exact_structure(
                       g, w.vertices,
                       {{0, 1}, {0, 2}, {1, 2}, {3, 0}, {3, 1}, {4, 1}, {4, 2}, {5, 0}, {5, 2}});
    }
    return false;
}

}  // namespace cgk
