#include "cgk/straight.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "cgk/recognize.hpp"

namespace cgk {

Orientation::Orientation(Graph base, std::vector<std::pair<int, int>> arrows)
    : base_(std::move(base)), arrows_(std::move(arrows)) {
    const int n = base_.vertex_count();
    const auto edges = base_.edge_list();
    if (arrows_.size() != edges.size()) {
        throw GraphError("orientation must direct every edge exactly once");
    }
    std::vector<bool> seen(edges.size(), false);
    for (const auto& [u, v] : arrows_) {
        if (u < 0 || u >= n || v < 0 || v >= n || !base_.has_edge(u, v)) {
            throw GraphError("orientation arrow is not an edge of the base graph");
        }
        const std::pair<int, int> key = std::minmax(u, v);
        const auto it = std::lower_bound(edges.begin(), edges.end(), key);
        const auto idx = static_cast<std::size_t>(it - edges.begin());
        if (seen[idx]) throw GraphError("orientation directs an edge twice");
        seen[idx] = true;
    }
    std::sort(arrows_.begin(), arrows_.end());
    in_.assign(n, {});
    out_.assign(n, {});
    for (const auto& [u, v] : arrows_) {
        out_[u].push_back(v);
        in_[v].push_back(u);
    }
    for (auto& list : in_) std::sort(list.begin(), list.end());
}

bool Orientation::points(int u, int v) const {
    return std::binary_search(arrows_.begin(), arrows_.end(), std::pair<int, int>{u, v});
}

std::optional<int> first_straightness_failure(const Orientation& d,
                                              const VertexOrdering& order) {
    const int n = d.base().vertex_count();
    if (order.size() != n) {
        throw GraphError("order size does not match the orientation base");
    }
    for (int i = 1; i <= n; ++i) {
        const int v = order.vertex_at(i);
        const auto& in = d.inset(v);
        if (!in.empty()) {
            int lo = n + 1;
            int hi = 0;
            for (int u : in) {
                lo = std::min(lo, order.position(u));
                hi = std::max(hi, order.position(u));
            }
            if (hi != i - 1 || lo != i - static_cast<int>(in.size())) return i;
        }
        const auto& out = d.outset(v);
        if (!out.empty()) {
            int lo = n + 1;
            int hi = 0;
            for (int u : out) {
                lo = std::min(lo, order.position(u));
                hi = std::max(hi, order.position(u));
            }
            if (lo != i + 1 || hi != i + static_cast<int>(out.size())) return i;
        }
    }
    return std::nullopt;
}

bool is_straight_enumeration(const Orientation& d, const VertexOrdering& order) {
    return !first_straightness_failure(d, order).has_value();
}

Orientation orient_from_ordering(const Graph& g, const VertexOrdering& sigma) {
    if (check_proper_interval_ordering(g, sigma).has_value()) {
        throw GraphError("orient_from_ordering: ordering fails the umbrella condition");
    }
    std::vector<std::pair<int, int>> arrows;
    arrows.reserve(g.edge_count());
    for (const auto& [u, v] : g.edge_list()) {
        if (sigma.position(u) < sigma.position(v)) {
            arrows.emplace_back(u, v);
        } else {
            arrows.emplace_back(v, u);
        }
    }
    return Orientation(g, std::move(arrows));
}

std::optional<StraightEnumeration> straight_orientation(const Graph& g) {
    const auto sigma = recognize(g);
    if (!sigma.has_value()) return std::nullopt;
    Orientation d = orient_from_ordering(g, *sigma);
    if (first_straightness_failure(d, *sigma).has_value()) {
        throw GraphError("straight_orientation: verification failed");
    }
    return StraightEnumeration{*sigma, std::move(d)};
}

Orientation full_reversal(const Orientation& d) {
    std::vector<std::pair<int, int>> arrows;
    arrows.reserve(d.arrows().size());
    for (const auto& [u, v] : d.arrows()) arrows.emplace_back(v, u);
    return Orientation(d.base(), std::move(arrows));
}

std::vector<Orientation> all_straight_orientations(const Graph& g) {
    const int n = g.vertex_count();
    if (n > 7) throw GraphError("all_straight_orientations: guarded to n <= 7");
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::set<std::vector<std::pair<int, int>>> found;
    do {
        const VertexOrdering order = VertexOrdering::from_order(perm);
        std::vector<std::pair<int, int>> arrows;
        arrows.reserve(g.edge_count());
        for (const auto& [u, v] : g.edge_list()) {
            if (order.position(u) < order.position(v)) {
                arrows.emplace_back(u, v);
            } else {
                arrows.emplace_back(v, u);
            }
        }
        Orientation d(g, std::move(arrows));
        if (is_straight_enumeration(d, order)) found.insert(d.arrows());
    } while (std::next_permutation(perm.begin(), perm.end()));
    std::vector<Orientation> out;
    out.reserve(found.size());
    for (const auto& arrows : found) out.emplace_back(g, arrows);
    return out;
}

ReducedQuotient closed_neighborhood_classes(const Graph& g) {
    const int n = g.vertex_count();
    ReducedQuotient q;
    q.class_of.assign(n, -1);
    std::map<std::vector<int>, int> index_of;
    for (int v = 0; v < n; ++v) {
        std::vector<int> closed = g.neighbors(v);
        closed.insert(std::lower_bound(closed.begin(), closed.end(), v), v);
        const auto [it, inserted] =
            index_of.try_emplace(std::move(closed), static_cast<int>(q.classes.size()));
        if (inserted) {
            q.classes.push_back({v});
            q.representative.push_back(v);
        } else {
            q.classes[it->second].push_back(v);
        }
        q.class_of[v] = it->second;
    }
    const int k = static_cast<int>(q.classes.size());
    std::vector<std::pair<int, int>> edges;
    for (int a = 0; a < k; ++a) {
        for (int b = a + 1; b < k; ++b) {
            if (g.has_edge(q.representative[a], q.representative[b])) edges.emplace_back(a, b);
        }
    }
    q.quotient = build_graph(k, edges);
    return q;
}

bool is_reduced(const Graph& g) {
    return static_cast<int>(closed_neighborhood_classes(g).classes.size()) == g.vertex_count();
}

EdgeBalance classify_edge(const Graph& g, int u, int v) {
    const int n = g.vertex_count();
    if (u < 0 || u >= n || v < 0 || v >= n || !g.has_edge(u, v)) {
        throw GraphError("classify_edge: not an edge");
    }
    std::vector<int> cu = g.neighbors(u);
    cu.insert(std::lower_bound(cu.begin(), cu.end(), u), u);
    std::vector<int> cv = g.neighbors(v);
    cv.insert(std::lower_bound(cv.begin(), cv.end(), v), v);
    return cu == cv ? EdgeBalance::Balanced : EdgeBalance::Unbalanced;
}

VertexOrdering expand_quotient_ordering(const ReducedQuotient& q,
                                        const VertexOrdering& quotient_order) {
    if (quotient_order.size() != static_cast<int>(q.classes.size())) {
        throw GraphError("expand_quotient_ordering: order size does not match class count");
    }
    std::vector<int> order;
    order.reserve(q.class_of.size());
    for (int p = 1; p <= quotient_order.size(); ++p) {
        for (int v : q.classes[quotient_order.vertex_at(p)]) order.push_back(v);
    }
    return VertexOrdering::from_order(std::move(order));
}

}  // namespace cgk
