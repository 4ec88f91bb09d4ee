#include "cgk/ordering.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

namespace cgk {

namespace {

void require_matching_size(const Graph& g, int size) {
    if (size != g.vertex_count()) {
        throw GraphError("ordering has " + std::to_string(size) + " entries for a graph on " +
                         std::to_string(g.vertex_count()) + " vertices");
    }
}

std::vector<int> position_of(const std::vector<int>& order) {
    std::vector<int> pos(order.size());
    for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = static_cast<int>(i);
    return pos;
}

// Sorted 0-based neighbor positions for every position.
std::vector<std::vector<int>> position_adjacency(const Graph& g, const std::vector<int>& order) {
    std::vector<int> pos = position_of(order);
    std::vector<std::vector<int>> padj(order.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
        const auto& nbrs = g.neighbors(order[i]);
        padj[i].reserve(nbrs.size());
        for (int u : nbrs) padj[i].push_back(pos[u]);
        std::sort(padj[i].begin(), padj[i].end());
    }
    return padj;
}

// Neighbor-position bitmasks; only valid when g.has_masks().
std::vector<std::uint64_t> position_masks(const Graph& g, const std::vector<int>& order) {
    std::vector<int> pos = position_of(order);
    std::vector<std::uint64_t> pmask(order.size(), 0);
    for (std::size_t i = 0; i < order.size(); ++i) {
        for (int u : g.neighbors(order[i])) pmask[i] |= 1ull << pos[u];
    }
    return pmask;
}

bool proper_ok_masks(const std::vector<std::uint64_t>& pmask) {
    int n = static_cast<int>(pmask.size());
    for (int i = 0; i < n; ++i) {
        std::uint64_t lo = i == 0 ? 0 : pmask[i] & ((1ull << i) - 1);
        std::uint64_t hi = pmask[i] >> (i + 1);
        if (hi & (hi + 1)) return false;  // not a block starting right after i
        if (lo) {
            int h = std::popcount(lo);
            if (lo != (((1ull << h) - 1) << (i - h))) return false;  // not a block ending at i-1
        }
    }
    return true;
}

bool closed_ok_masks(const std::vector<std::uint64_t>& pmask) {
    int n = static_cast<int>(pmask.size());
    for (int p = 0; p < n; ++p) {
        std::uint64_t up = pmask[p] >> (p + 1) << (p + 1);
        for (std::uint64_t rest = up; rest;) {
            int a = std::countr_zero(rest);
            rest &= rest - 1;
            if (up & ~pmask[a] & ~(1ull << a)) return false;
        }
        std::uint64_t down = p == 0 ? 0 : pmask[p] & ((1ull << p) - 1);
        for (std::uint64_t rest = down; rest;) {
            int a = std::countr_zero(rest);
            rest &= rest - 1;
            if (down & ~pmask[a] & ~(1ull << a)) return false;
        }
    }
    return true;
}

struct ContiguityStats {
    int minadj, maxadj;  // 0-based positions, i itself when isolated
    int below, above;    // neighbor counts on each side
};

std::vector<ContiguityStats> contiguity_stats(const std::vector<std::vector<int>>& padj) {
    std::vector<ContiguityStats> stats(padj.size());
    for (std::size_t i = 0; i < padj.size(); ++i) {
        ContiguityStats s{static_cast<int>(i), static_cast<int>(i), 0, 0};
        for (int p : padj[i]) {
            s.minadj = std::min(s.minadj, p);
            s.maxadj = std::max(s.maxadj, p);
            if (p < static_cast<int>(i)) ++s.below;
            if (p > static_cast<int>(i)) ++s.above;
        }
        stats[i] = s;
    }
    return stats;
}

bool proper_ok_generic(const std::vector<ContiguityStats>& stats) {
    for (std::size_t i = 0; i < stats.size(); ++i) {
        const auto& s = stats[i];
        if (s.maxadj > static_cast<int>(i) && s.above != s.maxadj - static_cast<int>(i)) return false;
        if (s.minadj < static_cast<int>(i) && s.below != static_cast<int>(i) - s.minadj) return false;
    }
    return true;
}

// Least position that begins a violating triple: either a position whose
// upward neighborhood is not a block, or the minadj of a position whose
// downward neighborhood is not a block.
int least_violating_start(const std::vector<ContiguityStats>& stats) {
    int best = -1;
    for (std::size_t i = 0; i < stats.size(); ++i) {
        const auto& s = stats[i];
        if (s.maxadj > static_cast<int>(i) && s.above != s.maxadj - static_cast<int>(i)) {
            best = best < 0 ? static_cast<int>(i) : std::min(best, static_cast<int>(i));
            break;  // later upward failures cannot beat this i
        }
    }
    for (std::size_t k = 0; k < stats.size(); ++k) {
        const auto& s = stats[k];
        if (s.minadj < static_cast<int>(k) && s.below != static_cast<int>(k) - s.minadj) {
            best = best < 0 ? s.minadj : std::min(best, s.minadj);
        }
    }
    return best;
}

}  // namespace

VertexOrdering VertexOrdering::from_order(std::vector<int> order) {
    int n = static_cast<int>(order.size());
    std::vector<int> pos(order.size(), -1);
    for (int i = 0; i < n; ++i) {
        int v = order[i];
        if (v < 0 || v >= n) {
            throw GraphError("ordering entry " + std::to_string(v) + " out of range [0, " +
                             std::to_string(n) + ")");
        }
        if (pos[v] != -1) throw GraphError("ordering repeats vertex " + std::to_string(v));
        pos[v] = i;
    }
    VertexOrdering sigma;
    sigma.order_ = std::move(order);
    sigma.pos_ = std::move(pos);
    return sigma;
}

VertexOrdering VertexOrdering::identity(int n) {
    std::vector<int> order(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) order[i] = i;
    return from_order(std::move(order));
}

VertexOrdering VertexOrdering::parse(const std::string& text, int n) {
    std::vector<int> order;
    std::string token;
    std::istringstream in(text);
    bool any = false;
    while (std::getline(in, token, ',')) {
        any = true;
        std::istringstream field(token);
        long long label;
        std::string extra;
        if (!(field >> label) || (field >> extra)) {
            throw GraphError("malformed ordering entry \"" + token + "\"");
        }
        if (label < 1 || label > n) {
            throw GraphError("ordering label " + std::to_string(label) + " out of range [1, " +
                             std::to_string(n) + "]");
        }
        order.push_back(static_cast<int>(label) - 1);
    }
    if (!any && n > 0) throw GraphError("empty ordering for a graph on " + std::to_string(n) + " vertices");
    if (static_cast<int>(order.size()) != n) {
        throw GraphError("ordering lists " + std::to_string(order.size()) + " labels for a graph on " +
                         std::to_string(n) + " vertices");
    }
    return from_order(std::move(order));
}

VertexOrdering VertexOrdering::reversed() const {
    std::vector<int> order(order_.rbegin(), order_.rend());
    return from_order(std::move(order));
}

std::string VertexOrdering::to_label_string() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < order_.size(); ++i) {
        if (i) out << ',';
        out << order_[i] + 1;
    }
    return out.str();
}

bool passes_proper_interval_ordering(const Graph& g, const std::vector<int>& order) {
    require_matching_size(g, static_cast<int>(order.size()));
    if (g.vertex_count() <= 1) return true;
    if (g.has_masks()) return proper_ok_masks(position_masks(g, order));
    return proper_ok_generic(contiguity_stats(position_adjacency(g, order)));
}

bool passes_closed_ordering(const Graph& g, const std::vector<int>& order) {
    require_matching_size(g, static_cast<int>(order.size()));
    if (g.vertex_count() <= 1) return true;
    if (g.has_masks()) return closed_ok_masks(position_masks(g, order));
    const auto padj = position_adjacency(g, order);
    int n = g.vertex_count();
    for (int p = 0; p < n; ++p) {
        const auto& ps = padj[p];
        for (std::size_t x = 0; x < ps.size(); ++x) {
            for (std::size_t y = x + 1; y < ps.size(); ++y) {
                bool both_up = ps[x] > p && ps[y] > p;
                bool both_down = ps[x] < p && ps[y] < p;
                if ((both_up || both_down) && !g.has_edge(order[ps[x]], order[ps[y]])) return false;
            }
        }
    }
    return true;
}

std::optional<OrderingViolation> check_proper_interval_ordering(const Graph& g,
                                                                const VertexOrdering& sigma) {
    require_matching_size(g, sigma.size());
    const auto& order = sigma.order();
    if (g.vertex_count() <= 2) return std::nullopt;
    if (g.has_masks() && proper_ok_masks(position_masks(g, order))) return std::nullopt;

    const auto padj = position_adjacency(g, order);
    const auto stats = contiguity_stats(padj);
    int i = least_violating_start(stats);
    if (i < 0) return std::nullopt;

    // Least violating triple starts at i; find the least (j, k) completing it.
    int n = g.vertex_count();
    const auto& ai = padj[i];
    for (int j = i + 1; j < n; ++j) {
        auto it = std::upper_bound(ai.begin(), ai.end(), j);
        if (it == ai.end()) break;  // no edge {v_i, v_k} with k > j exists
        if (!g.has_edge(order[i], order[j])) {
            return OrderingViolation{OrderingViolation::Kind::ProperTriple,
                                     {order[i], order[j], order[*it]}};
        }
        for (; it != ai.end(); ++it) {
            if (!g.has_edge(order[j], order[*it])) {
                return OrderingViolation{OrderingViolation::Kind::ProperTriple,
                                         {order[i], order[j], order[*it]}};
            }
        }
    }
    throw GraphError("internal: contiguity failure without a violating triple");
}

std::optional<OrderingViolation> check_closed_ordering(const Graph& g,
                                                       const VertexOrdering& sigma) {
    require_matching_size(g, sigma.size());
    const auto& order = sigma.order();
    if (g.vertex_count() <= 2) return std::nullopt;
    if (g.has_masks() && closed_ok_masks(position_masks(g, order))) return std::nullopt;

    const auto padj = position_adjacency(g, order);
    int n = g.vertex_count();

    // Earliest violating pair of edges sharing their earlier endpoint,
    // scanned in lexicographic (p, a, b) order so the first hit is least.
    std::array<int, 3> shared_min{-1, -1, -1};
    for (int p = 0; p < n && shared_min[0] < 0; ++p) {
        const auto& ps = padj[p];
        auto first_up = std::upper_bound(ps.begin(), ps.end(), p);
        for (auto a = first_up; a != ps.end() && shared_min[0] < 0; ++a) {
            for (auto b = a + 1; b != ps.end(); ++b) {
                if (!g.has_edge(order[*a], order[*b])) {
                    shared_min = {p, *a, *b};
                    break;
                }
            }
        }
    }

    // Least violating pair sharing their later endpoint, compared through
    // the edge-pair tuple (i, q, k, q).
    std::array<int, 3> shared_max{-1, -1, -1};  // stores (i, k, q)
    for (int q = 0; q < n; ++q) {
        const auto& ps = padj[q];
        auto last_down = std::lower_bound(ps.begin(), ps.end(), q);
        bool found = false;
        for (auto i = ps.begin(); i != last_down && !found; ++i) {
            for (auto k = i + 1; k != last_down; ++k) {
                if (!g.has_edge(order[*i], order[*k])) {
                    std::array<int, 3> cand{*i, *k, q};
                    if (shared_max[0] < 0 ||
                        std::array<int, 4>{cand[0], cand[2], cand[1], cand[2]} <
                            std::array<int, 4>{shared_max[0], shared_max[2], shared_max[1],
                                               shared_max[2]}) {
                        shared_max = cand;
                    }
                    found = true;
                    break;
                }
            }
        }
    }

    if (shared_min[0] < 0 && shared_max[0] < 0) return std::nullopt;
    bool use_min;
    if (shared_min[0] < 0) {
        use_min = false;
    } else if (shared_max[0] < 0) {
        use_min = true;
    } else {
        std::array<int, 4> tmin{shared_min[0], shared_min[1], shared_min[0], shared_min[2]};
        std::array<int, 4> tmax{shared_max[0], shared_max[2], shared_max[1], shared_max[2]};
        use_min = tmin < tmax;
    }
    if (use_min) {
        return OrderingViolation{OrderingViolation::Kind::ClosedSharedMin,
                                 {order[shared_min[0]], order[shared_min[1]], order[shared_min[2]]}};
    }
    return OrderingViolation{OrderingViolation::Kind::ClosedSharedMax,
                             {order[shared_max[0]], order[shared_max[1]], order[shared_max[2]]}};
}

bool orderings_agree(const Graph& g, const VertexOrdering& sigma) {
    return passes_closed_ordering(g, sigma.order()) ==
           passes_proper_interval_ordering(g, sigma.order());
}

AdjacencyProfile adjacency_profile(const Graph& g, const VertexOrdering& sigma) {
    require_matching_size(g, sigma.size());
    const auto stats = contiguity_stats(position_adjacency(g, sigma.order()));
    AdjacencyProfile profile;
    profile.minadj.reserve(stats.size());
    profile.maxadj.reserve(stats.size());
    for (const auto& s : stats) {
        profile.minadj.push_back(s.minadj + 1);
        profile.maxadj.push_back(s.maxadj + 1);
    }
    return profile;
}

std::optional<VertexOrdering> brute_force_search(const Graph& g, OrderingKind kind) {
    int n = g.vertex_count();
    if (n > 10) {
        throw GraphError("brute-force ordering search is guarded to n <= 10, got " +
                         std::to_string(n));
    }
    std::vector<int> perm(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) perm[i] = i;
    do {
        bool ok = kind == OrderingKind::Closed ? passes_closed_ordering(g, perm)
                                               : passes_proper_interval_ordering(g, perm);
        if (ok) return VertexOrdering::from_order(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return std::nullopt;
}

bool validate_violation(const Graph& g, const VertexOrdering& sigma,
                        const OrderingViolation& violation) {
    const auto& [x, y, z] = violation.vertices;
    for (int v : violation.vertices) {
        if (v < 0 || v >= g.vertex_count()) return false;
    }
    if (x == y || y == z || x == z) return false;
    if (!(sigma.position(x) < sigma.position(y) && sigma.position(y) < sigma.position(z))) {
        return false;
    }
    switch (violation.kind) {
        case OrderingViolation::Kind::ProperTriple:
            return g.has_edge(x, z) && (!g.has_edge(x, y) || !g.has_edge(y, z));
        case OrderingViolation::Kind::ClosedSharedMin:
            return g.has_edge(x, y) && g.has_edge(x, z) && !g.has_edge(y, z);
        case OrderingViolation::Kind::ClosedSharedMax:
            return g.has_edge(x, z) && g.has_edge(y, z) && !g.has_edge(x, y);
    }
    return false;
}

}  // namespace cgk
