#include "cgk/interval.hpp"

namespace cgk {

IntervalRepresentation build_representation(const Graph& g, const VertexOrdering& sigma) {
    if (check_proper_interval_ordering(g, sigma).has_value()) {
        throw GraphError("build_representation: ordering fails the umbrella condition");
    }
    const int n = g.vertex_count();
    const AdjacencyProfile profile = adjacency_profile(g, sigma);
    IntervalRepresentation rep;
    rep.intervals.resize(n);
    const long long scale = n + 1;
    for (int i = 1; i <= n; ++i) {
        rep.intervals[sigma.vertex_at(i)] = Interval{i * scale,
                                                     profile.maxadj[i - 1] * scale + i};
    }
    return rep;
}

std::vector<RepresentationViolation> validate_representation(const Graph& g,
                                                             const IntervalRepresentation& rep) {
    const int n = g.vertex_count();
    if (static_cast<int>(rep.intervals.size()) != n) {
        throw GraphError("validate_representation: representation must cover every vertex");
    }
    for (const Interval& iv : rep.intervals) {
        if (iv.l > iv.r) throw GraphError("validate_representation: inverted interval");
    }
    std::vector<RepresentationViolation> out;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            const Interval& a = rep.intervals[u];
            const Interval& b = rep.intervals[v];
            const bool overlap = intervals_overlap(a, b);
            const bool edge = g.has_edge(u, v);
            if (overlap && !edge) {
                out.push_back({RepresentationViolation::Kind::FalseOverlap, u, v});
            } else if (!overlap && edge) {
                out.push_back({RepresentationViolation::Kind::MissingOverlap, u, v});
            }
            if (properly_contains(a, b)) {
                out.push_back({RepresentationViolation::Kind::Containment, u, v});
            } else if (properly_contains(b, a)) {
                out.push_back({RepresentationViolation::Kind::Containment, v, u});
            }
        }
    }
    return out;
}

}  // namespace cgk
