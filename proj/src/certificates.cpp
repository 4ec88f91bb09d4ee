#include "cgk/certificates.hpp"

#include <algorithm>

namespace cgk {

namespace {

nlohmann::json labels_json(const std::vector<int>& vertices) {
    nlohmann::json out = nlohmann::json::array();
    for (int v : vertices) out.push_back(v + 1);
    return out;
}

nlohmann::json edge_json(int u, int v) {
    return nlohmann::json::array({std::min(u, v) + 1, std::max(u, v) + 1});
}

}  // namespace

std::string violation_kind_name(OrderingViolation::Kind kind) {
    switch (kind) {
        case OrderingViolation::Kind::ProperTriple: return "proper_triple";
        case OrderingViolation::Kind::ClosedSharedMin: return "closed_shared_min";
        case OrderingViolation::Kind::ClosedSharedMax: return "closed_shared_max";
    }
    throw GraphError("unknown violation kind");
}

std::string witness_kind_name(ForbiddenWitness::Kind kind) {
    switch (kind) {
        case ForbiddenWitness::Kind::ChordlessCycle: return "chordless_cycle";
        case ForbiddenWitness::Kind::Claw: return "claw";
        case ForbiddenWitness::Kind::Net: return "net";
        case ForbiddenWitness::Kind::Tent: return "tent";
    }
    throw GraphError("unknown witness kind");
}

std::string representation_violation_kind_name(RepresentationViolation::Kind kind) {
    switch (kind) {
        case RepresentationViolation::Kind::FalseOverlap: return "false_overlap";
        case RepresentationViolation::Kind::MissingOverlap: return "missing_overlap";
        case RepresentationViolation::Kind::Containment: return "containment";
    }
    throw GraphError("unknown representation violation kind");
}

nlohmann::json witness_json(const ForbiddenWitness& w) {
    return {{"kind", witness_kind_name(w.kind)}, {"vertices", labels_json(w.vertices)}};
}

nlohmann::json violation_json(const OrderingViolation& v) {
    nlohmann::json out = {
        {"kind", violation_kind_name(v.kind)},
        {"vertices", labels_json({v.vertices[0], v.vertices[1], v.vertices[2]})},
    };
    const auto [a, b, c] = v.vertices;
    if (v.kind == OrderingViolation::Kind::ClosedSharedMin) {
        out["edges"] = nlohmann::json::array({edge_json(a, b), edge_json(a, c)});
    } else if (v.kind == OrderingViolation::Kind::ClosedSharedMax) {
        out["edges"] = nlohmann::json::array({edge_json(a, c), edge_json(b, c)});
    }
    return out;
}

nlohmann::json narrowness_json(const Graph& g, const NarrownessWitness& w) {
    return {{"vertex", w.vertex + 1},
            {"path", labels_json(w.path)},
            {"diameter", diameter(g)}};
}

nlohmann::json enumeration_json(const StraightEnumeration& se) {
    nlohmann::json arrows = nlohmann::json::array();
    for (const auto& [u, v] : se.orientation.arrows()) {
        arrows.push_back(nlohmann::json::array({u + 1, v + 1}));
    }
    return {{"order", labels_json(se.order.order())}, {"arrows", arrows}};
}

nlohmann::json representation_json(const IntervalRepresentation& rep,
                                   const VertexOrdering& sigma) {
    nlohmann::json out = nlohmann::json::array();
    for (int p = 1; p <= sigma.size(); ++p) {
        const int v = sigma.vertex_at(p);
        out.push_back({{"vertex", v + 1},
                       {"l", rep.intervals[v].l},
                       {"r", rep.intervals[v].r}});
    }
    return out;
}

nlohmann::json representation_violations_json(const std::vector<RepresentationViolation>& vs) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& v : vs) {
        out.push_back({{"kind", representation_violation_kind_name(v.kind)},
                       {"u", v.u + 1},
                       {"v", v.v + 1}});
    }
    return out;
}

nlohmann::json ordering_json(const VertexOrdering& sigma) {
    return sigma.to_label_string();
}

}  // namespace cgk
