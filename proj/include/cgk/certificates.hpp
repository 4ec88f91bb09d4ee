#pragma once

#include <string>

#include "json.hpp"

#include "cgk/forbidden.hpp"
#include "cgk/graph.hpp"
#include "cgk/interval.hpp"
#include "cgk/narrowness.hpp"
#include "cgk/ordering.hpp"
#include "cgk/straight.hpp"

namespace cgk {

/// JSON shapes shared by the command-line front end and the tests. All
/// vertex labels in serialized form are 1-based.

std::string violation_kind_name(OrderingViolation::Kind kind);
std::string witness_kind_name(ForbiddenWitness::Kind kind);
std::string representation_violation_kind_name(RepresentationViolation::Kind kind);

/// {"kind": ..., "vertices": [...]} with role order preserved.
nlohmann::json witness_json(const ForbiddenWitness& w);

/// {"kind": ..., "vertices": [...]} plus, for the shared-endpoint kinds,
/// "edges": the two offending edges with endpoints sorted by label.
nlohmann::json violation_json(const OrderingViolation& v);

/// {"vertex": ..., "path": [...], "diameter": ...}.
nlohmann::json narrowness_json(const Graph& g, const NarrownessWitness& w);

/// {"order": [...], "arrows": [[from, to], ...]}.
nlohmann::json enumeration_json(const StraightEnumeration& se);

/// [{"vertex": ..., "l": ..., "r": ...}, ...] sorted by position.
nlohmann::json representation_json(const IntervalRepresentation& rep,
                                   const VertexOrdering& sigma);

/// [{"kind": ..., "u": ..., "v": ...}, ...] in validator order.
nlohmann::json representation_violations_json(const std::vector<RepresentationViolation>& vs);

/// "3,1,2": comma-separated 1-based labels in position order.
nlohmann::json ordering_json(const VertexOrdering& sigma);

}  // namespace cgk
