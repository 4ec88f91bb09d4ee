#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <variant>
#include <vector>

#include "cgk/fixtures.hpp"
#include "cgk/forbidden.hpp"
#include "cgk/graph.hpp"

using namespace cgk;
using namespace cgk::fixtures;

namespace {

// Independent chordality oracle: a graph is chordal exactly when no vertex
// subset induces a connected 2-regular subgraph on four or more vertices.
bool oracle_chordal(const Graph& g) {
    const int n = g.vertex_count();
    for (int mask = 0; mask < (1 << n); ++mask) {
        std::vector<int> s;
        for (int v = 0; v < n; ++v) {
            if (mask & (1 << v)) s.push_back(v);
        }
        if (s.size() < 4) continue;
        const Graph h = induced_subgraph(g, s).graph;
        bool two_regular = true;
        for (int v = 0; v < h.vertex_count(); ++v) {
            if (h.degree(v) != 2) two_regular = false;
        }
        if (two_regular && is_connected(h)) return false;
    }
    return true;
}

// Independent claw oracle: some 4-subset induces one degree-3 vertex and
// three degree-1 vertices.
bool oracle_has_claw(const Graph& g) {
    const int n = g.vertex_count();
    for (int mask = 0; mask < (1 << n); ++mask) {
        std::vector<int> s;
        for (int v = 0; v < n; ++v) {
            if (mask & (1 << v)) s.push_back(v);
        }
        if (s.size() != 4) continue;
        const Graph h = induced_subgraph(g, s).graph;
        if (h.edge_count() != 3) continue;
        int max_degree = 0;
        for (int v = 0; v < 4; ++v) max_degree = std::max(max_degree, h.degree(v));
        if (max_degree == 3) return true;
    }
    return false;
}

// Isomorphism by exhaustive permutation, used for the six-vertex patterns.
bool isomorphic(const Graph& g, const Graph& h) {
    if (g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count()) return false;
    const int n = g.vertex_count();
    auto sorted_degrees = [](const Graph& x) {
        std::vector<int> d;
        for (int v = 0; v < x.vertex_count(); ++v) d.push_back(x.degree(v));
        std::sort(d.begin(), d.end());
        return d;
    };
    if (sorted_degrees(g) != sorted_degrees(h)) return false;
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    do {
        bool match = true;
        for (int u = 0; u < n && match; ++u) {
            for (int v = u + 1; v < n && match; ++v) {
                if (g.has_edge(u, v) != h.has_edge(p[u], p[v])) match = false;
            }
        }
        if (match) return true;
    } while (std::next_permutation(p.begin(), p.end()));
    return false;
}

}  // namespace

TEST_CASE("chordality test matches the subset oracle on every graph up to n = 5") {
    for (int n = 1; n <= 5; ++n) {
        const GraphEnumeration en(n);
        en.for_each([&](const Graph& g) {
            const auto result = is_chordal(g);
            const bool chordal = std::holds_alternative<EliminationOrdering>(result);
            CHECK(chordal == oracle_chordal(g));
            if (chordal) {
                CHECK(validate_elimination_ordering(g, std::get<EliminationOrdering>(result)));
            } else {
                const auto& w = std::get<ForbiddenWitness>(result);
                CHECK(w.kind == ForbiddenWitness::Kind::ChordlessCycle);
                CHECK(w.vertices.size() >= 4);
                CHECK(validate_witness(g, w));
            }
        });
    }
}

TEST_CASE("claw search matches the subset oracle on every graph up to n = 5") {
    for (int n = 1; n <= 5; ++n) {
        const GraphEnumeration en(n);
        en.for_each([&](const Graph& g) {
            const auto w = find_induced_pattern(g, Pattern::Claw);
            CHECK(w.has_value() == oracle_has_claw(g));
            if (w) CHECK(validate_witness(g, *w));
            // six-vertex patterns cannot occur here
            CHECK_FALSE(find_induced_pattern(g, Pattern::Net).has_value());
            CHECK_FALSE(find_induced_pattern(g, Pattern::Tent).has_value());
        });
    }
}

TEST_CASE("six-vertex pattern search matches isomorphism testing at n = 6") {
    const Graph net_model = net();
    const Graph tent_model = tent();
    const GraphEnumeration en(6);
    en.for_each([&](const Graph& g) {
        // on exactly six vertices an induced copy uses every vertex
        const auto found_net = find_induced_pattern(g, Pattern::Net);
        const auto found_tent = find_induced_pattern(g, Pattern::Tent);
        CHECK(found_net.has_value() == isomorphic(g, net_model));
        CHECK(found_tent.has_value() == isomorphic(g, tent_model));
        if (found_net) CHECK(validate_witness(g, *found_net));
        if (found_tent) CHECK(validate_witness(g, *found_tent));
    });
}

TEST_CASE("frozen witnesses on the named fixtures") {
    const auto c4 = is_chordal(cycle(4));
    REQUIRE(std::holds_alternative<ForbiddenWitness>(c4));
    CHECK(std::get<ForbiddenWitness>(c4) ==
          ForbiddenWitness{ForbiddenWitness::Kind::ChordlessCycle, {0, 1, 2, 3}});

    const auto c5 = is_chordal(cycle(5));
    REQUIRE(std::holds_alternative<ForbiddenWitness>(c5));
    CHECK(std::get<ForbiddenWitness>(c5) ==
          ForbiddenWitness{ForbiddenWitness::Kind::ChordlessCycle, {0, 1, 2, 3, 4}});

    const auto cw = find_induced_pattern(claw(), Pattern::Claw);
    REQUIRE(cw.has_value());
    CHECK(*cw == ForbiddenWitness{ForbiddenWitness::Kind::Claw, {0, 1, 2, 3}});

    const auto nw = find_induced_pattern(net(), Pattern::Net);
    REQUIRE(nw.has_value());
    CHECK(*nw == ForbiddenWitness{ForbiddenWitness::Kind::Net, {0, 1, 2, 3, 4, 5}});

    const auto tw = find_induced_pattern(tent(), Pattern::Tent);
    REQUIRE(tw.has_value());
    CHECK(*tw == ForbiddenWitness{ForbiddenWitness::Kind::Tent, {1, 2, 4, 0, 3, 5}});

    const auto p4 = is_chordal(path(4));
    REQUIRE(std::holds_alternative<EliminationOrdering>(p4));
    CHECK(std::get<EliminationOrdering>(p4).vertices == std::vector<int>{3, 2, 1, 0});
}

TEST_CASE("classification flags on the named fixtures") {
    const Classification on_net = classify(net());
    CHECK(on_net.chordal);
    CHECK(on_net.claw_free);
    CHECK_FALSE(on_net.net_free);
    CHECK(on_net.tent_free);
    CHECK_FALSE(on_net.all());
    REQUIRE(on_net.net_witness.has_value());
    CHECK(validate_witness(net(), *on_net.net_witness));
    CHECK_FALSE(on_net.chordality_witness.has_value());

    const Classification on_tent = classify(tent());
    CHECK(on_tent.chordal);
    CHECK(on_tent.claw_free);
    CHECK(on_tent.net_free);
    CHECK_FALSE(on_tent.tent_free);

    const Classification on_c4 = classify(cycle(4));
    CHECK_FALSE(on_c4.chordal);
    CHECK(on_c4.claw_free);
    CHECK(on_c4.net_free);
    CHECK(on_c4.tent_free);

    const Classification on_claw = classify(claw());
    CHECK(on_claw.chordal);
    CHECK_FALSE(on_claw.claw_free);

    const Classification on_path = classify(path(6));
    CHECK(on_path.all());
}

TEST_CASE("witness validation rejects wrong structures") {
    CHECK_FALSE(validate_witness(claw(), {ForbiddenWitness::Kind::Claw, {1, 0, 2, 3}}));
    CHECK_FALSE(validate_witness(claw(), {ForbiddenWitness::Kind::Claw, {0, 1, 2}}));
    CHECK_FALSE(validate_witness(claw(), {ForbiddenWitness::Kind::Claw, {0, 1, 2, 4}}));
    CHECK_FALSE(validate_witness(claw(), {ForbiddenWitness::Kind::Claw, {0, 1, 1, 3}}));

    CHECK(validate_witness(cycle(4), {ForbiddenWitness::Kind::ChordlessCycle, {0, 1, 2, 3}}));
    CHECK(validate_witness(cycle(4), {ForbiddenWitness::Kind::ChordlessCycle, {1, 2, 3, 0}}));
    CHECK_FALSE(validate_witness(cycle(4), {ForbiddenWitness::Kind::ChordlessCycle, {0, 1, 3, 2}}));
    CHECK_FALSE(validate_witness(cycle(4), {ForbiddenWitness::Kind::ChordlessCycle, {0, 1, 2}}));
    CHECK_FALSE(
        validate_witness(complete(4), {ForbiddenWitness::Kind::ChordlessCycle, {0, 1, 2, 3}}));

    CHECK(validate_witness(net(), {ForbiddenWitness::Kind::Net, {0, 1, 2, 3, 4, 5}}));
    CHECK_FALSE(validate_witness(net(), {ForbiddenWitness::Kind::Net, {0, 1, 2, 4, 3, 5}}));
    CHECK(validate_witness(tent(), {ForbiddenWitness::Kind::Tent, {1, 2, 4, 0, 3, 5}}));
    CHECK_FALSE(validate_witness(tent(), {ForbiddenWitness::Kind::Tent, {0, 1, 2, 3, 4, 5}}));
}

TEST_CASE("elimination ordering validation") {
    CHECK(validate_elimination_ordering(path(4), {{3, 2, 1, 0}}));
    CHECK(validate_elimination_ordering(path(4), {{0, 1, 2, 3}}));
    CHECK_FALSE(validate_elimination_ordering(path(4), {{0, 1, 2}}));
    CHECK_FALSE(validate_elimination_ordering(path(4), {{0, 1, 2, 2}}));
    CHECK_FALSE(validate_elimination_ordering(cycle(4), {{0, 1, 2, 3}}));
    CHECK_FALSE(validate_elimination_ordering(cycle(4), {{3, 2, 1, 0}}));
    CHECK(validate_elimination_ordering(complete(4), {{2, 0, 3, 1}}));
}
