#include "doctest.h"

#include <algorithm>
#include <array>
#include <numeric>
#include <optional>

#include "cgk/fixtures.hpp"
#include "cgk/graph.hpp"
#include "cgk/ordering.hpp"

using namespace cgk;
using namespace cgk::fixtures;

namespace {

// Literal reading of the umbrella condition: first violating position
// triple in lexicographic order.
std::optional<OrderingViolation> oracle_proper(const Graph& g, const VertexOrdering& s) {
    const int n = s.size();
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            for (int k = j + 1; k <= n; ++k) {
                const int vi = s.vertex_at(i);
                const int vj = s.vertex_at(j);
                const int vk = s.vertex_at(k);
                if (g.has_edge(vi, vk) && (!g.has_edge(vi, vj) || !g.has_edge(vj, vk))) {
                    return OrderingViolation{OrderingViolation::Kind::ProperTriple,
                                             {vi, vj, vk}};
                }
            }
        }
    }
    return std::nullopt;
}

// Literal reading of the pairwise edge condition: every violating edge
// pair keyed by its sorted position 4-tuple, global minimum returned.
std::optional<OrderingViolation> oracle_closed(const Graph& g, const VertexOrdering& s) {
    const int n = s.size();
    std::optional<std::array<int, 4>> best_key;
    std::optional<OrderingViolation> best;
    auto consider = [&](std::array<int, 4> key, OrderingViolation v) {
        if (!best_key || key < *best_key) {
            best_key = key;
            best = v;
        }
    };
    for (int p = 1; p <= n; ++p) {
        for (int a = p + 1; a <= n; ++a) {
            for (int b = a + 1; b <= n; ++b) {
                const int vp = s.vertex_at(p);
                const int va = s.vertex_at(a);
                const int vb = s.vertex_at(b);
                if (g.has_edge(vp, va) && g.has_edge(vp, vb) && !g.has_edge(va, vb)) {
                    consider({p, a, p, b},
                             {OrderingViolation::Kind::ClosedSharedMin, {vp, va, vb}});
                }
                if (g.has_edge(vp, vb) && g.has_edge(va, vb) && !g.has_edge(vp, va)) {
                    consider({p, b, a, b},
                             {OrderingViolation::Kind::ClosedSharedMax, {vp, va, vb}});
                }
            }
        }
    }
    return best;
}

bool same(const std::optional<OrderingViolation>& a, const std::optional<OrderingViolation>& b) {
    if (a.has_value() != b.has_value()) return false;
    return !a.has_value() || *a == *b;
}

}  // namespace

TEST_CASE("vertex ordering construction and parsing") {
    const VertexOrdering s = VertexOrdering::parse("3,1,2", 3);
    CHECK(s.order() == std::vector<int>{2, 0, 1});
    CHECK(s.vertex_at(1) == 2);
    CHECK(s.position(2) == 1);
    CHECK(s.to_label_string() == "3,1,2");
    CHECK(s.reversed().to_label_string() == "2,1,3");
    CHECK(VertexOrdering::identity(4).to_label_string() == "1,2,3,4");

    CHECK_THROWS_AS(VertexOrdering::parse("1,2", 3), GraphError);
    CHECK_THROWS_AS(VertexOrdering::parse("1,2,2", 3), GraphError);
    CHECK_THROWS_AS(VertexOrdering::parse("1,2,4", 3), GraphError);
    CHECK_THROWS_AS(VertexOrdering::parse("1,x,3", 3), GraphError);
    CHECK_THROWS_AS(VertexOrdering::parse("", 3), GraphError);
    CHECK_THROWS_AS(VertexOrdering::from_order({0, 0, 1}), GraphError);
    CHECK_THROWS_AS(VertexOrdering::from_order({0, 3}), GraphError);
}

TEST_CASE("frozen checker verdicts") {
    const Graph p3 = path(3);
    CHECK_FALSE(check_closed_ordering(p3, VertexOrdering::identity(3)).has_value());
    CHECK_FALSE(check_proper_interval_ordering(p3, VertexOrdering::identity(3)).has_value());

    // natural path order broken by swapping the first two vertices
    const auto bad = check_proper_interval_ordering(p3, VertexOrdering::parse("2,1,3", 3));
    REQUIRE(bad.has_value());
    CHECK(bad->kind == OrderingViolation::Kind::ProperTriple);
    CHECK(bad->vertices == std::array<int, 3>{1, 0, 2});
    CHECK(validate_violation(p3, VertexOrdering::parse("2,1,3", 3), *bad));

    // claw in its natural labeling: both edges leave the center first
    const auto shared = check_closed_ordering(claw(), VertexOrdering::identity(4));
    REQUIRE(shared.has_value());
    CHECK(shared->kind == OrderingViolation::Kind::ClosedSharedMin);
    CHECK(shared->vertices == std::array<int, 3>{0, 1, 2});

    // same claw, center moved last: the edges now share their later endpoint
    const auto last = check_closed_ordering(claw(), VertexOrdering::parse("2,3,4,1", 4));
    REQUIRE(last.has_value());
    CHECK(last->kind == OrderingViolation::Kind::ClosedSharedMax);
    CHECK(last->vertices == std::array<int, 3>{1, 2, 0});
}

TEST_CASE("checkers match their literal oracles on every graph and ordering up to n = 4") {
    for (int n = 1; n <= 4; ++n) {
        const GraphEnumeration en(n);
        std::vector<int> perm(n);
        en.for_each([&](const Graph& g) {
            const bool connected = is_connected(g);
            std::iota(perm.begin(), perm.end(), 0);
            do {
                const VertexOrdering s = VertexOrdering::from_order(perm);
                const auto fast_p = check_proper_interval_ordering(g, s);
                const auto fast_c = check_closed_ordering(g, s);
                CHECK(same(fast_p, oracle_proper(g, s)));
                CHECK(same(fast_c, oracle_closed(g, s)));
                CHECK(passes_proper_interval_ordering(g, perm) == !fast_p.has_value());
                CHECK(passes_closed_ordering(g, perm) == !fast_c.has_value());
                if (connected) {
                    CHECK(orderings_agree(g, s));
                } else if (!fast_p) {
                    // only one direction survives disconnection
                    CHECK_FALSE(fast_c.has_value());
                }
                if (fast_p) CHECK(validate_violation(g, s, *fast_p));
                if (fast_c) CHECK(validate_violation(g, s, *fast_c));
            } while (std::next_permutation(perm.begin(), perm.end()));
        });
    }
}

TEST_CASE("an isolated vertex between adjacent positions splits the checkers") {
    // edge {v1, v3} with the lone vertex sitting at position 2: the closed
    // condition is vacuous (no two edges share an endpoint) but the umbrella
    // condition demands edges from the middle vertex
    Graph g(3);
    g.add_edge(0, 2);
    const VertexOrdering s = VertexOrdering::identity(3);
    CHECK_FALSE(check_closed_ordering(g, s).has_value());
    const auto viol = check_proper_interval_ordering(g, s);
    REQUIRE(viol.has_value());
    CHECK(viol->kind == OrderingViolation::Kind::ProperTriple);
    CHECK(viol->vertices == std::array<int, 3>{0, 1, 2});
    CHECK_FALSE(orderings_agree(g, s));
}

TEST_CASE("checkers match their oracles on larger fixtures") {
    std::vector<Graph> graphs = {net(), tent(), path(6), cycle(6), complete(6),
                                 clique_path({2, 1, 3}), claw()};
    for (const Graph& g : graphs) {
        std::vector<int> perm(g.vertex_count());
        std::iota(perm.begin(), perm.end(), 0);
        // a spread of deterministic orderings rather than all n!
        for (int round = 0; round < 64; ++round) {
            const VertexOrdering s = VertexOrdering::from_order(perm);
            CHECK(same(check_proper_interval_ordering(g, s), oracle_proper(g, s)));
            CHECK(same(check_closed_ordering(g, s), oracle_closed(g, s)));
            for (int step = 0; step < 7; ++step) {
                std::next_permutation(perm.begin(), perm.end());
            }
        }
    }
}

TEST_CASE("adjacency profile of the natural path order") {
    const auto profile = adjacency_profile(path(3), VertexOrdering::identity(3));
    CHECK(profile.minadj == std::vector<int>{1, 1, 2});
    CHECK(profile.maxadj == std::vector<int>{2, 3, 3});
}

TEST_CASE("brute-force search returns the lexicographically least ordering") {
    const auto p4 = brute_force_search(path(4), OrderingKind::ProperInterval);
    REQUIRE(p4.has_value());
    CHECK(p4->to_label_string() == "1,2,3,4");

    const auto k3 = brute_force_search(complete(3), OrderingKind::Closed);
    REQUIRE(k3.has_value());
    CHECK(k3->to_label_string() == "1,2,3");

    CHECK_FALSE(brute_force_search(claw(), OrderingKind::Closed).has_value());
    CHECK_FALSE(brute_force_search(cycle(4), OrderingKind::ProperInterval).has_value());
    CHECK_THROWS_AS(brute_force_search(Graph(11), OrderingKind::Closed), GraphError);
}

TEST_CASE("validate_violation rejects mismatched reports") {
    const Graph p3 = path(3);
    const VertexOrdering id = VertexOrdering::identity(3);
    // P3 in natural order has no violation, so any claim must fail
    CHECK_FALSE(validate_violation(
        p3, id, {OrderingViolation::Kind::ProperTriple, {0, 1, 2}}));
    CHECK_FALSE(validate_violation(
        p3, id, {OrderingViolation::Kind::ClosedSharedMin, {0, 1, 2}}));
    // out of range and out of order
    CHECK_FALSE(validate_violation(
        p3, id, {OrderingViolation::Kind::ProperTriple, {0, 1, 3}}));
    CHECK_FALSE(validate_violation(
        p3, id, {OrderingViolation::Kind::ProperTriple, {2, 1, 0}}));
}
