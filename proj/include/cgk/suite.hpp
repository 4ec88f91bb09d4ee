#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "json.hpp"

#include "cgk/graph.hpp"

namespace cgk::suite {

/// The sweeps are data-parallel over the graph enumeration; Serial is the
/// reference implementation the parallel kernels are tested against.
enum class ExecMode { Serial, Parallel };

struct Options {
    int max_n = 6;               // in [3, 7]
    std::uint64_t seed = 0;      // drives the random level at n = 7
    int random_samples = 500;    // graphs drawn at n = 7
    ExecMode mode = ExecMode::Parallel;
};

/// A graph on which at least one cross-check failed. `index` is the
/// enumeration mask for exhaustive levels and the sample index for the
/// random level.
struct Counterexample {
    int n = 0;
    std::uint64_t index = 0;
    std::string graph6;
    std::vector<std::string> failed;

    bool operator==(const Counterexample& other) const {
        return n == other.n && index == other.index && graph6 == other.graph6 &&
               failed == other.failed;
    }
};

struct LevelSummary {
    int n = 0;
    std::uint64_t graphs = 0;
    std::uint64_t counterexamples = 0;
    bool exhaustive = true;

    bool operator==(const LevelSummary& other) const {
        return n == other.n && graphs == other.graphs &&
               counterexamples == other.counterexamples && exhaustive == other.exhaustive;
    }
};

struct Report {
    Options options;
    std::vector<LevelSummary> levels;
    std::map<std::string, std::uint64_t> check_failures;  // every known check
    std::vector<Counterexample> counterexamples;          // sorted by (n, index)
    std::uint64_t total_graphs = 0;

    bool ok() const { return counterexamples.empty(); }
};

/// Names of the cross-checks run on every graph, in evaluation order:
///   four_way_equivalence        brute-force closed ordering exists
///                               = brute-force umbrella ordering exists
///                               = recognize succeeds
///                               = straight orientation exists
///   checker_agreement           (n <= 5) on connected graphs both ordering
///                               checkers agree on every permutation; on
///                               disconnected ones an umbrella pass still
///                               forces a closed pass
///   chordal_clawfree_narrow     (connected) recognized iff chordal,
///                               claw-free and narrow
///   narrow_iff_net_tent_free    (connected chordal claw-free) narrow iff
///                               net-free and tent-free
///   narrowness_oracle_agreement (connected) is_narrow verdict matches the
///                               enumerating oracle
///   forbidden_free_iff_recognized (connected) no forbidden structure iff
///                               recognized
///   representation_roundtrip    (recognized) built representation
///                               validates cleanly
///   uniqueness_up_to_reversal   (connected, reduced, recognized, >= 1
///                               edge) exactly two straight orientations,
///                               mutual full reversals
const std::vector<std::string>& check_names();

/// Runs every applicable cross-check; returns the names of those that
/// failed. Pure, so sweep workers can share nothing.
std::vector<std::string> evaluate_graph(const Graph& g);

/// Exhaustive levels n = 1..min(max_n, 6); with max_n = 7 an additional
/// level of seeded random connected graphs at n = 7. The report is
/// identical for both execution modes.
Report run_suite(const Options& opt);

/// Report as JSON. Execution mode is deliberately omitted so serial and
/// parallel runs serialize identically.
nlohmann::json report_json(const Report& r);

/// Worker count for parallel sweeps: CGK_THREADS when set to a positive
/// integer, otherwise the OpenMP default; 1 without OpenMP.
int resolve_threads();

}  // namespace cgk::suite
