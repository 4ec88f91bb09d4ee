#include "cgk/suite.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "cgk/forbidden.hpp"
#include "cgk/graph_io.hpp"
#include "cgk/interval.hpp"
#include "cgk/narrowness.hpp"
#include "cgk/ordering.hpp"
#include "cgk/random_graphs.hpp"
#include "cgk/recognize.hpp"
#include "cgk/straight.hpp"

namespace cgk::suite {

const std::vector<std::string>& check_names() {
    static const std::vector<std::string> names = {
        "four_way_equivalence",
        "checker_agreement",
        "chordal_clawfree_narrow",
        "narrow_iff_net_tent_free",
        "narrowness_oracle_agreement",
        "forbidden_free_iff_recognized",
        "representation_roundtrip",
        "uniqueness_up_to_reversal",
    };
    return names;
}

std::vector<std::string> evaluate_graph(const Graph& g) {
    std::vector<std::string> failed;
    const int n = g.vertex_count();
    const bool connected = is_connected(g);
    const auto sigma = recognize(g);
    const bool recognized = sigma.has_value();

    const bool closed_exists = brute_force_search(g, OrderingKind::Closed).has_value();
    const bool proper_exists = brute_force_search(g, OrderingKind::ProperInterval).has_value();
    const bool straight = straight_orientation(g).has_value();
    if (closed_exists != proper_exists || proper_exists != recognized ||
        recognized != straight) {
        failed.push_back("four_way_equivalence");
    }

    if (n <= 5) {
        // Pointwise agreement of the two checkers holds only on connected
        // graphs: an isolated vertex placed between the endpoints of an edge
        // passes the closed condition vacuously but breaks the umbrella
        // condition.  For disconnected graphs only one direction survives:
        // an umbrella pass forces a closed pass.
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        bool agree = true;
        do {
            const bool c = passes_closed_ordering(g, perm);
            const bool p = passes_proper_interval_ordering(g, perm);
            if (connected ? (c != p) : (p && !c)) {
                agree = false;
                break;
            }
        } while (std::next_permutation(perm.begin(), perm.end()));
        if (!agree) failed.push_back("checker_agreement");
    }

    if (connected) {
        const Classification cls = classify(g);
        const bool narrow = !is_narrow(g).has_value();
        if (recognized != (cls.chordal && cls.claw_free && narrow)) {
            failed.push_back("chordal_clawfree_narrow");
        }
        if (cls.chordal && cls.claw_free && narrow != (cls.net_free && cls.tent_free)) {
            failed.push_back("narrow_iff_net_tent_free");
        }
        if (narrow != !narrowness_oracle(g).has_value()) {
            failed.push_back("narrowness_oracle_agreement");
        }
        if (cls.all() != recognized) {
            failed.push_back("forbidden_free_iff_recognized");
        }
    }

    if (recognized) {
        const IntervalRepresentation rep = build_representation(g, *sigma);
        if (!validate_representation(g, rep).empty()) {
            failed.push_back("representation_roundtrip");
        }
    }

    if (connected && recognized && g.edge_count() >= 1 && is_reduced(g)) {
        const auto orientations = all_straight_orientations(g);
        if (orientations.size() != 2 ||
            !(full_reversal(orientations[0]) == orientations[1])) {
            failed.push_back("uniqueness_up_to_reversal");
        }
    }

    return failed;
}

int resolve_threads() {
#ifdef _OPENMP
    if (const char* env = std::getenv("CGK_THREADS")) {
        const int v = std::atoi(env);
        if (v > 0) return v;
    }
    return omp_get_max_threads();
#else
    return 1;
#endif
}

namespace {

// Evaluates graphs[i] for i in [0, count) and appends a counterexample per
// failing graph. The parallel path merges thread-local buffers sorted by
// index, so both modes produce identical reports.
template <typename GraphAt>
std::vector<Counterexample> sweep(int n, std::uint64_t count, ExecMode mode,
                                  const GraphAt& graph_at) {
    std::vector<Counterexample> out;
#ifdef _OPENMP
    if (mode == ExecMode::Parallel) {
        const int threads = resolve_threads();
        std::vector<std::vector<Counterexample>> buffers(threads);
#pragma omp parallel num_threads(threads)
        {
            auto& buffer = buffers[omp_get_thread_num()];
#pragma omp for schedule(dynamic, 64)
            for (long long i = 0; i < static_cast<long long>(count); ++i) {
                const Graph g = graph_at(static_cast<std::uint64_t>(i));
                auto failed = evaluate_graph(g);
                if (!failed.empty()) {
                    buffer.push_back({n, static_cast<std::uint64_t>(i),
                                      serialize_graph6(g), std::move(failed)});
                }
            }
        }
        for (auto& buffer : buffers) {
            out.insert(out.end(), std::make_move_iterator(buffer.begin()),
                       std::make_move_iterator(buffer.end()));
        }
        std::sort(out.begin(), out.end(),
                  [](const Counterexample& a, const Counterexample& b) {
                      return a.index < b.index;
                  });
        return out;
    }
#else
    (void)mode;
#endif
    for (std::uint64_t i = 0; i < count; ++i) {
        const Graph g = graph_at(i);
        auto failed = evaluate_graph(g);
        if (!failed.empty()) out.push_back({n, i, serialize_graph6(g), std::move(failed)});
    }
    return out;
}

}  // namespace

Report run_suite(const Options& opt) {
    if (opt.max_n < 3 || opt.max_n > 7) {
        throw GraphError("suite: max_n must lie in [3, 7]");
    }
    if (opt.random_samples < 0) {
        throw GraphError("suite: random_samples must be nonnegative");
    }
    Report report;
    report.options = opt;
    for (const auto& name : check_names()) report.check_failures[name] = 0;

    const int exhaustive_top = std::min(opt.max_n, 6);
    for (int n = 1; n <= exhaustive_top; ++n) {
        const GraphEnumeration en(n);
        auto found = sweep(n, en.size(), opt.mode,
                           [&](std::uint64_t mask) { return en.at(mask); });
        report.levels.push_back({n, en.size(), found.size(), true});
        report.total_graphs += en.size();
        for (auto& cex : found) report.counterexamples.push_back(std::move(cex));
    }

    if (opt.max_n >= 7) {
        std::mt19937_64 rng(opt.seed);
        std::vector<Graph> samples;
        samples.reserve(opt.random_samples);
        for (int i = 0; i < opt.random_samples; ++i) {
            samples.push_back(random_connected_graph(7, rng));
        }
        auto found = sweep(7, samples.size(), opt.mode,
                           [&](std::uint64_t i) { return samples[i]; });
        report.levels.push_back({7, samples.size(), found.size(), false});
        report.total_graphs += samples.size();
        for (auto& cex : found) report.counterexamples.push_back(std::move(cex));
    }

    for (const auto& cex : report.counterexamples) {
        for (const auto& name : cex.failed) ++report.check_failures[name];
    }
    return report;
}

nlohmann::json report_json(const Report& r) {
    nlohmann::json levels = nlohmann::json::array();
    for (const auto& level : r.levels) {
        levels.push_back({{"n", level.n},
                          {"graphs", level.graphs},
                          {"counterexamples", level.counterexamples},
                          {"exhaustive", level.exhaustive}});
    }
    nlohmann::json counterexamples = nlohmann::json::array();
    for (const auto& cex : r.counterexamples) {
        counterexamples.push_back({{"n", cex.n},
                                   {"index", cex.index},
                                   {"graph6", cex.graph6},
                                   {"failed", cex.failed}});
    }
    return {{"max_n", r.options.max_n},
            {"seed", r.options.seed},
            {"random_samples", r.options.random_samples},
            {"levels", levels},
            {"check_failures", r.check_failures},
            {"counterexamples", counterexamples},
            {"total_graphs", r.total_graphs},
            {"ok", r.ok()}};
}

}  // namespace cgk::suite
