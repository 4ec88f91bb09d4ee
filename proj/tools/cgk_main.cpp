#include <chrono>
#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "cgk/certificates.hpp"
#include "cgk/forbidden.hpp"
#include "cgk/graph.hpp"
#include "cgk/graph_io.hpp"
#include "cgk/interval.hpp"
#include "cgk/narrowness.hpp"
#include "cgk/ordering.hpp"
#include "cgk/recognize.hpp"
#include "cgk/straight.hpp"
#include "cgk/suite.hpp"

namespace {

using nlohmann::json;

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitError = 2;

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        return buffer.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open input file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

std::string text_render(const json& j) {
    std::ostringstream out;
    bool first = true;
    for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) out << ' ';
        first = false;
        out << it.key() << '=';
        if (it.value().is_string()) {
            out << it.value().get<std::string>();
        } else {
            out << it.value().dump();
        }
    }
    return out.str();
}

void emit(const json& j, bool as_json) {
    if (as_json) {
        std::cout << j.dump() << '\n';
    } else {
        std::cout << text_render(j) << '\n';
    }
}

std::string labels_csv(const std::vector<int>& vertices) {
    std::ostringstream out;
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        if (i) out << ',';
        out << vertices[i] + 1;
    }
    return out.str();
}

/// The canonical non-membership certificate: the first falsified structure
/// flag in the order chordal, claw-free, net-free, tent-free.
std::optional<cgk::ForbiddenWitness> pick_witness(const cgk::Classification& cls) {
    if (!cls.chordal) return cls.chordality_witness;
    if (!cls.claw_free) return cls.claw_witness;
    if (!cls.net_free) return cls.net_witness;
    if (!cls.tent_free) return cls.tent_witness;
    return std::nullopt;
}

[[noreturn]] void internal_error(const std::string& what) {
    throw std::runtime_error("internal certificate validation failed: " + what);
}

struct GraphArgs {
    std::string input = "-";
    std::string format = "auto";
    bool as_json = true;
};

void add_graph_args(CLI::App* cmd, GraphArgs& args) {
    cmd->add_option("input", args.input, "Input file; '-' reads standard input")
        ->capture_default_str();
    cmd->add_option("--format", args.format, "Input format; auto detects by first byte")
        ->check(CLI::IsMember({"auto", "edgelist", "graph6"}))
        ->capture_default_str();
    cmd->add_flag("--json,!--no-json", args.as_json, "JSON output (default on)");
}

/// Runs `handler` on the parsed input. graph6 input with several lines is
/// a batch: one result line per graph, exit 1 when any graph answers no.
int run_graph_command(const GraphArgs& args, bool allow_batch,
                      const std::function<int(const cgk::Graph&)>& handler) {
    const std::string text = read_input(args.input);
    cgk::GraphFormat format;
    if (args.format == "edgelist") {
        format = cgk::GraphFormat::EdgeList;
    } else if (args.format == "graph6") {
        format = cgk::GraphFormat::Graph6;
    } else {
        format = cgk::detect_format(text);
    }
    if (format == cgk::GraphFormat::Graph6) {
        const auto lines = cgk::significant_lines(text);
        if (lines.size() > 1) {
            if (!allow_batch) {
                throw std::runtime_error("this command accepts a single graph");
            }
            int worst = kExitYes;
            for (const auto& line : lines) {
                const cgk::Graph g = cgk::parse_graph6_line(line.text, line.number);
                worst = std::max(worst, handler(g));
            }
            return worst;
        }
    }
    return handler(cgk::parse_graph(text, format));
}

int report_no(const cgk::Graph& g, bool as_json) {
    const cgk::Classification cls = cgk::classify(g);
    const auto witness = pick_witness(cls);
    if (!witness || !cgk::validate_witness(g, *witness)) {
        internal_error("non-membership without a verifiable forbidden structure");
    }
    emit({{"verdict", "no"}, {"witness", cgk::witness_json(*witness)}}, as_json);
    return kExitNo;
}

int cmd_recognize(const cgk::Graph& g, bool as_json) {
    const auto sigma = cgk::recognize(g);
    if (!sigma) return report_no(g, as_json);
    if (cgk::check_proper_interval_ordering(g, *sigma)) internal_error("ordering");
    const cgk::IntervalRepresentation rep = cgk::build_representation(g, *sigma);
    if (!cgk::validate_representation(g, rep).empty()) internal_error("representation");
    const auto enumeration = cgk::straight_orientation(g);
    if (!enumeration ||
        cgk::first_straightness_failure(enumeration->orientation, enumeration->order)) {
        internal_error("orientation");
    }
    emit({{"verdict", "yes"},
          {"ordering", cgk::ordering_json(*sigma)},
          {"intervals", cgk::representation_json(rep, *sigma)},
          {"orientation", cgk::enumeration_json(*enumeration)}},
         as_json);
    return kExitYes;
}

int cmd_intervals(const cgk::Graph& g, bool as_json) {
    const auto sigma = cgk::recognize(g);
    if (!sigma) return report_no(g, as_json);
    const cgk::IntervalRepresentation rep = cgk::build_representation(g, *sigma);
    if (!cgk::validate_representation(g, rep).empty()) internal_error("representation");
    emit({{"verdict", "yes"},
          {"ordering", cgk::ordering_json(*sigma)},
          {"intervals", cgk::representation_json(rep, *sigma)}},
         as_json);
    return kExitYes;
}

int cmd_orient(const cgk::Graph& g, bool as_json) {
    const auto enumeration = cgk::straight_orientation(g);
    if (!enumeration) return report_no(g, as_json);
    if (cgk::first_straightness_failure(enumeration->orientation, enumeration->order)) {
        internal_error("orientation");
    }
    emit({{"verdict", "yes"}, {"orientation", cgk::enumeration_json(*enumeration)}}, as_json);
    return kExitYes;
}

int cmd_chordal(const cgk::Graph& g, bool as_json) {
    const auto result = cgk::is_chordal(g);
    if (const auto* peo = std::get_if<cgk::EliminationOrdering>(&result)) {
        if (!cgk::validate_elimination_ordering(g, *peo)) internal_error("elimination");
        emit({{"verdict", "yes"}, {"elimination", labels_csv(peo->vertices)}}, as_json);
        return kExitYes;
    }
    const auto& witness = std::get<cgk::ForbiddenWitness>(result);
    if (!cgk::validate_witness(g, witness)) internal_error("chordless cycle");
    emit({{"verdict", "no"}, {"witness", cgk::witness_json(witness)}}, as_json);
    return kExitNo;
}

int cmd_forbidden(const cgk::Graph& g, bool as_json) {
    const cgk::Classification cls = cgk::classify(g);
    json witnesses = json::array();
    for (const auto& w : {cls.chordality_witness, cls.claw_witness, cls.net_witness,
                          cls.tent_witness}) {
        if (w) {
            if (!cgk::validate_witness(g, *w)) internal_error("forbidden structure");
            witnesses.push_back(cgk::witness_json(*w));
        }
    }
    emit({{"verdict", cls.all() ? "yes" : "no"},
          {"chordal", cls.chordal},
          {"claw_free", cls.claw_free},
          {"net_free", cls.net_free},
          {"tent_free", cls.tent_free},
          {"witnesses", witnesses}},
         as_json);
    return cls.all() ? kExitYes : kExitNo;
}

int cmd_narrow(const cgk::Graph& g, bool as_json) {
    const auto witness = cgk::is_narrow(g);  // GraphError on disconnected input
    if (!witness) {
        emit({{"verdict", "yes"}}, as_json);
        return kExitYes;
    }
    if (!cgk::validate_narrowness_witness(g, *witness)) internal_error("narrowness");
    emit({{"verdict", "no"}, {"witness", cgk::narrowness_json(g, *witness)}}, as_json);
    return kExitNo;
}

int cmd_check_ordering(const cgk::Graph& g, const std::string& ordering_text,
                       const std::string& mode, bool as_json) {
    const cgk::VertexOrdering sigma =
        cgk::VertexOrdering::parse(ordering_text, g.vertex_count());
    const auto violation = mode == "proper" ? cgk::check_proper_interval_ordering(g, sigma)
                                            : cgk::check_closed_ordering(g, sigma);
    if (!violation) {
        emit({{"verdict", "yes"}, {"mode", mode}}, as_json);
        return kExitYes;
    }
    if (!cgk::validate_violation(g, sigma, *violation)) internal_error("ordering violation");
    emit({{"verdict", "no"}, {"mode", mode}, {"violation", cgk::violation_json(*violation)}},
         as_json);
    return kExitNo;
}

int cmd_suite(int max_n, std::uint64_t seed, int samples, bool serial, bool as_json) {
    cgk::suite::Options opt;
    opt.max_n = max_n;
    opt.seed = seed;
    opt.random_samples = samples;
    opt.mode = serial ? cgk::suite::ExecMode::Serial : cgk::suite::ExecMode::Parallel;
    const cgk::suite::Report report = cgk::suite::run_suite(opt);
    if (as_json) {
        std::cout << cgk::suite::report_json(report).dump() << '\n';
    } else {
        for (const auto& level : report.levels) {
            std::cout << "n=" << level.n << " graphs=" << level.graphs
                      << " counterexamples=" << level.counterexamples
                      << (level.exhaustive ? " exhaustive" : " random") << '\n';
        }
        for (const auto& cex : report.counterexamples) {
            std::cout << "counterexample " << cex.graph6 << " failed=";
            for (std::size_t i = 0; i < cex.failed.size(); ++i) {
                if (i) std::cout << ',';
                std::cout << cex.failed[i];
            }
            std::cout << '\n';
        }
        std::cout << "total_graphs=" << report.total_graphs << " ok="
                  << (report.ok() ? "true" : "false") << '\n';
    }
    return report.ok() ? kExitYes : kExitNo;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Certifying recognition for proper interval (closed) graphs"};
    app.require_subcommand(1);

    GraphArgs recognize_args;
    auto* recognize_cmd =
        app.add_subcommand("recognize", "Decide membership; emit a yes or no certificate");
    add_graph_args(recognize_cmd, recognize_args);

    GraphArgs check_args;
    std::string ordering_text;
    std::string mode = "closed";
    auto* check_cmd =
        app.add_subcommand("check-ordering", "Check one vertex ordering against a definition");
    add_graph_args(check_cmd, check_args);
    check_cmd->add_option("--ordering", ordering_text, "Comma-separated 1-based labels")
        ->required();
    check_cmd->add_option("--mode", mode, "Definition to check")
        ->check(CLI::IsMember({"closed", "proper"}))
        ->capture_default_str();

    GraphArgs narrow_args;
    auto* narrow_cmd =
        app.add_subcommand("narrow", "Test narrowness of a connected graph");
    add_graph_args(narrow_cmd, narrow_args);

    GraphArgs forbidden_args;
    auto* forbidden_cmd =
        app.add_subcommand("forbidden", "Search for chordless cycles, claws, nets and tents");
    add_graph_args(forbidden_cmd, forbidden_args);

    GraphArgs chordal_args;
    auto* chordal_cmd =
        app.add_subcommand("chordal", "Test chordality; emit an elimination ordering or a cycle");
    add_graph_args(chordal_cmd, chordal_args);

    GraphArgs orient_args;
    auto* orient_cmd =
        app.add_subcommand("orient", "Produce a straight orientation with its enumeration");
    add_graph_args(orient_cmd, orient_args);

    GraphArgs intervals_args;
    auto* intervals_cmd =
        app.add_subcommand("intervals", "Produce a proper interval representation");
    add_graph_args(intervals_cmd, intervals_args);

    int max_n = 6;
    std::uint64_t seed = 0;
    int samples = 500;
    bool serial = false;
    bool suite_json = true;
    auto* suite_cmd =
        app.add_subcommand("suite", "Cross-validate the equivalences by exhaustive search");
    suite_cmd->add_option("--max-n", max_n, "Largest vertex count, 3..7")
        ->capture_default_str();
    suite_cmd->add_option("--seed", seed, "Seed for the random level at n = 7")
        ->capture_default_str();
    suite_cmd->add_option("--samples", samples, "Random graphs drawn at n = 7")
        ->capture_default_str();
    suite_cmd->add_flag("--serial", serial, "Run the reference serial sweep");
    suite_cmd->add_flag("--json,!--no-json", suite_json, "JSON output (default on)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitError;
    }

    const auto started = std::chrono::steady_clock::now();
    int code = kExitError;
    try {
        if (recognize_cmd->parsed()) {
            code = run_graph_command(recognize_args, true, [&](const cgk::Graph& g) {
                return cmd_recognize(g, recognize_args.as_json);
            });
        } else if (check_cmd->parsed()) {
            code = run_graph_command(check_args, false, [&](const cgk::Graph& g) {
                return cmd_check_ordering(g, ordering_text, mode, check_args.as_json);
            });
        } else if (narrow_cmd->parsed()) {
            code = run_graph_command(narrow_args, true, [&](const cgk::Graph& g) {
                return cmd_narrow(g, narrow_args.as_json);
            });
        } else if (forbidden_cmd->parsed()) {
            code = run_graph_command(forbidden_args, true, [&](const cgk::Graph& g) {
                return cmd_forbidden(g, forbidden_args.as_json);
            });
        } else if (chordal_cmd->parsed()) {
            code = run_graph_command(chordal_args, true, [&](const cgk::Graph& g) {
                return cmd_chordal(g, chordal_args.as_json);
            });
        } else if (orient_cmd->parsed()) {
            code = run_graph_command(orient_args, true, [&](const cgk::Graph& g) {
                return cmd_orient(g, orient_args.as_json);
            });
        } else if (intervals_cmd->parsed()) {
            code = run_graph_command(intervals_args, true, [&](const cgk::Graph& g) {
                return cmd_intervals(g, intervals_args.as_json);
            });
        } else if (suite_cmd->parsed()) {
            code = cmd_suite(max_n, seed, samples, serial, suite_json);
        }
    } catch (const std::exception& e) {
        std::cerr << "cgk: error: " << e.what() << '\n';
        return kExitError;
    }
    const auto elapsed = std::chrono::duration<double, std::milli>(
        std::chrono::steady_clock::now() - started);
    std::cerr << "cgk: " << app.get_subcommands().front()->get_name() << " finished in "
              << elapsed.count() << " ms\n";
    return code;
}
