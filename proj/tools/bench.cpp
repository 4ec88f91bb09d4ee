#include <chrono>
#include <cstdint>
#include <iostream>

#include "CLI11.hpp"

#include "cgk/suite.hpp"

namespace {

double run_timed(const cgk::suite::Options& opt, cgk::suite::Report& out) {
    const auto started = std::chrono::steady_clock::now();
    out = cgk::suite::run_suite(opt);
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Times the cross-validation sweep: serial reference vs parallel kernels"};
    int max_n = 5;
    std::uint64_t seed = 0;
    int samples = 200;
    app.add_option("--max-n", max_n, "Largest vertex count, 3..7")->capture_default_str();
    app.add_option("--seed", seed, "Seed for the random level at n = 7")->capture_default_str();
    app.add_option("--samples", samples, "Random graphs drawn at n = 7")->capture_default_str();
    CLI11_PARSE(app, argc, argv);

    cgk::suite::Options opt;
    opt.max_n = max_n;
    opt.seed = seed;
    opt.random_samples = samples;

    try {
        opt.mode = cgk::suite::ExecMode::Serial;
        cgk::suite::Report serial_report;
        const double serial_s = run_timed(opt, serial_report);

        opt.mode = cgk::suite::ExecMode::Parallel;
        cgk::suite::Report parallel_report;
        const double parallel_s = run_timed(opt, parallel_report);

        const bool match = cgk::suite::report_json(serial_report) ==
                           cgk::suite::report_json(parallel_report);

        std::cout << "graphs:   " << serial_report.total_graphs << '\n';
        std::cout << "threads:  " << cgk::suite::resolve_threads() << '\n';
        std::cout << "serial:   " << serial_s << " s\n";
        std::cout << "parallel: " << parallel_s << " s\n";
        std::cout << "speedup:  " << (parallel_s > 0 ? serial_s / parallel_s : 0.0) << "x\n";
        std::cout << "reports match: " << (match ? "yes" : "no") << '\n';
        return match ? 0 : 1;
    } catch (const std::exception& e) {
        std::cerr << "bench: error: " << e.what() << '\n';
        return 2;
    }
}
