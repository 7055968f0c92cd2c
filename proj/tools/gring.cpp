#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "gring/runner.hpp"

namespace {

void add_output_flags(CLI::App* sub, gring::RunnerOptions& opts, std::string& format) {
    sub->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    sub->add_option("--artifact", opts.artifact_path, "also write the JSON report to this file");
}

void add_solve_flags(CLI::App* sub, gring::RunnerOptions& opts, long long& clamp) {
    sub->add_option("--jobs", opts.solve.jobs, "worker threads per order")
        ->check(CLI::PositiveNumber);
    sub->add_flag("--prune-power", opts.solve.prune_power,
                  "drop power combinations that contradict their witnesses");
    sub->add_option("--limit", opts.solve.limit, "abort after this many enumerated points")
        ->check(CLI::PositiveNumber);
    sub->add_option("--max-abs", clamp, "clamp every variable to [-N, N]")
        ->check(CLI::PositiveNumber);
    sub->add_flag("!--no-congruences", opts.solve.mu.congruences,
                  "skip the prime power layer conditions");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"integrality constraints for torsion units of integral group rings"};
    app.require_subcommand(1);

    gring::RunnerOptions opts;
    std::string format = "text";
    long long clamp = 0;
    std::string table_path, system_path;
    long order = 0;

    CLI::App* validate = app.add_subcommand("validate", "check a character table document");
    validate->add_option("table", table_path, "table JSON file")->required();
    validate->add_flag("!--no-orthogonality", opts.orthogonality,
                       "skip the row orthogonality check");
    add_output_flags(validate, opts, format);

    CLI::App* solve = app.add_subcommand("solve", "solve one unit order");
    solve->add_option("table", table_path, "table JSON file")->required();
    solve->add_option("order", order, "unit order to solve")->required()->check(CLI::Range(2l, 1000000l));
    add_output_flags(solve, opts, format);
    add_solve_flags(solve, opts, clamp);

    CLI::App* run = app.add_subcommand("run", "solve every candidate order and compare graphs");
    run->add_option("table", table_path, "table JSON file")->required();
    add_output_flags(run, opts, format);
    add_solve_flags(run, opts, clamp);

    CLI::App* graph = app.add_subcommand("graph", "prime graph comparison only");
    graph->add_option("table", table_path, "table JSON file")->required();
    add_output_flags(graph, opts, format);
    add_solve_flags(graph, opts, clamp);

    CLI::App* raw = app.add_subcommand("raw", "work on a standalone constraint system");
    raw->add_option("system", system_path, "system JSON file")->required();
    bool do_count = false, do_bounds = false;
    raw->add_flag("--count", do_count, "closed-form solution count instead of a listing");
    raw->add_flag("--bounds", do_bounds, "per-variable bounds instead of a listing");
    add_output_flags(raw, opts, format);
    add_solve_flags(raw, opts, clamp);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    opts.format = format == "json" ? gring::OutputFormat::Json : gring::OutputFormat::Text;
    if (clamp > 0) opts.solve.clamp_abs = gring::Integer(static_cast<long>(clamp));

    if (validate->parsed())
        return gring::cmd_validate(table_path, opts, std::cout, std::cerr);
    if (solve->parsed())
        return gring::cmd_solve(table_path, order, opts, std::cout, std::cerr);
    if (run->parsed()) return gring::cmd_run(table_path, opts, std::cout, std::cerr);
    if (graph->parsed()) return gring::cmd_graph(table_path, opts, std::cout, std::cerr);
    if (raw->parsed()) {
        const gring::RawMode mode = do_count    ? gring::RawMode::Count
                                    : do_bounds ? gring::RawMode::Bounds
                                                : gring::RawMode::Enumerate;
        return gring::cmd_raw(system_path, mode, opts, std::cout, std::cerr);
    }
    return 2;
}
