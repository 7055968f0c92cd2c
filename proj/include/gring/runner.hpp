#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gring/method.hpp"

namespace gring {

enum class OutputFormat { Text, Json };

struct RunnerOptions {
    OutputFormat format = OutputFormat::Text;
    SolveOptions solve;
    bool orthogonality = true;                // extra validation pass, needs class sizes
    std::optional<std::string> artifact_path; // also write the JSON report to this file
};

// everything one full pass over a table produces
struct RunReport {
    std::string group;
    std::vector<long> orders;               // candidate orders, ascending
    std::map<long, OrderResult> results;
    GraphReport graph;
};

RunReport run_table(const CharacterTable& t, const RunnerOptions& opts);

nlohmann::json report_json(const RunReport& rep);
nlohmann::json order_json(const OrderResult& r);

// Process-level entry points shared by the command line tool and the tests.
// Exit codes: 0 success, 1 domain failure (invalid table, exhausted limits,
// incomplete data), 2 unreadable or malformed input.
int cmd_validate(const std::string& table_path, const RunnerOptions& opts, std::ostream& out,
                 std::ostream& err);
int cmd_solve(const std::string& table_path, long order, const RunnerOptions& opts,
              std::ostream& out, std::ostream& err);
int cmd_run(const std::string& table_path, const RunnerOptions& opts, std::ostream& out,
            std::ostream& err);
int cmd_graph(const std::string& table_path, const RunnerOptions& opts, std::ostream& out,
              std::ostream& err);

enum class RawMode { Enumerate, Count, Bounds };
int cmd_raw(const std::string& system_path, RawMode mode, const RunnerOptions& opts,
            std::ostream& out, std::ostream& err);

} // namespace gring
