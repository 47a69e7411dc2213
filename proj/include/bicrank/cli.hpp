#pragma once
// Batch verification front end: named series dumps, theorem-by-theorem
// verification runs, and the dominance-threshold scan, each rendered as
// CSV or JSON with a stable schema. Pure functions over a RunConfig so
// runs are reproducible byte for byte.

#include <string>
#include <vector>

namespace bicrank {

struct RunConfig {
    std::string command;     // expand | verify | threshold
    std::string name;        // series name or theorem key
    long order = -1;         // -1: per-command default
    int modulus = 3;
    long lo = -1, hi = -1;   // -1: per-command default range
    long precision = 192;
    std::string format = "csv";  // csv | json
};

struct RunResult {
    int exit_code = 0;  // 0 iff no unexpected failure
    std::string text;
};

// Executes one command and renders its report. Throws
// std::invalid_argument on bad names, formats or ranges.
RunResult run_command(const RunConfig& config);

// Expected strictness exceptions per sign theorem, as data: t1 -> {},
// t2 -> {5}, t4 -> {4, 20}.
const std::vector<long>& expected_exceptions(const std::string& theorem);

} // namespace bicrank
