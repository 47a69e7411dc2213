// Command-line front end. Examples:
//   bicrank expand diff3 --order 5
//   bicrank verify t2 --order 2000
//   bicrank verify asy3 --range 1 1200 --precision 192
//   bicrank threshold --modulus 4 --range 2000 6000 --format json -o scan.json

#include "bicrank/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace {

void add_common(CLI::App* cmd, bicrank::RunConfig& cfg, std::string& output) {
    cmd->add_option("--order", cfg.order, "Truncation order");
    cmd->add_option("--precision", cfg.precision, "Working precision in bits (>= 64)");
    cmd->add_option("--format", cfg.format, "Output format: csv or json");
    cmd->add_option("--output,-o", output, "Write the report to this path");
}

int emit(const bicrank::RunResult& result, const std::string& output) {
    if (output.empty()) {
        std::cout << result.text;
    } else {
        std::ofstream f(output, std::ios::binary);
        if (!f) {
            std::cerr << "error: cannot write " << output << "\n";
            return 2;
        }
        f << result.text;
    }
    return result.exit_code;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Bicrank difference-series verification tool"};
    app.require_subcommand(1);

    bicrank::RunConfig cfg;
    std::string output;
    std::vector<long> range;

    CLI::App* expand = app.add_subcommand("expand", "Dump a named generating function");
    expand->add_option("name", cfg.name,
                       "p2 | diff2 | diff3 | diff4 | table | classes")->required();
    expand->add_option("--modulus", cfg.modulus, "Residue modulus (classes)");
    add_common(expand, cfg, output);

    CLI::App* verify = app.add_subcommand("verify", "Run a theorem verification");
    verify->add_option("theorem", cfg.name,
                       "t1 | t2 | t4 | mod5 | identities | asy3 | asy5")->required();
    verify->add_option("--range", range, "Index range LO HI (asy3/asy5)")->expected(2);
    add_common(verify, cfg, output);

    CLI::App* threshold =
        app.add_subcommand("threshold", "Scan main-term dominance margins");
    threshold->add_option("--modulus", cfg.modulus, "3 or 4")->required();
    threshold->add_option("--range", range, "Index range LO HI")->expected(2);
    add_common(threshold, cfg, output);

    CLI11_PARSE(app, argc, argv);

    cfg.command = app.get_subcommands().front()->get_name();
    if (range.size() == 2) {
        cfg.lo = range[0];
        cfg.hi = range[1];
    }

    try {
        return emit(bicrank::run_command(cfg), output);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
