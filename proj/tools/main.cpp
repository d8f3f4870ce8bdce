#include "aspbreak/cli.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <map>
#include <string>

int main(int argc, char** argv)
{
    aspbreak::RunConfig config;
    CLI::App app{"Static symmetry breaking for ground programs in smodels format"};

    std::string input;
    std::string output;
    app.add_option("input", input, "Input program (default: standard input)");
    app.add_option("-o,--output", output, "Output file (default: standard output)");

    const std::map<std::string, aspbreak::Mode> modes{
        {"break", aspbreak::Mode::Break},
        {"detect", aspbreak::Mode::Detect},
        {"verify", aspbreak::Mode::Verify},
    };
    std::string mode = "break";
    app.add_option("--mode", mode, "break, detect or verify")
        ->check(CLI::IsMember({"break", "detect", "verify"}, CLI::ignore_case))
        ->capture_default_str();
    app.add_option("--limit", config.pipeline.aux_limit, "Aux atoms per symmetry")
        ->check(CLI::NonNegativeNumber);
    app.add_option("--budget", config.pipeline.search.node_budget, "Search-tree node budget");
    app.add_option("--stab-levels", config.pipeline.stabilizer_levels,
                   "Stabilizer levels for binary rules");
    bool no_rows = false;
    bool no_binary = false;
    app.add_flag("--no-rows", no_rows, "Skip row interchangeability detection");
    app.add_flag("--no-binary", no_binary, "Skip binary stabilizer rules");
    app.add_flag("--stats", config.stats, "Print statistics to standard error");
    app.add_flag("--dump-graph", config.dump_graph, "Print the colored graph to standard error");

    CLI11_PARSE(app, argc, argv);

    config.mode = modes.at(CLI::detail::to_lower(mode));
    config.pipeline.rows = !no_rows;
    config.pipeline.binary = !no_binary;
    if (!input.empty() && input != "-") config.input = input;
    if (!output.empty() && output != "-") config.output = output;

    std::ios::sync_with_stdio(false);
    return aspbreak::run(config, std::cin, std::cout, std::cerr);
}
