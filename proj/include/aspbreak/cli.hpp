#pragma once

#include "aspbreak/pipeline.hpp"

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>

namespace aspbreak {

enum class Mode { Break, Detect, Verify };

struct RunConfig {
    std::optional<std::string> input;   // standard input when absent
    std::optional<std::string> output;  // standard output when absent
    Mode mode = Mode::Break;
    PipelineOptions pipeline;
    bool stats = false;
    bool dump_graph = false;
};

struct RunStats {
    std::size_t generators = 0;
    std::size_t rules = 0;
    std::size_t aux = 0;
    double seconds = 0.0;
    std::size_t rows = 0;
    std::size_t binpairs = 0;
};

/// One key=value line per field.
std::string emit_stats(const RunStats& s);

namespace exit_code {
constexpr int ok = 0;
constexpr int parse_error = 1;
constexpr int budget_exceeded = 2;
constexpr int io_error = 3;
constexpr int violation = 4;
}  // namespace exit_code

/// Runs one invocation. `in`/`out` stand in for absent paths; diagnostics,
/// stats and graph dumps go to `err`.
int run(const RunConfig& config, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace aspbreak
