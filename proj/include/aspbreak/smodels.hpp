#pragma once

#include "aspbreak/program.hpp"

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace aspbreak {

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& msg);
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

/// Reads a program in Lparse-Smodels intermediate format (including gringo's
/// disjunctive rule type 8). Throws ParseError carrying the 1-based line.
GroundProgram parse_program(std::istream& in);
GroundProgram parse_program(std::string_view text);

void write_program(const GroundProgram& p, std::ostream& out);
std::string write_program(const GroundProgram& p);

enum class DiagnosticKind {
    WeightArity,
    NegativeBound,
    NegativeWeight,
    IndexRange,
    EmptyHead,
    HeadCount,
    MinimizeHead,
    DuplicateSymbol,
};

struct Diagnostic {
    DiagnosticKind kind;
    std::size_t rule = 0;  // index into rules, or 0 for non-rule diagnostics
    std::string message;
};

/// One diagnostic per violated invariant; empty when the program is valid.
std::vector<Diagnostic> validate(const GroundProgram& p);

}  // namespace aspbreak
