#include "aspbreak/cli.hpp"

#include "aspbreak/graph.hpp"
#include "aspbreak/oracle.hpp"
#include "aspbreak/smodels.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

namespace aspbreak {

std::string emit_stats(const RunStats& s)
{
    std::ostringstream out;
    out << "generators=" << s.generators << '\n'
        << "rules=" << s.rules << '\n'
        << "aux=" << s.aux << '\n'
        << "seconds=" << s.seconds << '\n'
        << "rows=" << s.rows << '\n'
        << "binpairs=" << s.binpairs << '\n';
    return out.str();
}

namespace {

struct IoFailure {
    std::string message;
};

GroundProgram read_input(const RunConfig& config, std::istream& in)
{
    if (!config.input) return parse_program(in);
    std::ifstream file(*config.input);
    if (!file) throw IoFailure{"cannot open " + *config.input};
    return parse_program(file);
}

void write_output(const RunConfig& config, std::ostream& out, const std::string& text)
{
    if (!config.output) {
        out << text;
        out.flush();
        if (!out) throw IoFailure{"write to standard output failed"};
        return;
    }
    std::ofstream file(*config.output);
    file << text;
    file.close();
    if (!file) throw IoFailure{"cannot write " + *config.output};
}

RunStats stats_of(const PipelineResult& r, double seconds)
{
    RunStats s;
    s.generators = r.generators.size();
    s.rules = r.breaking_rules;
    s.aux = r.aux_atoms;
    s.seconds = seconds;
    s.rows = r.rows.size();
    s.binpairs = r.pairs.size();
    return s;
}

std::string verify(const GroundProgram& p, const PipelineResult& r, bool& violated)
{
    std::ostringstream out;
    const SymmetryChecker check(p);
    std::size_t bad = 0;
    const std::vector<AtomPermutation> perms = r.used_permutations();
    for (const auto& pi : perms) {
        if (!check(pi)) {
            ++bad;
            out << "not a syntactic symmetry: " << pi.to_string(p) << '\n';
        }
    }
    const SoundnessVerdict v = check_soundness(p, perms, r.output);
    out << "permutations checked: " << perms.size() << '\n'
        << "answer sets: " << v.original_count << " before, " << v.surviving_count << " after\n"
        << "sound: " << (v.sound ? "yes" : "no") << '\n'
        << "conservative: " << (v.conservative ? "yes" : "no") << '\n';
    for (const auto& I : v.uncovered) {
        out << "lost orbit of {";
        bool first = true;
        for (Atom a : I) {
            out << (first ? "" : ", ") << p.atom_name(a);
            first = false;
        }
        out << "}\n";
    }
    if (v.original_count == 0) {
        out << (v.surviving_count == 0 ? "unsat preserved\n" : "unsat not preserved\n");
    }
    violated = bad > 0 || !v.ok();
    return out.str();
}

}  // namespace

int run(const RunConfig& config, std::istream& in, std::ostream& out, std::ostream& err)
{
    try {
        const auto start = std::chrono::steady_clock::now();
        const GroundProgram p = read_input(config, in);
        if (config.dump_graph) dump_graph(encode_program(p), err);

        if (config.mode == Mode::Detect) {
            const DetectedSymmetries d = detect(p, config.pipeline.search);
            std::ostringstream text;
            for (const auto& pi : d.generators) text << pi.to_string(p) << '\n';
            write_output(config, out, text.str());
            if (!d.complete) err << "warning: search budget exhausted, generators may be partial\n";
            if (config.stats) {
                RunStats s;
                s.generators = d.generators.size();
                s.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                                .count();
                err << emit_stats(s);
            }
            return exit_code::ok;
        }

        const PipelineResult r = break_symmetries(p, config.pipeline);
        const double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (!r.search_complete) {
            err << "warning: search budget exhausted, breaking only the symmetries found\n";
        }
        if (config.stats) err << emit_stats(stats_of(r, seconds));

        if (config.mode == Mode::Break) {
            write_output(config, out, write_program(r.output));
            return exit_code::ok;
        }

        bool violated = false;
        write_output(config, out, verify(p, r, violated));
        if (violated) return exit_code::violation;
        // The report above only covers the symmetries that were found.
        return r.search_complete ? exit_code::ok : exit_code::budget_exceeded;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << '\n';
        return exit_code::parse_error;
    } catch (const IoFailure& e) {
        err << "i/o error: " << e.message << '\n';
        return exit_code::io_error;
    } catch (const BudgetExceeded& e) {
        err << "budget exceeded: " << e.what() << '\n';
        return exit_code::budget_exceeded;
    }
}

}  // namespace aspbreak
