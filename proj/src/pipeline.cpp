#include "aspbreak/pipeline.hpp"

#include "aspbreak/graph.hpp"

#include <algorithm>
#include <set>

namespace aspbreak {

std::vector<AtomPermutation> PipelineResult::used_permutations() const
{
    std::vector<AtomPermutation> out = generators;
    for (const auto& m : rows) {
        for (std::size_t j = 0; j + 1 < m.row_count(); ++j) out.push_back(m.row_swap(j, j + 1));
    }
    for (const auto& pr : pairs) out.push_back(pr.witness);
    return out;
}

DetectedSymmetries detect(const GroundProgram& p, const SearchOptions& options)
{
    return detect_symmetries(encode_program(p), SymmetryChecker(p), options);
}

PipelineResult break_symmetries(const GroundProgram& p, const PipelineOptions& options)
{
    PipelineResult res;
    const ColoredGraph g = encode_program(p);
    const DetectedSymmetries found = detect_symmetries(g, SymmetryChecker(p), options.search);
    res.generators = found.generators;
    res.rejected = found.rejected;
    res.search_complete = found.complete;

    if (options.rows) res.rows = detect_rows(p, res.generators);
    res.order = choose_order(p, res.generators, res.rows);
    if (options.binary && !res.generators.empty()) {
        res.pairs = stabilizer_binary_symmetries(p, g, res.order, options.stabilizer_levels,
                                                 options.search);
    }

    AtomAllocator alloc(p.max_atom + 1);
    std::vector<BreakingProgram> fragments;
    std::vector<std::pair<Atom, Atom>> pairs;
    for (const auto& pr : res.pairs) pairs.emplace_back(pr.from, pr.to);
    fragments.push_back(binary_rules(pairs));
    for (const auto& m : res.rows) fragments.push_back(break_rows(m, res.order, options.aux_limit, alloc));
    for (const auto& pi : res.generators) {
        fragments.push_back(lex_leader_rules(pi, res.order, options.aux_limit, alloc));
    }

    for (const auto& f : fragments) {
        res.aux_atoms += f.aux_atoms.size();
        res.per_symmetry_aux.insert(res.per_symmetry_aux.end(), f.per_symmetry_aux_count.begin(),
                                    f.per_symmetry_aux_count.end());
    }
    res.output = assemble(p, fragments);
    res.breaking_rules = res.output.rules.size() - p.rules.size();
    return res;
}

}  // namespace aspbreak
