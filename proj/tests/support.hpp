#pragma once

#include "aspbreak/automorphism.hpp"
#include "aspbreak/graph.hpp"
#include "aspbreak/oracle.hpp"
#include "aspbreak/program.hpp"
#include "aspbreak/symmetry.hpp"

#include <cstddef>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace aspbreak::testing {

/// The five small programs: choice, choice + rule, choice + constraint,
/// choice + disjunction, two facts. p is atom 1 and q atom 2 in all of
/// them; P3 carries an unnamed false atom.
GroundProgram example(int which);

/// Atom for "pigeon i sits in hole j", both 0-based.
inline Atom place(std::size_t i, std::size_t j, std::size_t holes)
{
    return static_cast<Atom>(i * holes + j + 1);
}

/// Choice over placements; every pigeon needs a hole, no hole takes two.
GroundProgram pigeonhole(std::size_t pigeons, std::size_t holes);

/// One choice rule per atom 1..n, nothing else.
GroundProgram free_choices(Atom n);

/// Random program over `atoms` atoms with up to `max_rules` rules of
/// mixed kinds. Literals are distinct within each list.
GroundProgram random_program(std::mt19937& rng, Atom atoms, std::size_t max_rules);

/// Random program built to have symmetry: a rule template is copied under
/// a random atom permutation.
GroundProgram random_symmetric_program(std::mt19937& rng, Atom atoms, std::size_t max_rules);

/// Random colored graph.
ColoredGraph random_graph(std::mt19937& rng, std::size_t nodes, Color colors, double density);

/// Every element of the group generated by gens (identity included).
std::set<NodePermutation> closure(const std::vector<NodePermutation>& gens, std::size_t n);
std::set<AtomPermutation> closure(const std::vector<AtomPermutation>& gens);

/// Every syntactic symmetry of p, by trying all permutations of 1..max_atom.
std::vector<AtomPermutation> all_syntactic_symmetries(const GroundProgram& p);

/// True iff I <= I o pi in `order` with false < true.
bool lex_leq(const Interpretation& I, const AtomPermutation& pi, const AtomOrder& order);

/// Names used in the examples, for readable failure messages.
std::string show(const Interpretation& I);

std::string read_file(const std::string& path);
std::vector<std::string> corpus_files();

/// Collapses runs of whitespace and trims lines, for format comparisons.
std::string normalize_whitespace(const std::string& text);

}  // namespace aspbreak::testing
