#pragma once

#include "aspbreak/program.hpp"
#include "aspbreak/symmetry.hpp"

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace aspbreak {

constexpr std::size_t default_aux_limit = 50;

/// Hands out consecutive atom indices starting at `first`.
class AtomAllocator {
public:
    explicit AtomAllocator(Atom first) : next_(first) {}
    Atom next() { return next_++; }
    Atom peek() const { return next_; }

private:
    Atom next_;
};

/// Rules produced by one breaking step. Constraints are kept headless here;
/// assemble() attaches them to the program's false atom.
struct BreakingProgram {
    std::vector<Rule> new_rules;
    std::vector<Atom> aux_atoms;
    /// One entry per broken permutation.
    std::vector<std::size_t> per_symmetry_aux_count;
    Atom new_max_atom = 0;

    bool empty() const { return new_rules.empty(); }
};

/// Lex-leader rules admitting exactly the interpretations I with
/// I <= I o pi, comparing atoms in `order` with false < true. Positions are
/// the support atoms minus the last of each cycle. Position i gets an aux
/// atom e_i defined as "equal on the first i positions"; at most aux_limit
/// aux atoms are made, later positions are dropped.
BreakingProgram lex_leader_rules(const AtomPermutation& pi, const AtomOrder& order,
                                 std::size_t aux_limit, AtomAllocator& alloc);

/// One lex-leader fragment per adjacent row swap; together they force the
/// rows into non-decreasing lexicographic order.
BreakingProgram break_rows(const RowMatrix& m, const AtomOrder& order, std::size_t aux_limit,
                           AtomAllocator& alloc);

/// ":- v, not w" for each distinct pair.
BreakingProgram binary_rules(const std::vector<std::pair<Atom, Atom>>& pairs);

/// Fragments whose aux atoms are not fresh and contiguous above the input.
class AuxCollision : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// p with the fragment rules appended. Headless rules get p's false atom as
/// head; if p has none, a fresh atom above every aux atom is made and added
/// to B-. Rules repeated across fragments are appended once. Symbols,
/// compute statements and model count are otherwise kept.
GroundProgram assemble(const GroundProgram& p, const std::vector<BreakingProgram>& fragments);

}  // namespace aspbreak
