#pragma once

#include "aspbreak/automorphism.hpp"
#include "aspbreak/graph.hpp"
#include "aspbreak/program.hpp"

#include <cstddef>
#include <compare>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace aspbreak {

/// Permutation of atoms, stored sparsely: only moved atoms appear in `moved`.
/// Composition is left to right like NodePermutation.
class AtomPermutation {
public:
    AtomPermutation() = default;

    /// Throws std::invalid_argument if the map is not a bijection on its keys.
    static AtomPermutation from_map(const std::map<Atom, Atom>& images);
    /// Cycle notation; each inner list is one cycle a -> b -> ... -> a.
    static AtomPermutation from_cycles(const std::vector<std::vector<Atom>>& cycles);

    Atom operator()(Atom a) const;
    const std::map<Atom, Atom>& moved() const { return moved_; }
    std::vector<Atom> support() const;
    std::size_t support_size() const { return moved_.size(); }
    bool is_identity() const { return moved_.empty(); }
    bool is_involution() const;

    AtomPermutation then(const AtomPermutation& next) const;
    AtomPermutation inverse() const;

    /// Cycles of length >= 2, each starting at its smallest atom, sorted by
    /// that atom.
    std::vector<std::vector<Atom>> cycles() const;
    /// "(p q)(r s t)" using the program's atom names; "()" for the identity.
    std::string to_string(const GroundProgram& p) const;

    friend bool operator==(const AtomPermutation&, const AtomPermutation&) = default;
    friend auto operator<=>(const AtomPermutation&, const AtomPermutation&) = default;

private:
    std::map<Atom, Atom> moved_;
};

/// A node automorphism that does not act as a permutation of atoms.
class RejectedSymmetry : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The atom permutation induced by an automorphism of encode_program(p).
AtomPermutation restrict_to_atoms(const ColoredGraph& g, const NodePermutation& sigma);

/// Checks pi(P) = P as rule multisets. Holds the program in canonical form so
/// that repeated checks against one program are cheap.
class SymmetryChecker {
public:
    explicit SymmetryChecker(const GroundProgram& p);
    bool operator()(const AtomPermutation& pi) const;

private:
    struct Key {
        int kind = 0;
        Weight bound = 0;
        std::vector<Atom> heads;
        std::vector<Atom> pos;
        std::vector<Atom> neg;
        // Signed literal (negative = default negation) and weight.
        std::vector<std::pair<std::int64_t, Weight>> terms;
        friend auto operator<=>(const Key&, const Key&) = default;
    };
    static Key canonical(const Rule& r, const AtomPermutation* pi);

    std::vector<Key> keys_;  // sorted
    Atom max_atom_ = 0;
    std::optional<Atom> falsum_;
};

bool is_syntactic_symmetry(const GroundProgram& p, const AtomPermutation& pi);

/// Disjoint equal-length atom tuples whose rows can be permuted freely.
struct RowMatrix {
    std::vector<std::vector<Atom>> rows;

    std::size_t row_count() const { return rows.size(); }
    std::size_t column_count() const { return rows.empty() ? 0 : rows[0].size(); }
    std::vector<Atom> atoms() const;
    /// Columnwise exchange of rows i and j.
    AtomPermutation row_swap(std::size_t i, std::size_t j) const;

    friend bool operator==(const RowMatrix&, const RowMatrix&) = default;
};

/// Matrices of at least three interchangeable rows, grown from involution
/// seeds among the generators and their pairwise products. Every adjacent
/// row swap of a returned matrix has been checked against p; returned
/// matrices are pairwise disjoint.
std::vector<RowMatrix> detect_rows(const GroundProgram& p, const std::vector<AtomPermutation>& gens);

/// Total order over atoms 1..max_atom.
class AtomOrder {
public:
    AtomOrder() = default;
    /// `sequence` must be a permutation of 1..n.
    explicit AtomOrder(std::vector<Atom> sequence);
    static AtomOrder natural(Atom max_atom);

    const std::vector<Atom>& sequence() const { return sequence_; }
    std::size_t rank(Atom a) const { return rank_.at(a); }
    bool less(Atom a, Atom b) const { return rank(a) < rank(b); }
    std::size_t size() const { return sequence_.size(); }

private:
    std::vector<Atom> sequence_;
    std::vector<std::size_t> rank_;  // indexed by atom; rank_[0] unused
};

/// Row matrices first (row-major), then generator supports cycle by cycle
/// with generators taken by ascending support size and smallest atom, then
/// every untouched atom by index.
AtomOrder choose_order(const GroundProgram& p, const std::vector<AtomPermutation>& gens,
                       const std::vector<RowMatrix>& rows);

/// (v, w): a group element maps v to w and fixes every atom ranked before v,
/// so "not (v and not w)" is a sound breaking rule. `witness` is that element.
struct BinaryPair {
    Atom from = 0;
    Atom to = 0;
    AtomPermutation witness;
};

/// Outcome of searching a graph for symmetries of the program it encodes.
struct DetectedSymmetries {
    std::vector<AtomPermutation> generators;
    /// Non-identity automorphisms that failed the syntactic check.
    std::size_t rejected = 0;
    bool complete = true;
};

/// find_generators on g, restricted to atoms and filtered through the checker.
DetectedSymmetries detect_symmetries(const ColoredGraph& g, const SymmetryChecker& check,
                                     const SearchOptions& options = {});

/// Stabilizer chain: at each level take the first atom (by order) moved by
/// the current group, pair it with the rest of its orbit, then fix it and
/// search again. Stops after `levels` levels or at the trivial group.
std::vector<BinaryPair> stabilizer_binary_symmetries(const GroundProgram& p, const ColoredGraph& g,
                                                     const AtomOrder& order, std::size_t levels,
                                                     const SearchOptions& options = {});

}  // namespace aspbreak
