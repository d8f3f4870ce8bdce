#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace aspbreak {

/// 1-based atom index, exactly as it appears on the wire.
using Atom = std::uint32_t;
using Weight = std::int64_t;

/// Wire codes of the Lparse-Smodels rule types we accept.
enum class RuleKind : int {
    Basic = 1,
    Cardinality = 2,
    Choice = 3,
    Weight = 5,
    Minimize = 6,
    Disjunctive = 8,
};

const char* to_string(RuleKind kind);

/// One ground rule. The kind tag decides which fields are meaningful:
///
///   Basic        heads (one head; empty = constraint), pos, neg
///   Cardinality  heads (one head; empty = constraint), bound, pos, neg
///   Choice       heads (non-empty), pos, neg
///   Weight       heads (one head; empty = constraint), bound, pos, neg, weights
///   Minimize     pos, neg, weights
///   Disjunctive  heads (non-empty), pos, neg
///
/// `weights` is aligned to the wire order: all negative literals first,
/// then all positive ones.
struct Rule {
    RuleKind kind = RuleKind::Basic;
    std::vector<Atom> heads;
    std::vector<Atom> pos;
    std::vector<Atom> neg;
    Weight bound = 0;
    std::vector<Weight> weights;

    static Rule basic(Atom head, std::vector<Atom> pos = {}, std::vector<Atom> neg = {});
    static Rule constraint(std::vector<Atom> pos, std::vector<Atom> neg = {});
    static Rule cardinality(Atom head, Weight bound, std::vector<Atom> pos,
                            std::vector<Atom> neg = {});
    static Rule choice(std::vector<Atom> heads, std::vector<Atom> pos = {},
                       std::vector<Atom> neg = {});
    static Rule weight(Atom head, Weight bound, std::vector<Atom> pos, std::vector<Atom> neg,
                       std::vector<Weight> weights);
    static Rule minimize(std::vector<Atom> pos, std::vector<Atom> neg,
                         std::vector<Weight> weights);
    static Rule disjunctive(std::vector<Atom> heads, std::vector<Atom> pos = {},
                            std::vector<Atom> neg = {});

    bool single_head_kind() const
    {
        return kind == RuleKind::Basic || kind == RuleKind::Cardinality || kind == RuleKind::Weight;
    }
    /// Headless rule; only produced by normalized_rules, never on the wire.
    bool is_constraint() const { return single_head_kind() && heads.empty(); }
    bool has_weights() const { return kind == RuleKind::Weight || kind == RuleKind::Minimize; }
    bool has_bound() const { return kind == RuleKind::Cardinality || kind == RuleKind::Weight; }

    /// Weight attached to the i-th negative / positive body literal.
    Weight neg_weight(std::size_t i) const { return weights[i]; }
    Weight pos_weight(std::size_t i) const { return weights[neg.size() + i]; }

    friend bool operator==(const Rule&, const Rule&) = default;
};

/// A ground program as exchanged between grounder and solver.
struct GroundProgram {
    std::vector<Rule> rules;
    std::map<Atom, std::string> symbols;
    std::vector<Atom> compute_plus;
    std::vector<Atom> compute_minus;
    std::uint64_t model_count = 1;
    Atom max_atom = 0;

    /// Raises max_atom to cover every atom referenced anywhere.
    void update_max_atom();

    std::string atom_name(Atom a) const;

    friend bool operator==(const GroundProgram&, const GroundProgram&) = default;
};

/// The reserved never-derivable atom used as the head of wire-level
/// constraints, if the program has one. It must be in B- and occur only as
/// the head of Basic, Cardinality or Weight rules (never in a body, a
/// choice/disjunctive head or B+). One named "_false" wins, otherwise the
/// lowest unnamed one.
std::optional<Atom> false_atom(const GroundProgram& p);

/// The rule list with wire conventions resolved into plain semantics:
/// false-atom-headed rules become constraints (empty head), compute
/// statements become constraints (`a` in B+ gives `:- not a`, `a` in B- gives
/// `:- a`), and single-head disjunctive rules become Basic rules. This is the
/// view shared by graph encoding, symmetry checking and the oracle.
std::vector<Rule> normalized_rules(const GroundProgram& p);

}  // namespace aspbreak
