#pragma once

#include "aspbreak/errors.hpp"
#include "aspbreak/program.hpp"
#include "aspbreak/symmetry.hpp"

#include <cstddef>
#include <set>
#include <vector>

namespace aspbreak {

/// The set of true atoms.
using Interpretation = std::set<Atom>;

/// Classical satisfaction of one rule. A headless rule holds iff its body
/// fails; choice rules and minimize statements always hold.
bool satisfies(const Interpretation& I, const Rule& r);

/// I satisfies every rule of p, with compute statements and the false atom
/// read as constraints.
bool is_model(const GroundProgram& p, const Interpretation& I);

enum class ChoiceTranslation {
    /// Choice rules are kept and handled by the reduct directly.
    Native,
    /// Each choice head h becomes h :- B, not h'. h' :- B, not h. with a
    /// fresh shadow atom h' numbered above max_atom.
    Shadow,
};

/// Equivalent program over Basic, Disjunctive and (Native only) Choice rules.
/// Cardinality and weight bodies become one Basic rule per minimal
/// satisfying sub-body; compute statements and the false atom become
/// headless rules; minimize statements are dropped. Symbols are kept.
GroundProgram desugar(const GroundProgram& p, ChoiceTranslation mode = ChoiceTranslation::Shadow);

/// Gelfond-Lifschitz reduct of the shadow-desugared program: rules whose
/// negative body meets I are deleted and the remaining negative literals
/// dropped.
GroundProgram reduct(const GroundProgram& p, const Interpretation& I);

struct OracleOptions {
    /// Upper bound on the number of atoms whose truth value is enumerated.
    std::size_t atom_budget = 20;
};

/// All answer sets, sorted. Enumerates truth values only for atoms that
/// occur negated or in choice/disjunctive heads; every other atom follows
/// by least fixpoint. Throws BudgetExceeded if there are more of those
/// guess atoms than atom_budget.
std::vector<Interpretation> answer_sets(const GroundProgram& p, const OracleOptions& options = {});

/// The same set computed straight from the definition: every subset of the
/// shadow-desugared vocabulary is tested for being a model and a minimal
/// model of its reduct. Shadow atoms are projected away. Much slower; kept
/// as an independent cross-check.
std::vector<Interpretation> answer_sets_by_definition(const GroundProgram& p,
                                                      const OracleOptions& options = {});

/// Image of I under pi.
Interpretation permute(const AtomPermutation& pi, const Interpretation& I);

struct SoundnessVerdict {
    /// Every answer set of p has an orbit member that survives breaking.
    bool sound = true;
    /// Every surviving answer set, projected to p's atoms, is one of p's.
    bool conservative = true;
    std::size_t original_count = 0;
    std::size_t surviving_count = 0;
    std::vector<Interpretation> uncovered;

    bool ok() const { return sound && conservative; }
};

/// Compares p with a broken version of it. Orbits are closures under `perms`.
SoundnessVerdict check_soundness(const GroundProgram& p, const std::vector<AtomPermutation>& perms,
                                 const GroundProgram& augmented,
                                 const OracleOptions& options = {});

/// Sum of the weights of satisfied literals over all minimize statements.
Weight objective_value(const GroundProgram& p, const Interpretation& I);

}  // namespace aspbreak
