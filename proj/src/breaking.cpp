#include "aspbreak/breaking.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <tuple>

namespace aspbreak {

BreakingProgram lex_leader_rules(const AtomPermutation& pi, const AtomOrder& order,
                                 std::size_t aux_limit, AtomAllocator& alloc)
{
    BreakingProgram out;
    // The last atom of each cycle in the order is skipped: once the others
    // compare equal, the chain I(x) = I(pi(x)) around the cycle forces it.
    std::vector<Atom> support;
    for (const auto& cycle : pi.cycles()) {
        auto last = std::max_element(cycle.begin(), cycle.end(),
                                     [&](Atom a, Atom b) { return order.less(a, b); });
        for (auto it = cycle.begin(); it != cycle.end(); ++it) {
            if (it != last) support.push_back(*it);
        }
    }
    std::sort(support.begin(), support.end(), [&](Atom a, Atom b) { return order.less(a, b); });
    if (support.size() > aux_limit + 1) support.resize(aux_limit + 1);

    // prefix holds e_{i-1}: true iff I and I o pi agree on v_1 .. v_{i-1}.
    std::optional<Atom> prefix;
    for (std::size_t i = 0; i < support.size(); ++i) {
        const Atom v = support[i];
        const Atom w = pi(v);
        std::vector<Atom> guard;
        if (prefix) guard.push_back(*prefix);

        std::vector<Atom> pos = guard;
        pos.push_back(v);
        out.new_rules.push_back(Rule::constraint(pos, {w}));

        if (i + 1 == support.size()) break;
        const Atom e = alloc.next();
        out.aux_atoms.push_back(e);
        std::vector<Atom> both = guard;
        both.push_back(v);
        both.push_back(w);
        out.new_rules.push_back(Rule::basic(e, both, {}));
        out.new_rules.push_back(Rule::basic(e, guard, {v, w}));
        prefix = e;
    }
    out.per_symmetry_aux_count.push_back(out.aux_atoms.size());
    out.new_max_atom = out.aux_atoms.empty() ? 0 : out.aux_atoms.back();
    return out;
}

BreakingProgram break_rows(const RowMatrix& m, const AtomOrder& order, std::size_t aux_limit,
                           AtomAllocator& alloc)
{
    BreakingProgram out;
    for (std::size_t j = 0; j + 1 < m.row_count(); ++j) {
        BreakingProgram f = lex_leader_rules(m.row_swap(j, j + 1), order, aux_limit, alloc);
        out.new_rules.insert(out.new_rules.end(), f.new_rules.begin(), f.new_rules.end());
        out.aux_atoms.insert(out.aux_atoms.end(), f.aux_atoms.begin(), f.aux_atoms.end());
        out.per_symmetry_aux_count.push_back(f.aux_atoms.size());
        out.new_max_atom = std::max(out.new_max_atom, f.new_max_atom);
    }
    return out;
}

BreakingProgram binary_rules(const std::vector<std::pair<Atom, Atom>>& pairs)
{
    BreakingProgram out;
    std::set<std::pair<Atom, Atom>> seen;
    for (const auto& pr : pairs) {
        if (pr.first == pr.second || !seen.insert(pr).second) continue;
        out.new_rules.push_back(Rule::constraint({pr.first}, {pr.second}));
    }
    return out;
}

GroundProgram assemble(const GroundProgram& p, const std::vector<BreakingProgram>& fragments)
{
    std::vector<Atom> aux;
    for (const auto& f : fragments) aux.insert(aux.end(), f.aux_atoms.begin(), f.aux_atoms.end());
    std::sort(aux.begin(), aux.end());
    for (std::size_t i = 0; i < aux.size(); ++i) {
        if (aux[i] != p.max_atom + 1 + i) {
            throw AuxCollision("aux atoms are not fresh and contiguous above atom " +
                               std::to_string(p.max_atom));
        }
    }

    GroundProgram out = p;
    out.max_atom = static_cast<Atom>(p.max_atom + aux.size());
    const bool needs_constraint = std::any_of(
        fragments.begin(), fragments.end(), [](const BreakingProgram& f) {
            return std::any_of(f.new_rules.begin(), f.new_rules.end(),
                               [](const Rule& r) { return r.is_constraint(); });
        });
    std::optional<Atom> falsum = false_atom(p);
    if (needs_constraint && !falsum) {
        falsum = ++out.max_atom;
        out.compute_minus.push_back(*falsum);
    }
    // Different fragments can derive the same constraint (a binary pair and
    // the first lex-leader position, typically); it is appended once.
    std::set<std::tuple<std::vector<Atom>, std::vector<Atom>, std::vector<Atom>>> seen;
    for (const auto& f : fragments) {
        for (Rule r : f.new_rules) {
            if (r.is_constraint()) r.heads = {*falsum};
            if (!seen.emplace(r.heads, r.pos, r.neg).second) continue;
            out.rules.push_back(std::move(r));
        }
    }
    return out;
}

}  // namespace aspbreak
