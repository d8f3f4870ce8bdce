#include "aspbreak/program.hpp"

#include <algorithm>
#include <set>

namespace aspbreak {

const char* to_string(RuleKind kind)
{
    switch (kind) {
    case RuleKind::Basic: return "basic";
    case RuleKind::Cardinality: return "cardinality";
    case RuleKind::Choice: return "choice";
    case RuleKind::Weight: return "weight";
    case RuleKind::Minimize: return "minimize";
    case RuleKind::Disjunctive: return "disjunctive";
    }
    return "unknown";
}

Rule Rule::basic(Atom head, std::vector<Atom> pos, std::vector<Atom> neg)
{
    return Rule{RuleKind::Basic, {head}, std::move(pos), std::move(neg), 0, {}};
}

Rule Rule::constraint(std::vector<Atom> pos, std::vector<Atom> neg)
{
    return Rule{RuleKind::Basic, {}, std::move(pos), std::move(neg), 0, {}};
}

Rule Rule::cardinality(Atom head, Weight bound, std::vector<Atom> pos, std::vector<Atom> neg)
{
    return Rule{RuleKind::Cardinality, {head}, std::move(pos), std::move(neg), bound, {}};
}

Rule Rule::choice(std::vector<Atom> heads, std::vector<Atom> pos, std::vector<Atom> neg)
{
    return Rule{RuleKind::Choice, std::move(heads), std::move(pos), std::move(neg), 0, {}};
}

Rule Rule::weight(Atom head, Weight bound, std::vector<Atom> pos, std::vector<Atom> neg,
                  std::vector<Weight> weights)
{
    return Rule{RuleKind::Weight, {head}, std::move(pos), std::move(neg), bound,
                std::move(weights)};
}

Rule Rule::minimize(std::vector<Atom> pos, std::vector<Atom> neg, std::vector<Weight> weights)
{
    return Rule{RuleKind::Minimize, {}, std::move(pos), std::move(neg), 0, std::move(weights)};
}

Rule Rule::disjunctive(std::vector<Atom> heads, std::vector<Atom> pos, std::vector<Atom> neg)
{
    return Rule{RuleKind::Disjunctive, std::move(heads), std::move(pos), std::move(neg), 0, {}};
}

void GroundProgram::update_max_atom()
{
    auto raise = [this](const std::vector<Atom>& atoms) {
        for (Atom a : atoms) max_atom = std::max(max_atom, a);
    };
    for (const Rule& r : rules) {
        raise(r.heads);
        raise(r.pos);
        raise(r.neg);
    }
    raise(compute_plus);
    raise(compute_minus);
    if (!symbols.empty()) max_atom = std::max(max_atom, symbols.rbegin()->first);
}

std::string GroundProgram::atom_name(Atom a) const
{
    auto it = symbols.find(a);
    if (it != symbols.end()) return it->second;
    return "_" + std::to_string(a);
}

std::optional<Atom> false_atom(const GroundProgram& p)
{
    // Atoms disqualified by occurring anywhere but the head of a single-head rule.
    std::set<Atom> used;
    for (const Rule& r : p.rules) {
        used.insert(r.pos.begin(), r.pos.end());
        used.insert(r.neg.begin(), r.neg.end());
        if (!r.single_head_kind()) used.insert(r.heads.begin(), r.heads.end());
    }
    used.insert(p.compute_plus.begin(), p.compute_plus.end());

    std::vector<Atom> minus = p.compute_minus;
    std::sort(minus.begin(), minus.end());
    std::optional<Atom> unnamed;
    for (Atom a : minus) {
        if (used.count(a)) continue;
        auto it = p.symbols.find(a);
        if (it != p.symbols.end() && it->second == "_false") return a;
        if (it == p.symbols.end() && !unnamed) unnamed = a;
    }
    return unnamed;
}

std::vector<Rule> normalized_rules(const GroundProgram& p)
{
    const std::optional<Atom> falsum = false_atom(p);
    std::vector<Rule> out;
    out.reserve(p.rules.size() + p.compute_plus.size() + p.compute_minus.size());
    for (const Rule& r : p.rules) {
        Rule n = r;
        if (n.single_head_kind() && falsum && n.heads.size() == 1 && n.heads[0] == *falsum) {
            n.heads.clear();
        } else if (n.kind == RuleKind::Disjunctive && n.heads.size() == 1) {
            n.kind = RuleKind::Basic;
        }
        out.push_back(std::move(n));
    }
    for (Atom a : p.compute_plus) out.push_back(Rule::constraint({}, {a}));
    for (Atom a : p.compute_minus) {
        if (falsum && a == *falsum) continue;
        out.push_back(Rule::constraint({a}, {}));
    }
    return out;
}

}  // namespace aspbreak
