#include "aspbreak/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <string>

namespace aspbreak {

namespace {

bool body_holds(const Rule& r, const Interpretation& I)
{
    auto in = [&](Atom a) { return I.count(a) > 0; };
    switch (r.kind) {
    case RuleKind::Cardinality: {
        Weight n = 0;
        for (Atom a : r.pos) n += in(a);
        for (Atom a : r.neg) n += !in(a);
        return n >= r.bound;
    }
    case RuleKind::Weight: {
        Weight sum = 0;
        for (std::size_t i = 0; i < r.neg.size(); ++i) sum += in(r.neg[i]) ? 0 : r.neg_weight(i);
        for (std::size_t i = 0; i < r.pos.size(); ++i) sum += in(r.pos[i]) ? r.pos_weight(i) : 0;
        return sum >= r.bound;
    }
    default:
        return std::all_of(r.pos.begin(), r.pos.end(), in) &&
               std::none_of(r.neg.begin(), r.neg.end(), in);
    }
}

// Cardinality and weight bodies as plain bodies: one per minimal index
// subset of literals whose weight reaches the bound.
std::vector<Rule> expand_aggregate(const Rule& r)
{
    struct Lit {
        Atom atom;
        bool positive;
        Weight weight;
    };
    std::vector<Lit> lits;
    for (std::size_t i = 0; i < r.neg.size(); ++i) {
        lits.push_back({r.neg[i], false, r.kind == RuleKind::Weight ? r.neg_weight(i) : 1});
    }
    for (std::size_t i = 0; i < r.pos.size(); ++i) {
        lits.push_back({r.pos[i], true, r.kind == RuleKind::Weight ? r.pos_weight(i) : 1});
    }
    if (lits.size() > 20) {
        throw BudgetExceeded("aggregate with " + std::to_string(lits.size()) +
                             " literals is too large to expand");
    }

    std::vector<Rule> out;
    auto emit = [&](std::uint32_t mask) {
        Rule b = r.heads.empty() ? Rule::constraint({}, {}) : Rule::basic(r.heads[0]);
        for (std::size_t i = 0; i < lits.size(); ++i) {
            if (!(mask >> i & 1U)) continue;
            (lits[i].positive ? b.pos : b.neg).push_back(lits[i].atom);
        }
        out.push_back(std::move(b));
    };
    if (r.bound <= 0) {
        emit(0);
        return out;
    }
    const std::uint32_t limit = 1U << lits.size();
    for (std::uint32_t mask = 1; mask < limit; ++mask) {
        Weight sum = 0;
        for (std::size_t i = 0; i < lits.size(); ++i) {
            if (mask >> i & 1U) sum += lits[i].weight;
        }
        if (sum < r.bound) continue;
        bool minimal = true;
        for (std::size_t i = 0; i < lits.size() && minimal; ++i) {
            if ((mask >> i & 1U) && sum - lits[i].weight >= r.bound) minimal = false;
        }
        if (minimal) emit(mask);
    }
    return out;
}

// Flattened program over Basic (one or no head), Disjunctive and Choice
// rules, evaluated over dense truth arrays.
class Engine {
public:
    Engine(const GroundProgram& native, std::size_t budget) : n_(native.max_atom)
    {
        guess_.assign(n_ + 1, 0);
        occurrences_.resize(n_ + 1);
        for (const Rule& r : native.rules) {
            const std::size_t idx = rules_.size();
            rules_.push_back(r);
            for (Atom a : r.neg) guess_[a] = 1;
            if (r.kind == RuleKind::Choice || r.kind == RuleKind::Disjunctive) {
                for (Atom h : r.heads) guess_[h] = 1;
            }
            if (r.kind == RuleKind::Disjunctive) disjunctive_ = true;
            for (Atom a : r.pos) occurrences_[a].push_back(idx);
        }
        for (Atom a = 1; a <= n_; ++a) {
            if (guess_[a]) guess_atoms_.push_back(a);
        }
        if (guess_atoms_.size() > budget || guess_atoms_.size() > 62) {
            throw BudgetExceeded(std::to_string(guess_atoms_.size()) +
                                 " guess atoms exceed the oracle budget of " +
                                 std::to_string(budget));
        }
        count_.resize(rules_.size());
    }

    std::vector<Interpretation> run(Atom project_to)
    {
        std::vector<Interpretation> out;
        const std::uint64_t total = std::uint64_t{1} << guess_atoms_.size();
        std::vector<char> G(n_ + 1, 0);
        for (std::uint64_t mask = 0; mask < total; ++mask) {
            for (std::size_t i = 0; i < guess_atoms_.size(); ++i) {
                G[guess_atoms_[i]] = static_cast<char>(mask >> i & 1U);
            }
            const bool stable = disjunctive_ ? stable_disjunctive(G) : stable_normal(G);
            if (!stable) continue;
            Interpretation I;
            for (Atom a = 1; a <= std::min<Atom>(n_, project_to); ++a) {
                if (truth_[a]) I.insert(a);
            }
            out.push_back(std::move(I));
        }
        std::sort(out.begin(), out.end());
        return out;
    }

private:
    static bool meets(const std::vector<Atom>& atoms, const std::vector<char>& t)
    {
        return std::any_of(atoms.begin(), atoms.end(), [&](Atom a) { return t[a] != 0; });
    }

    bool body_true(const Rule& r, const std::vector<char>& pos_t, const std::vector<char>& neg_t) const
    {
        return std::all_of(r.pos.begin(), r.pos.end(), [&](Atom a) { return pos_t[a] != 0; }) &&
               !meets(r.neg, neg_t);
    }

    // Least model of the reduct w.r.t. neg_ctx, into truth_. With `fixed`
    // set, guess atoms take their value from it and only rules with a
    // non-guess head derive anything.
    void least_model(const std::vector<char>& neg_ctx, const std::vector<char>* fixed)
    {
        truth_.assign(n_ + 1, 0);
        std::deque<Atom> queue;
        auto make_true = [&](Atom a) {
            if (!truth_[a]) {
                truth_[a] = 1;
                queue.push_back(a);
            }
        };
        if (fixed) {
            for (Atom a : guess_atoms_) {
                if ((*fixed)[a]) make_true(a);
            }
        }
        auto fire = [&](const Rule& r) {
            if (r.kind == RuleKind::Choice) {
                if (fixed) return;
                for (Atom h : r.heads) {
                    if (neg_ctx[h]) make_true(h);
                }
            } else if (r.kind == RuleKind::Basic && !r.heads.empty()) {
                const Atom h = r.heads[0];
                if (!fixed || !guess_[h]) make_true(h);
            }
        };
        for (std::size_t i = 0; i < rules_.size(); ++i) {
            const Rule& r = rules_[i];
            const bool active = !meets(r.neg, neg_ctx);
            count_[i] = active ? static_cast<std::uint32_t>(r.pos.size()) : UINT32_MAX;
            if (count_[i] == 0) fire(r);
        }
        while (!queue.empty()) {
            const Atom a = queue.front();
            queue.pop_front();
            for (std::size_t i : occurrences_[a]) {
                if (count_[i] != UINT32_MAX && --count_[i] == 0) fire(rules_[i]);
            }
        }
    }

    bool constraints_hold(const std::vector<char>& t) const
    {
        for (const Rule& r : rules_) {
            if (r.is_constraint() && body_true(r, t, t)) return false;
        }
        return true;
    }

    bool stable_normal(const std::vector<char>& G)
    {
        least_model(G, nullptr);
        for (Atom a : guess_atoms_) {
            if (truth_[a] != G[a]) return false;
        }
        return constraints_hold(truth_);
    }

    // Model of every rule in the reduct of the program w.r.t. ctx, or of the
    // program itself when ctx is the candidate.
    bool model_of_reduct(const std::vector<char>& t, const std::vector<char>& ctx) const
    {
        for (const Rule& r : rules_) {
            if (meets(r.neg, ctx) || !body_true(r, t, ctx)) continue;
            switch (r.kind) {
            case RuleKind::Choice:
                for (Atom h : r.heads) {
                    if (ctx[h] && !t[h]) return false;
                }
                break;
            case RuleKind::Disjunctive:
                if (!meets(r.heads, t)) return false;
                break;
            default:
                if (r.heads.empty() || !t[r.heads[0]]) return false;
            }
        }
        return true;
    }

    bool stable_disjunctive(const std::vector<char>& G)
    {
        least_model(G, &G);
        const std::vector<char> I = truth_;
        // Choice rules: I satisfies them trivially; the reduct keeps h :- B+
        // for heads in I, which I also satisfies.
        if (!model_of_reduct(I, I)) return false;

        std::vector<Atom> in;
        for (Atom a : guess_atoms_) {
            if (I[a]) in.push_back(a);
        }
        const std::uint64_t total = std::uint64_t{1} << in.size();
        std::vector<char> sub(n_ + 1, 0);
        for (std::uint64_t mask = 0; mask + 1 < total; ++mask) {
            for (std::size_t i = 0; i < in.size(); ++i) sub[in[i]] = static_cast<char>(mask >> i & 1U);
            least_model(I, &sub);
            if (model_of_reduct(truth_, I)) {
                truth_ = I;
                return false;
            }
        }
        truth_ = I;
        return true;
    }

    Atom n_;
    std::vector<Rule> rules_;
    std::vector<std::vector<std::size_t>> occurrences_;
    std::vector<char> guess_;
    std::vector<Atom> guess_atoms_;
    std::vector<std::uint32_t> count_;
    std::vector<char> truth_;
    bool disjunctive_ = false;
};

}  // namespace

bool satisfies(const Interpretation& I, const Rule& r)
{
    if (r.kind == RuleKind::Minimize || r.kind == RuleKind::Choice) return true;
    if (!body_holds(r, I)) return true;
    return std::any_of(r.heads.begin(), r.heads.end(), [&](Atom h) { return I.count(h) > 0; });
}

bool is_model(const GroundProgram& p, const Interpretation& I)
{
    const std::vector<Rule> rules = normalized_rules(p);
    return std::all_of(rules.begin(), rules.end(), [&](const Rule& r) { return satisfies(I, r); });
}

GroundProgram desugar(const GroundProgram& p, ChoiceTranslation mode)
{
    GroundProgram out;
    out.symbols = p.symbols;
    out.model_count = p.model_count;
    out.max_atom = p.max_atom;
    for (const Rule& r : normalized_rules(p)) {
        switch (r.kind) {
        case RuleKind::Minimize:
            break;
        case RuleKind::Cardinality:
        case RuleKind::Weight:
            for (Rule& b : expand_aggregate(r)) out.rules.push_back(std::move(b));
            break;
        case RuleKind::Choice:
            if (mode == ChoiceTranslation::Native) {
                out.rules.push_back(r);
                break;
            }
            {
                std::vector<Atom> heads = r.heads;
                std::sort(heads.begin(), heads.end());
                heads.erase(std::unique(heads.begin(), heads.end()), heads.end());
                for (Atom h : heads) {
                    const Atom shadow = ++out.max_atom;
                    std::vector<Atom> neg = r.neg;
                    neg.push_back(shadow);
                    out.rules.push_back(Rule::basic(h, r.pos, neg));
                    neg.back() = h;
                    out.rules.push_back(Rule::basic(shadow, r.pos, neg));
                }
            }
            break;
        default:
            out.rules.push_back(r);
        }
    }
    return out;
}

GroundProgram reduct(const GroundProgram& p, const Interpretation& I)
{
    GroundProgram d = desugar(p, ChoiceTranslation::Shadow);
    std::vector<Rule> kept;
    for (Rule& r : d.rules) {
        if (std::any_of(r.neg.begin(), r.neg.end(), [&](Atom a) { return I.count(a) > 0; })) continue;
        r.neg.clear();
        kept.push_back(std::move(r));
    }
    d.rules = std::move(kept);
    return d;
}

std::vector<Interpretation> answer_sets(const GroundProgram& p, const OracleOptions& options)
{
    const GroundProgram native = desugar(p, ChoiceTranslation::Native);
    return Engine(native, options.atom_budget).run(p.max_atom);
}

std::vector<Interpretation> answer_sets_by_definition(const GroundProgram& p,
                                                      const OracleOptions& options)
{
    const GroundProgram d = desugar(p, ChoiceTranslation::Shadow);
    const Atom n = d.max_atom;
    if (n > options.atom_budget || n > 62) {
        throw BudgetExceeded(std::to_string(n) + " atoms exceed the oracle budget of " +
                             std::to_string(options.atom_budget));
    }
    const bool disjunctive = std::any_of(d.rules.begin(), d.rules.end(), [](const Rule& r) {
        return r.kind == RuleKind::Disjunctive;
    });
    auto holds = [](const Rule& r, const std::vector<char>& t, const std::vector<char>& ctx) {
        for (Atom a : r.pos) {
            if (!t[a]) return false;
        }
        for (Atom a : r.neg) {
            if (ctx[a]) return false;
        }
        return true;
    };
    // J is a model of the reduct w.r.t. ctx (J = ctx: a model of d itself).
    auto model = [&](const std::vector<char>& J, const std::vector<char>& ctx) {
        for (const Rule& r : d.rules) {
            if (!holds(r, J, ctx)) continue;
            if (!std::any_of(r.heads.begin(), r.heads.end(), [&](Atom h) { return J[h] != 0; })) {
                return false;
            }
        }
        return true;
    };

    std::set<Interpretation> found;
    std::vector<char> I(n + 1, 0);
    const std::uint64_t total = std::uint64_t{1} << n;
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        for (Atom a = 1; a <= n; ++a) I[a] = static_cast<char>(mask >> (a - 1) & 1U);
        if (!model(I, I)) continue;

        bool minimal = true;
        if (!disjunctive) {
            // Least model of the positive reduct, by naive iteration.
            std::vector<char> lm(n + 1, 0);
            for (bool changed = true; changed;) {
                changed = false;
                for (const Rule& r : d.rules) {
                    if (r.heads.empty() || lm[r.heads[0]] || !holds(r, lm, I)) continue;
                    lm[r.heads[0]] = 1;
                    changed = true;
                }
            }
            minimal = lm == I;
        } else {
            std::vector<char> J(n + 1, 0);
            for (std::uint64_t sub = mask; minimal && sub != 0;) {
                sub = (sub - 1) & mask;
                for (Atom a = 1; a <= n; ++a) J[a] = static_cast<char>(sub >> (a - 1) & 1U);
                if (model(J, I)) minimal = false;
            }
        }
        if (!minimal) continue;
        Interpretation out;
        for (Atom a = 1; a <= p.max_atom; ++a) {
            if (I[a]) out.insert(a);
        }
        found.insert(std::move(out));
    }
    return {found.begin(), found.end()};
}

Interpretation permute(const AtomPermutation& pi, const Interpretation& I)
{
    Interpretation out;
    for (Atom a : I) out.insert(pi(a));
    return out;
}

SoundnessVerdict check_soundness(const GroundProgram& p, const std::vector<AtomPermutation>& perms,
                                 const GroundProgram& augmented, const OracleOptions& options)
{
    SoundnessVerdict v;
    const std::vector<Interpretation> before = answer_sets(p, options);
    std::set<Interpretation> survivors;
    for (const auto& I : answer_sets(augmented, options)) {
        Interpretation projected;
        for (Atom a : I) {
            if (a <= p.max_atom) projected.insert(a);
        }
        survivors.insert(std::move(projected));
    }
    v.original_count = before.size();
    v.surviving_count = survivors.size();
    const std::set<Interpretation> originals(before.begin(), before.end());
    for (const auto& S : survivors) {
        if (!originals.count(S)) v.conservative = false;
    }
    for (const auto& I : before) {
        std::set<Interpretation> seen;
        std::deque<Interpretation> queue;
        seen.insert(I);
        queue.push_back(I);
        bool covered = false;
        while (!queue.empty() && !covered) {
            Interpretation J = std::move(queue.front());
            queue.pop_front();
            if (survivors.count(J)) {
                covered = true;
                break;
            }
            for (const auto& pi : perms) {
                Interpretation K = permute(pi, J);
                if (seen.insert(K).second) queue.push_back(std::move(K));
            }
        }
        if (!covered) {
            v.sound = false;
            v.uncovered.push_back(I);
        }
    }
    return v;
}

Weight objective_value(const GroundProgram& p, const Interpretation& I)
{
    Weight total = 0;
    for (const Rule& r : p.rules) {
        if (r.kind != RuleKind::Minimize) continue;
        for (std::size_t i = 0; i < r.neg.size(); ++i) {
            if (!I.count(r.neg[i])) total += r.neg_weight(i);
        }
        for (std::size_t i = 0; i < r.pos.size(); ++i) {
            if (I.count(r.pos[i])) total += r.pos_weight(i);
        }
    }
    return total;
}

}  // namespace aspbreak
