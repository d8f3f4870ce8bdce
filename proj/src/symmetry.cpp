#include "aspbreak/symmetry.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

namespace aspbreak {

// ---------------------------------------------------------------------------
// AtomPermutation

AtomPermutation AtomPermutation::from_map(const std::map<Atom, Atom>& images)
{
    std::set<Atom> keys, values;
    AtomPermutation out;
    for (auto [a, b] : images) {
        keys.insert(a);
        values.insert(b);
        if (a != b) out.moved_[a] = b;
    }
    if (keys != values || values.size() != images.size()) {
        throw std::invalid_argument("atom map is not a permutation of its domain");
    }
    return out;
}

AtomPermutation AtomPermutation::from_cycles(const std::vector<std::vector<Atom>>& cycles)
{
    std::map<Atom, Atom> images;
    for (const auto& c : cycles) {
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (!images.emplace(c[i], c[(i + 1) % c.size()]).second) {
                throw std::invalid_argument("cycles are not disjoint");
            }
        }
    }
    return from_map(images);
}

Atom AtomPermutation::operator()(Atom a) const
{
    auto it = moved_.find(a);
    return it == moved_.end() ? a : it->second;
}

std::vector<Atom> AtomPermutation::support() const
{
    std::vector<Atom> out;
    out.reserve(moved_.size());
    for (const auto& kv : moved_) out.push_back(kv.first);
    return out;
}

bool AtomPermutation::is_involution() const
{
    if (moved_.empty()) return false;
    for (auto [a, b] : moved_) {
        if ((*this)(b) != a) return false;
    }
    return true;
}

AtomPermutation AtomPermutation::then(const AtomPermutation& next) const
{
    std::map<Atom, Atom> images;
    for (auto [a, b] : moved_) images[a] = next(b);
    for (auto [a, b] : next.moved_) {
        if (!moved_.count(a)) images[a] = b;
    }
    AtomPermutation out;
    for (auto [a, b] : images) {
        if (a != b) out.moved_[a] = b;
    }
    return out;
}

AtomPermutation AtomPermutation::inverse() const
{
    AtomPermutation out;
    for (auto [a, b] : moved_) out.moved_[b] = a;
    return out;
}

std::vector<std::vector<Atom>> AtomPermutation::cycles() const
{
    std::vector<std::vector<Atom>> out;
    std::set<Atom> seen;
    for (const auto& kv : moved_) {
        Atom start = kv.first;
        if (seen.count(start)) continue;
        std::vector<Atom> cycle;
        for (Atom a = start; !seen.count(a); a = (*this)(a)) {
            seen.insert(a);
            cycle.push_back(a);
        }
        out.push_back(std::move(cycle));
    }
    return out;
}

std::string AtomPermutation::to_string(const GroundProgram& p) const
{
    if (moved_.empty()) return "()";
    std::ostringstream out;
    for (const auto& cycle : cycles()) {
        out << '(';
        for (std::size_t i = 0; i < cycle.size(); ++i) {
            if (i) out << ' ';
            out << p.atom_name(cycle[i]);
        }
        out << ')';
    }
    return out.str();
}

AtomPermutation restrict_to_atoms(const ColoredGraph& g, const NodePermutation& sigma)
{
    std::map<Atom, Atom> images;
    for (Atom a : g.atoms()) {
        const std::optional<Atom> b = g.atom_of(sigma(*g.atom_node(a)));
        if (!b) throw RejectedSymmetry("atom node " + std::to_string(a) + " mapped off the atoms");
        if (sigma(*g.negation_node(a)) != *g.negation_node(*b)) {
            throw RejectedSymmetry("negation of atom " + std::to_string(a) + " not carried along");
        }
        images[a] = *b;
    }
    return AtomPermutation::from_map(images);
}

// ---------------------------------------------------------------------------
// Syntactic check

SymmetryChecker::SymmetryChecker(const GroundProgram& p)
    : max_atom_(p.max_atom), falsum_(false_atom(p))
{
    for (const Rule& r : normalized_rules(p)) keys_.push_back(canonical(r, nullptr));
    std::sort(keys_.begin(), keys_.end());
}

SymmetryChecker::Key SymmetryChecker::canonical(const Rule& r, const AtomPermutation* pi)
{
    auto map = [pi](Atom a) { return pi ? (*pi)(a) : a; };
    auto mapped = [&](const std::vector<Atom>& atoms) {
        std::vector<Atom> out;
        out.reserve(atoms.size());
        for (Atom a : atoms) out.push_back(map(a));
        std::sort(out.begin(), out.end());
        return out;
    };

    Key k;
    k.kind = static_cast<int>(r.kind);
    k.heads = mapped(r.heads);
    if (r.has_bound()) k.bound = r.bound;
    // The graph cannot tell a one-head disjunction from a basic rule, nor an
    // empty weight body from an empty cardinality body; neither can the
    // semantics.
    if (r.kind == RuleKind::Disjunctive) k.kind = static_cast<int>(RuleKind::Basic);
    if (r.kind == RuleKind::Weight && r.pos.empty() && r.neg.empty()) {
        k.kind = static_cast<int>(RuleKind::Cardinality);
    }
    if (r.has_weights() && k.kind != static_cast<int>(RuleKind::Cardinality)) {
        for (std::size_t i = 0; i < r.neg.size(); ++i) {
            k.terms.emplace_back(-static_cast<std::int64_t>(map(r.neg[i])), r.neg_weight(i));
        }
        for (std::size_t i = 0; i < r.pos.size(); ++i) {
            k.terms.emplace_back(static_cast<std::int64_t>(map(r.pos[i])), r.pos_weight(i));
        }
        std::sort(k.terms.begin(), k.terms.end());
    } else {
        k.pos = mapped(r.pos);
        k.neg = mapped(r.neg);
    }
    return k;
}

bool SymmetryChecker::operator()(const AtomPermutation& pi) const
{
    for (auto [a, b] : pi.moved()) {
        if (a < 1 || a > max_atom_ || b < 1 || b > max_atom_) return false;
        if (falsum_ && a == *falsum_) return false;
    }
    if (pi.is_identity()) return true;
    // Mapping the stored keys is equivalent to mapping the rules themselves.
    std::vector<Key> image;
    image.reserve(keys_.size());
    for (const Key& k : keys_) {
        Key m = k;
        for (Atom& a : m.heads) a = pi(a);
        for (Atom& a : m.pos) a = pi(a);
        for (Atom& a : m.neg) a = pi(a);
        for (auto& [lit, w] : m.terms) {
            const Atom a = static_cast<Atom>(lit < 0 ? -lit : lit);
            lit = lit < 0 ? -static_cast<std::int64_t>(pi(a)) : static_cast<std::int64_t>(pi(a));
        }
        std::sort(m.heads.begin(), m.heads.end());
        std::sort(m.pos.begin(), m.pos.end());
        std::sort(m.neg.begin(), m.neg.end());
        std::sort(m.terms.begin(), m.terms.end());
        image.push_back(std::move(m));
    }
    std::sort(image.begin(), image.end());
    return image == keys_;
}

bool is_syntactic_symmetry(const GroundProgram& p, const AtomPermutation& pi)
{
    return SymmetryChecker(p)(pi);
}

// ---------------------------------------------------------------------------
// Row interchangeability

std::vector<Atom> RowMatrix::atoms() const
{
    std::vector<Atom> out;
    for (const auto& row : rows) out.insert(out.end(), row.begin(), row.end());
    return out;
}

AtomPermutation RowMatrix::row_swap(std::size_t i, std::size_t j) const
{
    std::map<Atom, Atom> images;
    for (std::size_t c = 0; c < rows[i].size(); ++c) {
        images[rows[i][c]] = rows[j][c];
        images[rows[j][c]] = rows[i][c];
    }
    return AtomPermutation::from_map(images);
}

namespace {

// Caps keep row detection cheap on programs with many generators; the
// result only loses structure, never soundness.
constexpr std::size_t max_letters = 64;
constexpr std::size_t max_seeds = 256;

std::vector<AtomPermutation> short_words(const std::vector<AtomPermutation>& gens)
{
    std::set<AtomPermutation> letters;
    for (const auto& g : gens) {
        if (letters.size() >= max_letters) break;
        if (g.is_identity()) continue;
        letters.insert(g);
        letters.insert(g.inverse());
    }
    std::set<AtomPermutation> words(letters.begin(), letters.end());
    for (const auto& a : letters) {
        for (const auto& b : letters) {
            AtomPermutation ab = a.then(b);
            if (!ab.is_identity()) words.insert(std::move(ab));
        }
    }
    return {words.begin(), words.end()};
}

RowMatrix grow(const AtomPermutation& seed, const std::vector<AtomPermutation>& maps,
               const SymmetryChecker& check)
{
    RowMatrix m;
    std::vector<Atom> first, second;
    for (const auto& cycle : seed.cycles()) {
        first.push_back(cycle[0]);
        second.push_back(cycle[1]);
    }
    m.rows = {first, second};
    if (!check(m.row_swap(0, 1))) return {};
    std::set<Atom> used(first.begin(), first.end());
    used.insert(second.begin(), second.end());

    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t r = 0; r < m.rows.size(); ++r) {
            for (const auto& f : maps) {
                std::vector<Atom> row;
                row.reserve(m.rows[r].size());
                bool fresh = true;
                for (Atom a : m.rows[r]) {
                    const Atom b = f(a);
                    if (used.count(b)) {
                        fresh = false;
                        break;
                    }
                    row.push_back(b);
                }
                if (!fresh) continue;
                RowMatrix trial{{m.rows.back(), row}};
                if (!check(trial.row_swap(0, 1))) continue;
                used.insert(row.begin(), row.end());
                m.rows.push_back(std::move(row));
                changed = true;
            }
        }
    }
    return m;
}

}  // namespace

std::vector<RowMatrix> detect_rows(const GroundProgram& p, const std::vector<AtomPermutation>& gens)
{
    if (gens.empty()) return {};
    const SymmetryChecker check(p);
    const std::vector<AtomPermutation> maps = short_words(gens);

    std::vector<RowMatrix> candidates;
    std::size_t seeds = 0;
    for (const auto& seed : maps) {
        if (!seed.is_involution()) continue;
        if (++seeds > max_seeds) break;
        RowMatrix m = grow(seed, maps, check);
        if (m.row_count() >= 3) candidates.push_back(std::move(m));
    }

    auto lowest = [](const RowMatrix& m) {
        const auto atoms = m.atoms();
        return *std::min_element(atoms.begin(), atoms.end());
    };
    std::stable_sort(candidates.begin(), candidates.end(),
                     [&](const RowMatrix& a, const RowMatrix& b) {
                         const std::size_t sa = a.atoms().size(), sb = b.atoms().size();
                         if (sa != sb) return sa > sb;
                         if (a.row_count() != b.row_count()) return a.row_count() > b.row_count();
                         return lowest(a) < lowest(b);
                     });

    std::vector<RowMatrix> out;
    std::set<Atom> taken;
    for (auto& m : candidates) {
        const auto atoms = m.atoms();
        if (std::any_of(atoms.begin(), atoms.end(), [&](Atom a) { return taken.count(a); })) {
            continue;
        }
        taken.insert(atoms.begin(), atoms.end());
        out.push_back(std::move(m));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Ordering

AtomOrder::AtomOrder(std::vector<Atom> sequence) : sequence_(std::move(sequence))
{
    rank_.assign(sequence_.size() + 1, 0);
    std::vector<bool> seen(sequence_.size() + 1, false);
    for (std::size_t i = 0; i < sequence_.size(); ++i) {
        const Atom a = sequence_[i];
        if (a < 1 || a > sequence_.size() || seen[a]) {
            throw std::invalid_argument("atom order is not a permutation of 1..n");
        }
        seen[a] = true;
        rank_[a] = i;
    }
}

AtomOrder AtomOrder::natural(Atom max_atom)
{
    std::vector<Atom> seq(max_atom);
    for (Atom a = 1; a <= max_atom; ++a) seq[a - 1] = a;
    return AtomOrder(std::move(seq));
}

AtomOrder choose_order(const GroundProgram& p, const std::vector<AtomPermutation>& gens,
                       const std::vector<RowMatrix>& rows)
{
    std::vector<Atom> seq;
    std::vector<bool> placed(p.max_atom + 1, false);
    auto place = [&](Atom a) {
        if (a >= 1 && a <= p.max_atom && !placed[a]) {
            placed[a] = true;
            seq.push_back(a);
        }
    };
    for (const auto& m : rows) {
        for (Atom a : m.atoms()) place(a);
    }
    std::vector<const AtomPermutation*> sorted;
    for (const auto& g : gens) {
        if (!g.is_identity()) sorted.push_back(&g);
    }
    std::stable_sort(sorted.begin(), sorted.end(), [](const auto* a, const auto* b) {
        if (a->support_size() != b->support_size()) return a->support_size() < b->support_size();
        return a->moved().begin()->first < b->moved().begin()->first;
    });
    for (const auto* g : sorted) {
        for (const auto& cycle : g->cycles()) {
            for (Atom a : cycle) place(a);
        }
    }
    for (Atom a = 1; a <= p.max_atom; ++a) place(a);
    return AtomOrder(std::move(seq));
}

// ---------------------------------------------------------------------------
// Detection and the stabilizer chain

DetectedSymmetries detect_symmetries(const ColoredGraph& g, const SymmetryChecker& check,
                                     const SearchOptions& options)
{
    DetectedSymmetries out;
    const GeneratorSearch search = find_generators(g, options);
    out.complete = search.complete;
    std::set<AtomPermutation> seen;
    for (const auto& sigma : search.generators) {
        AtomPermutation pi;
        try {
            pi = restrict_to_atoms(g, sigma);
        } catch (const RejectedSymmetry&) {
            ++out.rejected;
            continue;
        }
        // Swapping two identical rules moves no atom.
        if (pi.is_identity()) continue;
        if (!check(pi)) {
            ++out.rejected;
            continue;
        }
        if (seen.insert(pi).second) out.generators.push_back(std::move(pi));
    }
    return out;
}

std::vector<BinaryPair> stabilizer_binary_symmetries(const GroundProgram& p, const ColoredGraph& g,
                                                     const AtomOrder& order, std::size_t levels,
                                                     const SearchOptions& options)
{
    const SymmetryChecker check(p);
    std::vector<BinaryPair> out;
    std::vector<NodeId> fixed;
    std::vector<AtomPermutation> gens = detect_symmetries(g, check, options).generators;

    for (std::size_t level = 0; level < levels && !gens.empty(); ++level) {
        Atom v = 0;
        for (const auto& pi : gens) {
            for (const auto& kv : pi.moved()) {
                if (v == 0 || order.less(kv.first, v)) v = kv.first;
            }
        }

        // Schreier-tree walk: witness[w] maps v to w.
        std::map<Atom, AtomPermutation> witness{{v, AtomPermutation{}}};
        std::deque<Atom> queue{v};
        while (!queue.empty()) {
            const Atom u = queue.front();
            queue.pop_front();
            for (const auto& pi : gens) {
                const Atom w = pi(u);
                if (witness.count(w)) continue;
                witness.emplace(w, witness.at(u).then(pi));
                queue.push_back(w);
            }
        }

        std::vector<Atom> targets;
        for (const auto& kv : witness) {
            if (kv.first != v) targets.push_back(kv.first);
        }
        std::sort(targets.begin(), targets.end(),
                  [&](Atom a, Atom b) { return order.less(a, b); });
        for (Atom w : targets) {
            const AtomPermutation& pi = witness.at(w);
            const bool prefix_fixed = std::all_of(
                pi.moved().begin(), pi.moved().end(),
                [&](const auto& kv) { return !order.less(kv.first, v); });
            if (prefix_fixed && check(pi)) out.push_back({v, w, pi});
        }

        fixed.push_back(*g.atom_node(v));
        gens = detect_symmetries(fix_nodes(g, fixed), check, options).generators;
    }
    return out;
}

}  // namespace aspbreak
