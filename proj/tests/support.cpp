#include "support.hpp"

#include <algorithm>
#include <deque>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>

#ifndef ASPBREAK_TEST_DATA
#define ASPBREAK_TEST_DATA "tests/data"
#endif

namespace aspbreak::testing {

namespace {

GroundProgram named(std::vector<Rule> rules, std::vector<std::string> names)
{
    GroundProgram p;
    p.rules = std::move(rules);
    for (std::size_t i = 0; i < names.size(); ++i) p.symbols[static_cast<Atom>(i + 1)] = names[i];
    p.update_max_atom();
    return p;
}

}  // namespace

GroundProgram example(int which)
{
    switch (which) {
    case 1:
        return named({Rule::choice({1}), Rule::choice({2})}, {"p", "q"});
    case 2:
        return named({Rule::basic(3, {1, 2}), Rule::choice({1}), Rule::choice({2})},
                     {"p", "q", "r"});
    case 3: {
        GroundProgram p = named({Rule::basic(3, {1, 2}), Rule::choice({1}), Rule::choice({2})},
                                {"p", "q"});
        p.compute_minus = {3};
        return p;
    }
    case 4:
        return named({Rule::disjunctive({1, 2}, {1, 2}), Rule::choice({1}), Rule::choice({2})},
                     {"p", "q"});
    case 5:
        return named({Rule::basic(1), Rule::basic(2)}, {"p", "q"});
    default:
        throw std::invalid_argument("no such example");
    }
}

GroundProgram pigeonhole(std::size_t pigeons, std::size_t holes)
{
    GroundProgram p;
    const Atom n = static_cast<Atom>(pigeons * holes);
    const Atom falsum = n + 1;
    std::vector<Atom> all(n);
    std::iota(all.begin(), all.end(), Atom{1});
    p.rules.push_back(Rule::choice(all));
    for (std::size_t i = 0; i < pigeons; ++i) {
        std::vector<Atom> somewhere;
        for (std::size_t j = 0; j < holes; ++j) somewhere.push_back(place(i, j, holes));
        p.rules.push_back(Rule::basic(falsum, {}, somewhere));
    }
    for (std::size_t j = 0; j < holes; ++j) {
        for (std::size_t i = 0; i < pigeons; ++i) {
            for (std::size_t k = i + 1; k < pigeons; ++k) {
                p.rules.push_back(Rule::basic(falsum, {place(i, j, holes), place(k, j, holes)}));
            }
        }
    }
    for (std::size_t i = 0; i < pigeons; ++i) {
        for (std::size_t j = 0; j < holes; ++j) {
            p.symbols[place(i, j, holes)] =
                "place(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
        }
    }
    p.compute_minus = {falsum};
    p.update_max_atom();
    return p;
}

GroundProgram free_choices(Atom n)
{
    GroundProgram p;
    for (Atom a = 1; a <= n; ++a) {
        p.rules.push_back(Rule::choice({a}));
        p.symbols[a] = "x" + std::to_string(a);
    }
    p.update_max_atom();
    return p;
}

namespace {

std::vector<Atom> distinct_atoms(std::mt19937& rng, Atom atoms, std::size_t count)
{
    std::vector<Atom> pool(atoms);
    std::iota(pool.begin(), pool.end(), Atom{1});
    std::shuffle(pool.begin(), pool.end(), rng);
    pool.resize(std::min<std::size_t>(count, pool.size()));
    return pool;
}

Rule random_rule(std::mt19937& rng, Atom atoms, Atom falsum, bool& uses_falsum)
{
    auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
    auto body = [&](std::size_t max_pos, std::size_t max_neg, std::vector<Atom>& pos,
                    std::vector<Atom>& neg) {
        pos = distinct_atoms(rng, atoms, pick(0, static_cast<int>(max_pos)));
        neg = distinct_atoms(rng, atoms, pick(0, static_cast<int>(max_neg)));
    };
    const Atom head = static_cast<Atom>(pick(1, static_cast<int>(atoms)));
    Rule r;
    switch (pick(0, 9)) {
    case 0:
    case 1:
    case 2:
        r = Rule::basic(head);
        body(2, 2, r.pos, r.neg);
        break;
    case 3:
        r = Rule::basic(falsum);
        body(2, 1, r.pos, r.neg);
        if (r.pos.empty() && r.neg.empty()) r.pos.push_back(head);
        uses_falsum = true;
        break;
    case 4:
    case 5:
        r = Rule::choice(distinct_atoms(rng, atoms, pick(1, 2)));
        body(1, 1, r.pos, r.neg);
        break;
    case 6:
        r = Rule::cardinality(head, 0, {}, {});
        body(2, 2, r.pos, r.neg);
        r.bound = pick(0, static_cast<int>(r.pos.size() + r.neg.size()));
        break;
    case 7:
        r = Rule::weight(head, 0, {}, {}, {});
        body(2, 2, r.pos, r.neg);
        for (std::size_t i = 0; i < r.pos.size() + r.neg.size(); ++i) r.weights.push_back(pick(1, 3));
        r.bound = pick(0, 5);
        break;
    case 8:
        r = Rule::disjunctive(distinct_atoms(rng, atoms, 2));
        body(1, 1, r.pos, r.neg);
        break;
    default:
        r = Rule::minimize({}, {}, {});
        body(2, 1, r.pos, r.neg);
        for (std::size_t i = 0; i < r.pos.size() + r.neg.size(); ++i) r.weights.push_back(pick(1, 2));
    }
    return r;
}

Rule image(const Rule& r, const AtomPermutation& pi, Atom falsum)
{
    Rule out = r;
    auto map = [&](Atom a) { return a == falsum ? a : pi(a); };
    for (Atom& a : out.heads) a = map(a);
    for (Atom& a : out.pos) a = map(a);
    for (Atom& a : out.neg) a = map(a);
    return out;
}

GroundProgram finish(std::vector<Rule> rules, Atom atoms, Atom falsum, bool uses_falsum)
{
    GroundProgram p;
    p.rules = std::move(rules);
    for (Atom a = 1; a <= atoms; ++a) p.symbols[a] = "a" + std::to_string(a);
    if (uses_falsum) p.compute_minus.push_back(falsum);
    p.update_max_atom();
    p.max_atom = std::max(p.max_atom, atoms);
    return p;
}

}  // namespace

GroundProgram random_program(std::mt19937& rng, Atom atoms, std::size_t max_rules)
{
    const Atom falsum = atoms + 1;
    bool uses_falsum = false;
    const std::size_t count = std::uniform_int_distribution<std::size_t>(1, max_rules)(rng);
    std::vector<Rule> rules;
    for (std::size_t i = 0; i < count; ++i) rules.push_back(random_rule(rng, atoms, falsum, uses_falsum));
    GroundProgram p = finish(std::move(rules), atoms, falsum, uses_falsum);
    // Occasionally a compute statement on an ordinary atom.
    const int c = std::uniform_int_distribution<int>(0, 5)(rng);
    const Atom a = std::uniform_int_distribution<Atom>(1, atoms)(rng);
    if (c == 0) p.compute_plus.push_back(a);
    if (c == 1) p.compute_minus.push_back(a);
    return p;
}

GroundProgram random_symmetric_program(std::mt19937& rng, Atom atoms, std::size_t max_rules)
{
    const Atom falsum = atoms + 1;
    // A random permutation made of 2- and 3-cycles.
    std::vector<Atom> pool(atoms);
    std::iota(pool.begin(), pool.end(), Atom{1});
    std::shuffle(pool.begin(), pool.end(), rng);
    std::vector<std::vector<Atom>> cycles;
    std::size_t at = 0;
    while (at + 1 < pool.size() && std::uniform_int_distribution<int>(0, 3)(rng) != 0) {
        const std::size_t len = (at + 2 < pool.size() && rng() % 3 == 0) ? 3 : 2;
        cycles.emplace_back(pool.begin() + at, pool.begin() + at + len);
        at += len;
    }
    if (cycles.empty()) cycles.push_back({pool[0], pool[1]});
    const AtomPermutation pi = AtomPermutation::from_cycles(cycles);
    std::size_t order = 1;
    for (const auto& c : cycles) order = std::lcm(order, c.size());

    bool uses_falsum = false;
    std::vector<Rule> rules;
    while (rules.size() + order <= max_rules) {
        Rule r = random_rule(rng, atoms, falsum, uses_falsum);
        for (std::size_t k = 0; k < order; ++k) {
            rules.push_back(r);
            r = image(r, pi, falsum);
        }
        if (rng() % 3 == 0) break;
    }
    if (rules.empty()) {
        Rule r = Rule::choice({pool[0]});
        for (std::size_t k = 0; k < order; ++k) {
            rules.push_back(r);
            r = image(r, pi, falsum);
        }
    }
    return finish(std::move(rules), atoms, falsum, uses_falsum);
}

ColoredGraph random_graph(std::mt19937& rng, std::size_t nodes, Color colors, double density)
{
    ColoredGraph g;
    std::uniform_int_distribution<Color> color(1, colors);
    for (std::size_t v = 0; v < nodes; ++v) g.add_node(color(rng));
    std::bernoulli_distribution edge(density);
    for (NodeId u = 0; u < nodes; ++u) {
        for (NodeId v = u + 1; v < nodes; ++v) {
            if (edge(rng)) g.add_edge(u, v);
        }
    }
    g.finalize();
    return g;
}

std::set<NodePermutation> closure(const std::vector<NodePermutation>& gens, std::size_t n)
{
    std::set<NodePermutation> seen{NodePermutation::identity(n)};
    std::deque<NodePermutation> queue(seen.begin(), seen.end());
    while (!queue.empty()) {
        NodePermutation f = std::move(queue.front());
        queue.pop_front();
        for (const auto& g : gens) {
            NodePermutation h = f.then(g);
            if (seen.insert(h).second) queue.push_back(std::move(h));
        }
    }
    return seen;
}

std::set<AtomPermutation> closure(const std::vector<AtomPermutation>& gens)
{
    std::set<AtomPermutation> seen{AtomPermutation{}};
    std::deque<AtomPermutation> queue(seen.begin(), seen.end());
    while (!queue.empty()) {
        AtomPermutation f = std::move(queue.front());
        queue.pop_front();
        for (const auto& g : gens) {
            AtomPermutation h = f.then(g);
            if (seen.insert(h).second) queue.push_back(std::move(h));
        }
    }
    return seen;
}

std::vector<AtomPermutation> all_syntactic_symmetries(const GroundProgram& p)
{
    const SymmetryChecker check(p);
    std::vector<Atom> perm(p.max_atom);
    std::iota(perm.begin(), perm.end(), Atom{1});
    std::vector<AtomPermutation> out;
    do {
        std::map<Atom, Atom> images;
        for (Atom a = 1; a <= p.max_atom; ++a) images[a] = perm[a - 1];
        AtomPermutation pi = AtomPermutation::from_map(images);
        if (check(pi)) out.push_back(std::move(pi));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

bool lex_leq(const Interpretation& I, const AtomPermutation& pi, const AtomOrder& order)
{
    for (Atom v : order.sequence()) {
        const bool lhs = I.count(v) > 0;
        const bool rhs = I.count(pi(v)) > 0;
        if (lhs != rhs) return !lhs;
    }
    return true;
}

std::string show(const Interpretation& I)
{
    std::string out = "{";
    for (Atom a : I) {
        if (out.size() > 1) out += ",";
        out += std::to_string(a);
    }
    return out + "}";
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

std::vector<std::string> corpus_files()
{
    std::vector<std::string> out;
    for (const auto& entry : std::filesystem::directory_iterator(ASPBREAK_TEST_DATA)) {
        if (entry.path().extension() == ".sm") out.push_back(entry.path().string());
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::string normalize_whitespace(const std::string& text)
{
    std::istringstream in(text);
    std::string line, out;
    while (std::getline(in, line)) {
        std::istringstream words(line);
        std::string w, joined;
        while (words >> w) joined += (joined.empty() ? "" : " ") + w;
        if (!joined.empty()) out += joined + "\n";
    }
    return out;
}

}  // namespace aspbreak::testing
