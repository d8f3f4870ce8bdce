#include "support.hpp"

#include "aspbreak/breaking.hpp"
#include "aspbreak/pipeline.hpp"
#include "aspbreak/smodels.hpp"

#include <doctest.h>

#include <random>

using namespace aspbreak;
using namespace aspbreak::testing;

namespace {

AtomPermutation cyc(std::vector<std::vector<Atom>> c) { return AtomPermutation::from_cycles(c); }

std::vector<Interpretation> projected_answer_sets(const GroundProgram& augmented, Atom max_atom)
{
    std::set<Interpretation> out;
    for (const auto& I : answer_sets(augmented)) {
        Interpretation J;
        for (Atom a : I) {
            if (a <= max_atom) J.insert(a);
        }
        out.insert(J);
    }
    return {out.begin(), out.end()};
}

GroundProgram with_fragment(const GroundProgram& p, const BreakingProgram& f)
{
    return assemble(p, {f});
}

// Multisets of k values drawn from n: C(n + k - 1, k).
std::size_t multisets(std::size_t n, std::size_t k)
{
    std::size_t r = 1;
    for (std::size_t i = 1; i <= k; ++i) r = r * (n + i - 1) / i;
    return r;
}

}  // namespace

TEST_CASE("lex-leader for a transposition")
{
    const GroundProgram p = example(1);
    AtomAllocator alloc(p.max_atom + 1);
    const BreakingProgram f = lex_leader_rules(cyc({{1, 2}}), AtomOrder::natural(2), 50, alloc);
    REQUIRE(f.new_rules.size() == 1);
    CHECK(f.new_rules[0] == Rule::constraint({1}, {2}));
    CHECK(f.aux_atoms.empty());
    CHECK(f.per_symmetry_aux_count == std::vector<std::size_t>{0});

    const auto survivors = answer_sets(with_fragment(p, f));
    CHECK(projected_answer_sets(with_fragment(p, f), 2) ==
          std::vector<Interpretation>{{}, {1, 2}, {2}});
    CHECK(survivors.size() == 3);
}

TEST_CASE("identity gives an empty fragment")
{
    AtomAllocator alloc(3);
    const BreakingProgram f = lex_leader_rules(AtomPermutation{}, AtomOrder::natural(2), 50, alloc);
    CHECK(f.empty());
    CHECK(alloc.peek() == 3);
}

TEST_CASE("lex-leader for a 3-cycle")
{
    const GroundProgram p = free_choices(3);
    const AtomPermutation pi = cyc({{1, 2, 3}});
    const AtomOrder order = AtomOrder::natural(3);
    AtomAllocator alloc(4);
    const BreakingProgram f = lex_leader_rules(pi, order, 50, alloc);

    // 3 is last in its cycle, so only positions 1 and 2 remain.
    CHECK(f.aux_atoms == std::vector<Atom>{4});
    REQUIRE(f.new_rules.size() == 4);
    CHECK(f.new_rules[0] == Rule::constraint({1}, {2}));
    CHECK(f.new_rules[1] == Rule::basic(4, {1, 2}, {}));
    CHECK(f.new_rules[2] == Rule::basic(4, {}, {1, 2}));
    CHECK(f.new_rules[3] == Rule::constraint({4, 2}, {3}));

    std::vector<Interpretation> expected;
    for (const auto& I : answer_sets(p)) {
        if (lex_leq(I, pi, order)) expected.push_back(I);
    }
    CHECK(projected_answer_sets(with_fragment(p, f), 3) == expected);
    CHECK(expected.size() == 5);  // one generator alone does not break the 3-cycle completely
}

TEST_CASE("aux atoms are defined by rules")
{
    std::mt19937 rng(2);
    for (int i = 0; i < 50; ++i) {
        const GroundProgram p = random_symmetric_program(rng, 8, 12);
        const PipelineResult r = break_symmetries(p);
        std::set<Atom> heads;
        for (const Rule& rule : r.output.rules) heads.insert(rule.heads.begin(), rule.heads.end());
        for (Atom a = p.max_atom + 1; a <= p.max_atom + r.aux_atoms; ++a) CHECK(heads.count(a) == 1);
    }
}

TEST_CASE("truncation")
{
    const AtomPermutation pi = cyc({{1, 2}, {3, 4}, {5, 6}, {7, 8}});
    const AtomOrder order = AtomOrder::natural(8);
    for (std::size_t limit : {0u, 1u, 3u, 50u}) {
        AtomAllocator alloc(9);
        const BreakingProgram f = lex_leader_rules(pi, order, limit, alloc);
        CHECK(f.aux_atoms.size() == std::min<std::size_t>(limit, 3));  // positions 1, 3, 5, 7
        CHECK(f.per_symmetry_aux_count.at(0) <= limit);
        // Still sound: the lex-least member of each orbit survives.
        const GroundProgram p = free_choices(8);
        const SoundnessVerdict v = check_soundness(p, {pi}, with_fragment(p, f));
        CHECK(v.ok());
    }
}

TEST_CASE("single-symmetry exactness on random programs")
{
    std::mt19937 rng(31);
    int checked = 0;
    for (int i = 0; i < 150; ++i) {
        const GroundProgram p = random_symmetric_program(rng, 7, 10);
        const auto gens = detect(p).generators;
        const AtomOrder order = choose_order(p, gens, {});
        const auto before = answer_sets(p);
        for (const auto& pi : gens) {
            AtomAllocator alloc(p.max_atom + 1);
            const BreakingProgram f = lex_leader_rules(pi, order, 50, alloc);
            std::vector<Interpretation> expected;
            for (const auto& I : before) {
                if (lex_leq(I, pi, order)) expected.push_back(I);
            }
            CHECK(projected_answer_sets(with_fragment(p, f), p.max_atom) == expected);
            ++checked;
        }
    }
    CHECK(checked > 50);
}

TEST_CASE("row breaking is complete on free choices")
{
    SUBCASE("3 x 1")
    {
        const GroundProgram p = free_choices(3);
        const RowMatrix m{{{1}, {2}, {3}}};
        AtomAllocator alloc(4);
        const BreakingProgram f = break_rows(m, AtomOrder::natural(3), 50, alloc);
        CHECK(answer_sets(p).size() == 8);
        CHECK(projected_answer_sets(with_fragment(p, f), 3).size() == 4);
        CHECK(multisets(2, 3) == 4);
    }
    SUBCASE("3 x 2")
    {
        const GroundProgram p = free_choices(6);
        const RowMatrix m{{{1, 2}, {3, 4}, {5, 6}}};
        AtomAllocator alloc(7);
        const BreakingProgram f = break_rows(m, AtomOrder::natural(6), 50, alloc);
        CHECK(f.per_symmetry_aux_count.size() == 2);
        CHECK(answer_sets(p).size() == 64);
        CHECK(projected_answer_sets(with_fragment(p, f), 6).size() == 20);
        CHECK(multisets(4, 3) == 20);
    }
    SUBCASE("2 rows give one fragment")
    {
        const RowMatrix m{{{1, 2}, {3, 4}}};
        AtomAllocator alloc(5);
        const BreakingProgram f = break_rows(m, AtomOrder::natural(4), 50, alloc);
        CHECK(f.per_symmetry_aux_count.size() == 1);
        AtomAllocator again(5);
        CHECK(f.new_rules ==
              lex_leader_rules(m.row_swap(0, 1), AtomOrder::natural(4), 50, again).new_rules);
    }
    SUBCASE("4 x 2 on detected rows")
    {
        const GroundProgram p = free_choices(8);
        const RowMatrix m{{{1, 2}, {3, 4}, {5, 6}, {7, 8}}};
        AtomAllocator alloc(9);
        const BreakingProgram f = break_rows(m, AtomOrder::natural(8), 50, alloc);
        CHECK(projected_answer_sets(with_fragment(p, f), 8).size() == multisets(4, 4));
    }
}

TEST_CASE("binary rules")
{
    CHECK(binary_rules({{1, 2}}).new_rules == std::vector<Rule>{Rule::constraint({1}, {2})});
    CHECK(binary_rules({}).empty());
    CHECK(binary_rules({{1, 2}, {1, 2}}).new_rules.size() == 1);
    CHECK(binary_rules({{1, 2}}).aux_atoms.empty());
}

TEST_CASE("assembly")
{
    SUBCASE("no fragments")
    {
        const GroundProgram p = example(3);
        CHECK(assemble(p, {}) == p);
    }
    SUBCASE("fresh false atom when the input has none")
    {
        const GroundProgram p = example(1);
        AtomAllocator alloc(3);
        const GroundProgram out =
            assemble(p, {lex_leader_rules(cyc({{1, 2}}), AtomOrder::natural(2), 50, alloc)});
        CHECK(out.max_atom == 3);
        CHECK(out.compute_minus == std::vector<Atom>{3});
        CHECK(out.rules.back() == Rule::basic(3, {1}, {2}));
        CHECK(false_atom(out) == std::optional<Atom>{3});
        CHECK(validate(out).empty());
        CHECK(parse_program(write_program(out)) == out);
        CHECK(write_program(out) == "3 1 1 0 0\n3 1 2 0 0\n1 3 2 1 2 1\n0\n1 p\n2 q\n0\nB+\n0\nB-\n3\n0\n1\n");
    }
    SUBCASE("existing false atom is reused")
    {
        const GroundProgram p = example(3);
        AtomAllocator alloc(4);
        const GroundProgram out =
            assemble(p, {lex_leader_rules(cyc({{1, 2}}), AtomOrder::natural(3), 50, alloc)});
        CHECK(out.max_atom == 3);
        CHECK(out.compute_minus == p.compute_minus);
        CHECK(out.rules.back() == Rule::basic(3, {1}, {2}));
        CHECK(out.symbols == p.symbols);
    }
    SUBCASE("max atom grows by the aux count")
    {
        const GroundProgram p = pigeonhole(3, 2);
        AtomAllocator alloc(p.max_atom + 1);
        const AtomOrder order = AtomOrder::natural(p.max_atom);
        std::vector<BreakingProgram> fs;
        fs.push_back(lex_leader_rules(cyc({{1, 3}, {2, 4}}), order, 50, alloc));
        fs.push_back(lex_leader_rules(cyc({{1, 2}, {3, 4}, {5, 6}}), order, 2, alloc));
        const GroundProgram out = assemble(p, fs);
        CHECK(out.max_atom == p.max_atom + 1 + 2);
        CHECK(validate(out).empty());
    }
    SUBCASE("aux atoms must be fresh")
    {
        const GroundProgram p = free_choices(4);
        AtomAllocator alloc(3);
        const BreakingProgram f = lex_leader_rules(cyc({{1, 2}, {3, 4}}), AtomOrder::natural(4), 50, alloc);
        CHECK_THROWS_AS(assemble(p, {f}), AuxCollision);
    }
}

TEST_CASE("aux budget per symmetry")
{
    std::mt19937 rng(8);
    for (std::size_t limit : {0u, 3u, 50u}) {
        for (int i = 0; i < 40; ++i) {
            const GroundProgram p =
                i % 4 == 0 ? pigeonhole(3 + i % 3, 3) : random_symmetric_program(rng, 10, 12);
            PipelineOptions o;
            o.aux_limit = limit;
            const PipelineResult r = break_symmetries(p, o);
            for (std::size_t c : r.per_symmetry_aux) CHECK(c <= limit);
            std::size_t total = 0;
            for (std::size_t c : r.per_symmetry_aux) total += c;
            CHECK(total == r.aux_atoms);
        }
    }
}

TEST_CASE("pipeline output stays valid and round-trips")
{
    std::mt19937 rng(17);
    for (int i = 0; i < 60; ++i) {
        const GroundProgram p = random_symmetric_program(rng, 9, 12);
        const PipelineResult r = break_symmetries(p);
        CHECK(validate(r.output).empty());
        CHECK(parse_program(write_program(r.output)) == r.output);
        CHECK(r.breaking_rules == r.output.rules.size() - p.rules.size());
    }
}
