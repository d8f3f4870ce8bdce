#pragma once

#include "aspbreak/automorphism.hpp"
#include "aspbreak/breaking.hpp"
#include "aspbreak/program.hpp"
#include "aspbreak/symmetry.hpp"

#include <cstddef>
#include <vector>

namespace aspbreak {

struct PipelineOptions {
    std::size_t aux_limit = default_aux_limit;
    SearchOptions search;
    std::size_t stabilizer_levels = 5;
    bool rows = true;
    bool binary = true;
};

struct PipelineResult {
    GroundProgram output;
    std::vector<AtomPermutation> generators;
    std::vector<RowMatrix> rows;
    std::vector<BinaryPair> pairs;
    AtomOrder order;
    /// Aux atoms per broken permutation: row swaps first, then generators.
    std::vector<std::size_t> per_symmetry_aux;
    std::size_t breaking_rules = 0;
    std::size_t aux_atoms = 0;
    std::size_t rejected = 0;
    bool search_complete = true;

    /// Every permutation a breaking rule was derived from. Soundness holds
    /// relative to the group these generate.
    std::vector<AtomPermutation> used_permutations() const;
};

/// Detect symmetries of p and append rules breaking them.
PipelineResult break_symmetries(const GroundProgram& p, const PipelineOptions& options = {});

/// Detection only: validated generators of the syntactic symmetry group.
DetectedSymmetries detect(const GroundProgram& p, const SearchOptions& options = {});

}  // namespace aspbreak
