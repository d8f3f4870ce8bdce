#pragma once

#include "aspbreak/errors.hpp"
#include "aspbreak/graph.hpp"

#include <cstddef>
#include <vector>

namespace aspbreak {

/// Dense permutation of graph nodes: node v is mapped to image[v].
/// Composition reads left to right: `f.then(g)` applies f first, then g.
struct NodePermutation {
    std::vector<NodeId> image;

    static NodePermutation identity(std::size_t n);

    std::size_t size() const { return image.size(); }
    NodeId operator()(NodeId v) const { return image[v]; }
    bool is_identity() const;
    NodePermutation then(const NodePermutation& g) const;
    NodePermutation inverse() const;

    friend bool operator==(const NodePermutation&, const NodePermutation&) = default;
    friend auto operator<=>(const NodePermutation&, const NodePermutation&) = default;
};

/// Both automorphism conditions: colors are kept and (u,v) is an edge iff
/// (image(u), image(v)) is one. Also rejects non-bijective maps.
bool is_automorphism(const ColoredGraph& g, const NodePermutation& p);

/// Ordered partition of the node set. Cells are contiguous ranges of an
/// element array; a cell is identified by its first position, which stays
/// fixed when the cell is split.
class OrderedPartition {
public:
    OrderedPartition() = default;
    /// Throws std::invalid_argument unless the cells are disjoint, non-empty
    /// and cover 0..node_count-1.
    OrderedPartition(std::size_t node_count, const std::vector<std::vector<NodeId>>& cells);

    /// One cell per color class, ordered by ascending color.
    static OrderedPartition by_color(const ColoredGraph& g);

    std::vector<std::vector<NodeId>> cells() const;
    std::size_t cell_count() const;
    std::size_t node_count() const { return elements_.size(); }
    bool is_discrete() const { return cell_count() == elements_.size(); }
    const std::vector<NodeId>& elements() const { return elements_; }

    std::size_t cell_start(NodeId v) const { return cell_of_[v]; }
    std::size_t cell_end(std::size_t start) const { return cell_end_[start]; }
    std::size_t cell_size(std::size_t start) const { return cell_end_[start] - start; }
    /// Position of the first cell with more than one element, or node_count().
    std::size_t first_nonsingleton() const;
    bool same_shape(const OrderedPartition& other) const;

    /// Splits v off its cell as a singleton placed first.
    /// Returns the start of the new singleton cell.
    std::size_t individualize(NodeId v);

    friend class Refiner;

private:
    void split(std::size_t start, std::size_t at);

    std::vector<NodeId> elements_;
    std::vector<std::size_t> position_;  // node -> index into elements_
    std::vector<std::size_t> cell_of_;   // node -> start of its cell
    std::vector<std::size_t> cell_end_;  // start -> one past the cell's end
};

/// Coarsest equitable refinement of `initial`: afterwards any two nodes of a
/// cell have the same number of neighbours in every cell. Splits are ordered
/// by neighbour count, so the result commutes with relabelling the graph.
OrderedPartition color_refine(const ColoredGraph& g, OrderedPartition initial);

struct SearchOptions {
    /// Maximum number of search-tree nodes visited before giving up.
    std::size_t node_budget = 1'000'000;
};

struct GeneratorSearch {
    std::vector<NodePermutation> generators;
    /// False when the budget ran out; the generators found are still
    /// automorphisms but may generate a proper subgroup.
    bool complete = true;
    std::size_t tree_nodes = 0;
};

/// Generators of the automorphism group via individualization-refinement:
/// the first path always picks the smallest node of the first non-singleton
/// cell; for every level (deepest first) each target-cell node outside the
/// known orbit of the first-path choice is probed for a leaf equivalent to
/// the first leaf.
GeneratorSearch find_generators(const ColoredGraph& g, const SearchOptions& options = {});

/// Every automorphism, by enumerating color-preserving bijections. Throws
/// BudgetExceeded when the product of color-class factorials exceeds budget.
std::vector<NodePermutation> brute_force_automorphisms(const ColoredGraph& g,
                                                       double budget = 1e7);

/// Closure of {seed} under the generators, sorted ascending.
std::vector<NodeId> orbit(const std::vector<NodePermutation>& gens, NodeId seed);

/// Copy of g in which each listed node gets a fresh, unique color, so that
/// automorphisms of the result are exactly those of g fixing each of them.
ColoredGraph fix_nodes(const ColoredGraph& g, const std::vector<NodeId>& fixed);

}  // namespace aspbreak
