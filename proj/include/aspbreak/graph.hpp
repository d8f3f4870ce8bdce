#pragma once

#include "aspbreak/program.hpp"

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <vector>

namespace aspbreak {

using NodeId = std::uint32_t;
using Color = std::uint32_t;

/// Structural colors of the program graph. Integers occurring as bounds or
/// weights get colors numbered from `first_value_color` upwards.
namespace colors {
inline constexpr Color atom = 1;
inline constexpr Color negation = 2;
inline constexpr Color head = 3;
inline constexpr Color body = 4;
inline constexpr Color choice_head = 5;
inline constexpr Color minimize = 6;
inline constexpr Color first_value_color = 7;
}  // namespace colors

/// Undirected vertex-colored graph with sorted adjacency lists.
class ColoredGraph {
public:
    ColoredGraph() = default;
    explicit ColoredGraph(std::vector<Color> node_colors);

    NodeId add_node(Color c);
    void add_edge(NodeId u, NodeId v);
    /// Sorts and deduplicates adjacency lists; call once after the last add_edge.
    void finalize();

    std::size_t node_count() const { return colors_.size(); }
    std::size_t edge_count() const;
    Color color(NodeId v) const { return colors_[v]; }
    void set_color(NodeId v, Color c) { colors_[v] = c; }
    const std::vector<Color>& colors() const { return colors_; }
    std::span<const NodeId> neighbors(NodeId v) const { return adjacency_[v]; }
    bool has_edge(NodeId u, NodeId v) const;
    Color max_color() const;

    // Literal bookkeeping; only populated by encode_program.
    std::optional<NodeId> atom_node(Atom a) const;
    std::optional<NodeId> negation_node(Atom a) const;
    std::optional<Atom> atom_of(NodeId v) const;
    const std::vector<Atom>& atoms() const { return atoms_; }
    void register_atom(Atom a, NodeId positive, NodeId negative);

    /// Color assigned to integer value n, if n occurs in the encoded program.
    const std::map<std::int64_t, Color>& value_colors() const { return value_colors_; }
    void set_value_colors(std::map<std::int64_t, Color> m) { value_colors_ = std::move(m); }

private:
    std::vector<Color> colors_;
    std::vector<std::vector<NodeId>> adjacency_;
    std::vector<Atom> atoms_;
    std::map<Atom, std::pair<NodeId, NodeId>> literal_nodes_;
    std::map<NodeId, Atom> node_atom_;
    std::map<std::int64_t, Color> value_colors_;
};

/// Builds the undirected colored graph whose automorphisms correspond to the
/// syntactic symmetries of `p`. Every atom except the false atom gets a
/// positive node (color 1) joined to its negation node (color 2). Rules
/// contribute a head node and a body node; see graph.cpp for the per-kind
/// layout. Compute statements enter as constraints.
ColoredGraph encode_program(const GroundProgram& p);

std::map<Color, std::size_t> color_census(const ColoredGraph& g);

/// Line-based debug dump: `node <id> <color>` then `edge <u> <v>` (u < v).
void dump_graph(const ColoredGraph& g, std::ostream& out);

}  // namespace aspbreak
