#include "aspbreak/graph.hpp"

#include <algorithm>
#include <ostream>
#include <set>

namespace aspbreak {

ColoredGraph::ColoredGraph(std::vector<Color> node_colors)
    : colors_(std::move(node_colors)), adjacency_(colors_.size())
{}

NodeId ColoredGraph::add_node(Color c)
{
    colors_.push_back(c);
    adjacency_.emplace_back();
    return static_cast<NodeId>(colors_.size() - 1);
}

void ColoredGraph::add_edge(NodeId u, NodeId v)
{
    if (u == v) return;
    adjacency_[u].push_back(v);
    adjacency_[v].push_back(u);
}

void ColoredGraph::finalize()
{
    for (auto& adj : adjacency_) {
        std::sort(adj.begin(), adj.end());
        adj.erase(std::unique(adj.begin(), adj.end()), adj.end());
    }
}

std::size_t ColoredGraph::edge_count() const
{
    std::size_t twice = 0;
    for (const auto& adj : adjacency_) twice += adj.size();
    return twice / 2;
}

bool ColoredGraph::has_edge(NodeId u, NodeId v) const
{
    const auto& adj = adjacency_[u];
    return std::binary_search(adj.begin(), adj.end(), v);
}

Color ColoredGraph::max_color() const
{
    return colors_.empty() ? 0 : *std::max_element(colors_.begin(), colors_.end());
}

std::optional<NodeId> ColoredGraph::atom_node(Atom a) const
{
    auto it = literal_nodes_.find(a);
    if (it == literal_nodes_.end()) return std::nullopt;
    return it->second.first;
}

std::optional<NodeId> ColoredGraph::negation_node(Atom a) const
{
    auto it = literal_nodes_.find(a);
    if (it == literal_nodes_.end()) return std::nullopt;
    return it->second.second;
}

std::optional<Atom> ColoredGraph::atom_of(NodeId v) const
{
    auto it = node_atom_.find(v);
    if (it == node_atom_.end()) return std::nullopt;
    return it->second;
}

void ColoredGraph::register_atom(Atom a, NodeId positive, NodeId negative)
{
    atoms_.push_back(a);
    literal_nodes_[a] = {positive, negative};
    node_atom_[positive] = a;
}

namespace {

class Encoder {
public:
    explicit Encoder(const GroundProgram& p) : program_(p), falsum_(false_atom(p)) {}

    ColoredGraph run()
    {
        const std::vector<Rule> rules = normalized_rules(program_);
        assign_value_colors(rules);
        for (Atom a = 1; a <= program_.max_atom; ++a) {
            if (falsum_ && a == *falsum_) continue;
            NodeId pos = g_.add_node(colors::atom);
            NodeId neg = g_.add_node(colors::negation);
            g_.add_edge(pos, neg);
            g_.register_atom(a, pos, neg);
        }
        for (const Rule& r : rules) encode(r);
        g_.finalize();
        return std::move(g_);
    }

private:
    void assign_value_colors(const std::vector<Rule>& rules)
    {
        std::set<std::int64_t> values;
        for (const Rule& r : rules) {
            if (r.has_bound()) values.insert(r.bound);
            values.insert(r.weights.begin(), r.weights.end());
        }
        std::map<std::int64_t, Color> m;
        Color next = colors::first_value_color;
        for (std::int64_t v : values) m[v] = next++;
        g_.set_value_colors(std::move(m));
    }

    Color value_color(std::int64_t v) const { return g_.value_colors().at(v); }
    NodeId pos_node(Atom a) const { return *g_.atom_node(a); }
    NodeId neg_node(Atom a) const { return *g_.negation_node(a); }

    void encode(const Rule& r)
    {
        if (r.kind == RuleKind::Minimize) {
            NodeId min = g_.add_node(colors::minimize);
            weighted_body(min, r);
            return;
        }
        NodeId head = g_.add_node(r.kind == RuleKind::Choice ? colors::choice_head : colors::head);
        for (Atom h : r.heads) g_.add_edge(head, pos_node(h));
        NodeId body = g_.add_node(r.has_bound() ? value_color(r.bound) : colors::body);
        g_.add_edge(head, body);
        if (r.kind == RuleKind::Weight) {
            weighted_body(body, r);
        } else {
            for (Atom a : r.pos) g_.add_edge(body, pos_node(a));
            for (Atom b : r.neg) g_.add_edge(body, neg_node(b));
        }
    }

    // One term node per literal occurrence, colored by its weight.
    void weighted_body(NodeId body, const Rule& r)
    {
        for (std::size_t i = 0; i < r.neg.size(); ++i) {
            NodeId term = g_.add_node(value_color(r.neg_weight(i)));
            g_.add_edge(term, neg_node(r.neg[i]));
            g_.add_edge(term, body);
        }
        for (std::size_t i = 0; i < r.pos.size(); ++i) {
            NodeId term = g_.add_node(value_color(r.pos_weight(i)));
            g_.add_edge(term, pos_node(r.pos[i]));
            g_.add_edge(term, body);
        }
    }

    const GroundProgram& program_;
    std::optional<Atom> falsum_;
    ColoredGraph g_;
};

}  // namespace

ColoredGraph encode_program(const GroundProgram& p) { return Encoder(p).run(); }

std::map<Color, std::size_t> color_census(const ColoredGraph& g)
{
    std::map<Color, std::size_t> out;
    for (Color c : g.colors()) ++out[c];
    return out;
}

void dump_graph(const ColoredGraph& g, std::ostream& out)
{
    for (NodeId v = 0; v < g.node_count(); ++v) out << "node " << v << ' ' << g.color(v) << '\n';
    for (NodeId u = 0; u < g.node_count(); ++u) {
        for (NodeId v : g.neighbors(u)) {
            if (u < v) out << "edge " << u << ' ' << v << '\n';
        }
    }
}

}  // namespace aspbreak
