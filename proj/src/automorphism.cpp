#include "aspbreak/automorphism.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <optional>

namespace aspbreak {

NodePermutation NodePermutation::identity(std::size_t n)
{
    NodePermutation p;
    p.image.resize(n);
    std::iota(p.image.begin(), p.image.end(), NodeId{0});
    return p;
}

bool NodePermutation::is_identity() const
{
    for (std::size_t v = 0; v < image.size(); ++v) {
        if (image[v] != v) return false;
    }
    return true;
}

NodePermutation NodePermutation::then(const NodePermutation& g) const
{
    NodePermutation out;
    out.image.resize(image.size());
    for (std::size_t v = 0; v < image.size(); ++v) out.image[v] = g.image[image[v]];
    return out;
}

NodePermutation NodePermutation::inverse() const
{
    NodePermutation out;
    out.image.resize(image.size());
    for (std::size_t v = 0; v < image.size(); ++v) out.image[image[v]] = static_cast<NodeId>(v);
    return out;
}

bool is_automorphism(const ColoredGraph& g, const NodePermutation& p)
{
    const std::size_t n = g.node_count();
    if (p.size() != n) return false;
    std::vector<bool> hit(n, false);
    for (NodeId v = 0; v < n; ++v) {
        NodeId w = p(v);
        if (w >= n || hit[w]) return false;
        hit[w] = true;
        if (g.color(v) != g.color(w)) return false;
    }
    // A bijection that maps every edge onto an edge maps the edge set onto
    // itself (it is finite), so the "only if" direction follows.
    for (NodeId u = 0; u < n; ++u) {
        if (g.neighbors(u).size() != g.neighbors(p(u)).size()) return false;
        for (NodeId v : g.neighbors(u)) {
            if (!g.has_edge(p(u), p(v))) return false;
        }
    }
    return true;
}

// ---------------------------------------------------------------------------
// OrderedPartition

OrderedPartition::OrderedPartition(std::size_t node_count,
                                   const std::vector<std::vector<NodeId>>& cells)
    : position_(node_count), cell_of_(node_count), cell_end_(node_count + 1, 0)
{
    std::vector<bool> seen(node_count, false);
    for (const auto& cell : cells) {
        if (cell.empty()) throw std::invalid_argument("partition cell is empty");
        const std::size_t start = elements_.size();
        for (NodeId v : cell) {
            if (v >= node_count || seen[v]) {
                throw std::invalid_argument("partition cells overlap or name unknown nodes");
            }
            seen[v] = true;
            position_[v] = elements_.size();
            cell_of_[v] = start;
            elements_.push_back(v);
        }
        cell_end_[start] = elements_.size();
    }
    if (elements_.size() != node_count) throw std::invalid_argument("partition does not cover all nodes");
}

OrderedPartition OrderedPartition::by_color(const ColoredGraph& g)
{
    std::map<Color, std::vector<NodeId>> classes;
    for (NodeId v = 0; v < g.node_count(); ++v) classes[g.color(v)].push_back(v);
    std::vector<std::vector<NodeId>> cells;
    for (auto& [c, members] : classes) cells.push_back(std::move(members));
    return OrderedPartition(g.node_count(), cells);
}

std::vector<std::vector<NodeId>> OrderedPartition::cells() const
{
    std::vector<std::vector<NodeId>> out;
    for (std::size_t s = 0; s < elements_.size(); s = cell_end_[s]) {
        out.emplace_back(elements_.begin() + s, elements_.begin() + cell_end_[s]);
    }
    return out;
}

std::size_t OrderedPartition::cell_count() const
{
    std::size_t n = 0;
    for (std::size_t s = 0; s < elements_.size(); s = cell_end_[s]) ++n;
    return n;
}

std::size_t OrderedPartition::first_nonsingleton() const
{
    for (std::size_t s = 0; s < elements_.size(); s = cell_end_[s]) {
        if (cell_end_[s] - s > 1) return s;
    }
    return elements_.size();
}

bool OrderedPartition::same_shape(const OrderedPartition& other) const
{
    if (elements_.size() != other.elements_.size()) return false;
    for (std::size_t s = 0; s < elements_.size(); s = cell_end_[s]) {
        if (other.cell_of_[other.elements_[s]] != s || other.cell_end_[s] != cell_end_[s]) return false;
    }
    return true;
}

void OrderedPartition::split(std::size_t start, std::size_t at)
{
    const std::size_t end = cell_end_[start];
    cell_end_[start] = at;
    cell_end_[at] = end;
    for (std::size_t i = at; i < end; ++i) cell_of_[elements_[i]] = at;
}

std::size_t OrderedPartition::individualize(NodeId v)
{
    const std::size_t start = cell_of_[v];
    if (cell_end_[start] - start == 1) return start;
    const std::size_t pos = position_[v];
    const NodeId first = elements_[start];
    std::swap(elements_[start], elements_[pos]);
    position_[v] = start;
    position_[first] = pos;
    split(start, start + 1);
    return start;
}

// ---------------------------------------------------------------------------
// Refinement

class Refiner {
public:
    explicit Refiner(const ColoredGraph& g) : g_(g), count_(g.node_count(), 0) {}

    /// Refines p to equitability, starting from the given splitter cells.
    void refine(OrderedPartition& p, const std::vector<std::size_t>& splitters)
    {
        const std::size_t n = p.node_count();
        std::vector<bool> queued(n, false);
        std::deque<std::size_t> queue;
        for (std::size_t s : splitters) {
            if (!queued[s]) {
                queued[s] = true;
                queue.push_back(s);
            }
        }
        std::vector<NodeId> touched;
        std::vector<std::size_t> touched_cells;
        while (!queue.empty()) {
            const std::size_t s = queue.front();
            queue.pop_front();
            queued[s] = false;
            const std::size_t e = p.cell_end_[s];

            touched.clear();
            for (std::size_t i = s; i < e; ++i) {
                for (NodeId u : g_.neighbors(p.elements_[i])) {
                    if (count_[u]++ == 0) touched.push_back(u);
                }
            }
            touched_cells.clear();
            for (NodeId u : touched) touched_cells.push_back(p.cell_of_[u]);
            std::sort(touched_cells.begin(), touched_cells.end());
            touched_cells.erase(std::unique(touched_cells.begin(), touched_cells.end()),
                                touched_cells.end());

            for (std::size_t x : touched_cells) {
                const std::size_t xe = p.cell_end_[x];
                if (xe - x == 1) continue;
                auto first = p.elements_.begin() + static_cast<std::ptrdiff_t>(x);
                auto last = p.elements_.begin() + static_cast<std::ptrdiff_t>(xe);
                std::stable_sort(first, last,
                                 [this](NodeId a, NodeId b) { return count_[a] < count_[b]; });
                for (std::size_t i = x; i < xe; ++i) p.position_[p.elements_[i]] = i;

                std::size_t piece = x;
                bool split_any = false;
                for (std::size_t i = x + 1; i < xe; ++i) {
                    if (count_[p.elements_[i]] != count_[p.elements_[i - 1]]) {
                        p.split(piece, i);
                        piece = i;
                        split_any = true;
                    }
                }
                if (!split_any) continue;
                for (std::size_t q = x; q < xe; q = p.cell_end_[q]) {
                    if (!queued[q]) {
                        queued[q] = true;
                        queue.push_back(q);
                    }
                }
            }
            for (NodeId u : touched) count_[u] = 0;
        }
    }

    void refine_all(OrderedPartition& p)
    {
        std::vector<std::size_t> starts;
        for (std::size_t s = 0; s < p.node_count(); s = p.cell_end_[s]) starts.push_back(s);
        refine(p, starts);
    }

private:
    const ColoredGraph& g_;
    std::vector<std::size_t> count_;
};

OrderedPartition color_refine(const ColoredGraph& g, OrderedPartition initial)
{
    Refiner(g).refine_all(initial);
    return initial;
}

// ---------------------------------------------------------------------------
// Individualization-refinement search

namespace {

class DisjointSets {
public:
    explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

    std::size_t find(std::size_t x)
    {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    void unite(std::size_t a, std::size_t b)
    {
        a = find(a);
        b = find(b);
        if (a != b) parent_[std::max(a, b)] = std::min(a, b);
    }

private:
    std::vector<std::size_t> parent_;
};

struct Level {
    OrderedPartition partition;  // refined, before individualizing `chosen`
    std::size_t target = 0;      // start of the target cell
    NodeId chosen = 0;
};

class Search {
public:
    Search(const ColoredGraph& g, const SearchOptions& options)
        : g_(g), options_(options), refiner_(g), orbits_(g.node_count())
    {}

    GeneratorSearch run()
    {
        OrderedPartition p = OrderedPartition::by_color(g_);
        refiner_.refine_all(p);
        ++result_.tree_nodes;
        while (!p.is_discrete()) {
            Level level{p, p.first_nonsingleton(), 0};
            level.chosen = smallest_in_cell(p, level.target);
            path_.push_back(level);
            p = child(p, level.chosen);
        }
        first_leaf_ = p.elements();

        for (std::size_t k = path_.size(); k-- > 0;) {
            const Level& level = path_[k];
            const std::size_t end = level.partition.cell_end(level.target);
            std::vector<NodeId> candidates(level.partition.elements().begin() + level.target,
                                           level.partition.elements().begin() + end);
            std::sort(candidates.begin(), candidates.end());
            std::vector<NodeId> failed;
            for (NodeId w : candidates) {
                if (orbits_.find(w) == orbits_.find(level.chosen)) continue;
                bool known_bad = std::any_of(failed.begin(), failed.end(), [&](NodeId f) {
                    return orbits_.find(f) == orbits_.find(w);
                });
                if (known_bad) continue;
                auto found = probe(child(level.partition, w), k + 1);
                if (found) {
                    for (NodeId v = 0; v < found->size(); ++v) orbits_.unite(v, (*found)(v));
                    result_.generators.push_back(std::move(*found));
                } else {
                    failed.push_back(w);
                }
                if (out_of_budget()) {
                    result_.complete = false;
                    return std::move(result_);
                }
            }
        }
        return std::move(result_);
    }

private:
    static NodeId smallest_in_cell(const OrderedPartition& p, std::size_t start)
    {
        const auto& el = p.elements();
        return *std::min_element(el.begin() + static_cast<std::ptrdiff_t>(start),
                                 el.begin() + static_cast<std::ptrdiff_t>(p.cell_end(start)));
    }

    OrderedPartition child(const OrderedPartition& parent, NodeId v)
    {
        OrderedPartition p = parent;
        std::size_t cell = p.individualize(v);
        refiner_.refine(p, {cell});
        ++result_.tree_nodes;
        return p;
    }

    bool out_of_budget() const { return result_.tree_nodes > options_.node_budget; }

    /// Depth-first search below a node at `depth` for a leaf equivalent to the
    /// first leaf. Subtrees whose partition shape differs from the first path
    /// at the same depth cannot contain one.
    std::optional<NodePermutation> probe(const OrderedPartition& p, std::size_t depth)
    {
        if (out_of_budget()) return std::nullopt;
        if (depth == path_.size()) {
            if (!p.is_discrete()) return std::nullopt;
            NodePermutation gamma;
            gamma.image.resize(p.node_count());
            for (std::size_t i = 0; i < first_leaf_.size(); ++i) gamma.image[first_leaf_[i]] = p.elements()[i];
            if (is_automorphism(g_, gamma)) return gamma;
            return std::nullopt;
        }
        if (!p.same_shape(path_[depth].partition)) return std::nullopt;
        const std::size_t target = path_[depth].target;
        std::vector<NodeId> cell(p.elements().begin() + static_cast<std::ptrdiff_t>(target),
                                 p.elements().begin() + static_cast<std::ptrdiff_t>(p.cell_end(target)));
        std::sort(cell.begin(), cell.end());
        for (NodeId u : cell) {
            auto found = probe(child(p, u), depth + 1);
            if (found || out_of_budget()) return found;
        }
        return std::nullopt;
    }

    const ColoredGraph& g_;
    SearchOptions options_;
    Refiner refiner_;
    DisjointSets orbits_;
    std::vector<Level> path_;
    std::vector<NodeId> first_leaf_;
    GeneratorSearch result_;
};

}  // namespace

GeneratorSearch find_generators(const ColoredGraph& g, const SearchOptions& options)
{
    if (g.node_count() == 0) return {};
    return Search(g, options).run();
}

// ---------------------------------------------------------------------------
// Brute force

namespace {

class Enumerator {
public:
    explicit Enumerator(const ColoredGraph& g) : g_(g), image_(g.node_count()), used_(g.node_count(), false)
    {}

    std::vector<NodePermutation> run()
    {
        extend(0);
        return std::move(found_);
    }

private:
    void extend(NodeId v)
    {
        const std::size_t n = g_.node_count();
        if (v == n) {
            found_.push_back(NodePermutation{image_});
            return;
        }
        for (NodeId w = 0; w < n; ++w) {
            if (used_[w] || g_.color(w) != g_.color(v)) continue;
            bool ok = true;
            for (NodeId u = 0; u < v && ok; ++u) {
                ok = g_.has_edge(v, u) == g_.has_edge(w, image_[u]);
            }
            if (!ok) continue;
            used_[w] = true;
            image_[v] = w;
            extend(v + 1);
            used_[w] = false;
        }
    }

    const ColoredGraph& g_;
    std::vector<NodeId> image_;
    std::vector<bool> used_;
    std::vector<NodePermutation> found_;
};

}  // namespace

std::vector<NodePermutation> brute_force_automorphisms(const ColoredGraph& g, double budget)
{
    double candidates = 1.0;
    for (const auto& [color, size] : color_census(g)) {
        for (std::size_t k = 2; k <= size; ++k) candidates *= static_cast<double>(k);
    }
    if (candidates > budget) {
        throw BudgetExceeded("brute-force automorphism enumeration would visit " +
                             std::to_string(candidates) + " color-respecting bijections");
    }
    return Enumerator(g).run();
}

std::vector<NodeId> orbit(const std::vector<NodePermutation>& gens, NodeId seed)
{
    std::vector<NodeId> out{seed};
    for (std::size_t i = 0; i < out.size(); ++i) {
        for (const auto& gen : gens) {
            NodeId w = gen(out[i]);
            if (std::find(out.begin(), out.end(), w) == out.end()) out.push_back(w);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

ColoredGraph fix_nodes(const ColoredGraph& g, const std::vector<NodeId>& fixed)
{
    ColoredGraph out = g;
    Color next = g.max_color() + 1;
    for (NodeId v : fixed) out.set_color(v, next++);
    return out;
}

}  // namespace aspbreak
