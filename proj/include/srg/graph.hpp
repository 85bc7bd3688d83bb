#pragma once

#include "error.hpp"
#include "vertex_set.hpp"

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace srg {

inline constexpr std::size_t max_graph_order = 10000;

/// Simple undirected graph stored as one adjacency bitset per vertex.
/// Symmetric and irreflexive by construction; immutable once built except
/// through add_edge/remove_edge, which keep both invariants.
class Graph {
public:
    Graph() = default;

    explicit Graph(std::size_t n) : n_(n), rows_(n, VertexSet(n))
    {
        if (n > max_graph_order)
            throw Error(ErrorKind::UnsupportedSize, "graphs are limited to " + std::to_string(max_graph_order) + " vertices");
    }

    Graph(std::size_t n, const std::vector<std::pair<Vertex, Vertex>> & edges) : Graph(n)
    {
        for (auto [u, v] : edges)
            add_edge(u, v);
    }

    std::size_t order() const { return n_; }

    void add_edge(Vertex u, Vertex v)
    {
        check_vertex(u);
        check_vertex(v);
        if (u == v)
            throw Error(ErrorKind::InvalidArgument, "loops are not allowed");
        rows_[u].set(v);
        rows_[v].set(u);
    }

    void remove_edge(Vertex u, Vertex v)
    {
        check_vertex(u);
        check_vertex(v);
        rows_[u].reset(v);
        rows_[v].reset(u);
    }

    bool adjacent(Vertex u, Vertex v) const { return rows_[u].test(v); }
    const VertexSet & neighbours(Vertex v) const { return rows_[v]; }
    std::size_t degree(Vertex v) const { return rows_[v].count(); }

    std::size_t edge_count() const
    {
        std::size_t twice = 0;
        for (const auto & r : rows_)
            twice += r.count();
        return twice / 2;
    }

    std::vector<std::pair<Vertex, Vertex>> edges() const
    {
        std::vector<std::pair<Vertex, Vertex>> out;
        for (Vertex u = 0; u < n_; ++u)
            for (Vertex v = rows_[u].next(u); v < n_; v = rows_[u].next(v))
                out.emplace_back(u, v);
        return out;
    }

    std::optional<std::size_t> regular_degree() const
    {
        if (n_ == 0)
            return 0;
        std::size_t k = degree(0);
        for (Vertex v = 1; v < n_; ++v)
            if (degree(v) != k)
                return std::nullopt;
        return k;
    }

    friend bool operator==(const Graph &, const Graph &) = default;

private:
    void check_vertex(Vertex v) const
    {
        if (v >= n_)
            throw Error(ErrorKind::IndexOutOfRange, "vertex " + std::to_string(v) + " out of range");
    }

    std::size_t n_ = 0;
    std::vector<VertexSet> rows_;
};

inline Graph complement(const Graph & g)
{
    Graph c(g.order());
    for (Vertex u = 0; u < g.order(); ++u)
        for (Vertex v = u + 1; v < g.order(); ++v)
            if (!g.adjacent(u, v))
                c.add_edge(u, v);
    return c;
}

inline Graph complete_graph(std::size_t n)
{
    Graph g(n);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            g.add_edge(u, v);
    return g;
}

inline Graph induced_subgraph(const Graph & g, const std::vector<Vertex> & vertices)
{
    Graph s(vertices.size());
    for (std::size_t i = 0; i < vertices.size(); ++i)
        for (std::size_t j = i + 1; j < vertices.size(); ++j)
            if (g.adjacent(vertices[i], vertices[j]))
                s.add_edge(i, j);
    return s;
}

/// Connectivity of the subgraph induced by `within`. The empty set counts
/// as connected.
inline bool is_connected_within(const Graph & g, const VertexSet & within)
{
    Vertex start = within.first();
    if (start >= within.size())
        return true;
    VertexSet seen(g.order());
    seen.set(start);
    VertexSet frontier = seen;
    while (!frontier.empty()) {
        VertexSet next(g.order());
        frontier.for_each([&](Vertex v) { next |= g.neighbours(v); });
        next &= within;
        next -= seen;
        seen |= next;
        frontier = std::move(next);
    }
    return seen == within;
}

inline bool is_connected(const Graph & g) { return is_connected_within(g, VertexSet::full(g.order())); }

inline bool is_clique(const Graph & g, const VertexSet & s)
{
    bool ok = true;
    s.for_each([&](Vertex v) {
        VertexSet others = s;
        others.reset(v);
        if (!others.is_subset_of(g.neighbours(v)))
            ok = false;
    });
    return ok;
}

inline bool is_coclique(const Graph & g, const VertexSet & s)
{
    bool ok = true;
    s.for_each([&](Vertex v) {
        if (g.neighbours(v).intersects(s))
            ok = false;
    });
    return ok;
}

/// Vertices at distance exactly two from v.
inline VertexSet second_neighborhood(const Graph & g, Vertex v)
{
    if (v >= g.order())
        throw Error(ErrorKind::IndexOutOfRange, "vertex " + std::to_string(v) + " out of range");
    VertexSet reach(g.order());
    g.neighbours(v).for_each([&](Vertex u) { reach |= g.neighbours(u); });
    reach -= g.neighbours(v);
    reach.reset(v);
    return reach;
}

/// Per vertex: is the subgraph induced by its second neighbourhood connected?
/// An empty second neighbourhood is reported as connected.
inline std::vector<bool> check_n2_connected(const Graph & g)
{
    std::vector<bool> flags(g.order());
    for (Vertex v = 0; v < g.order(); ++v)
        flags[v] = is_connected_within(g, second_neighborhood(g, v));
    return flags;
}

namespace detail {

inline bool extend_isomorphism(const Graph & g, const Graph & h, const std::vector<Vertex> & order,
    std::size_t depth, std::vector<Vertex> & map, VertexSet & used)
{
    if (depth == order.size())
        return true;
    Vertex u = order[depth];
    for (Vertex x = 0; x < h.order(); ++x) {
        if (used.test(x) || h.degree(x) != g.degree(u))
            continue;
        bool ok = true;
        for (std::size_t i = 0; i < depth && ok; ++i) {
            Vertex w = order[i];
            ok = g.adjacent(u, w) == h.adjacent(x, map[w]);
        }
        if (!ok)
            continue;
        map[u] = x;
        used.set(x);
        if (extend_isomorphism(g, h, order, depth + 1, map, used))
            return true;
        used.reset(x);
    }
    return false;
}

} // namespace detail

/// Backtracking isomorphism test with degree pruning. Intended for the
/// small fixtures used in tests, not as a general canonical-form engine.
inline std::optional<std::vector<Vertex>> find_isomorphism(const Graph & g, const Graph & h)
{
    if (g.order() != h.order() || g.edge_count() != h.edge_count())
        return std::nullopt;
    std::vector<std::size_t> dg, dh;
    for (Vertex v = 0; v < g.order(); ++v) {
        dg.push_back(g.degree(v));
        dh.push_back(h.degree(v));
    }
    std::sort(dg.begin(), dg.end());
    std::sort(dh.begin(), dh.end());
    if (dg != dh)
        return std::nullopt;

    // order vertices so that each one (after the first in its component) has
    // an already-placed neighbour; this makes the adjacency test prune early
    std::vector<Vertex> order;
    VertexSet placed(g.order());
    while (order.size() < g.order()) {
        Vertex best = g.order();
        std::size_t best_links = 0;
        for (Vertex v = 0; v < g.order(); ++v) {
            if (placed.test(v))
                continue;
            std::size_t links = g.neighbours(v).intersection_count(placed);
            if (best == g.order() || links > best_links
                || (links == best_links && g.degree(v) > g.degree(best))) {
                best = v;
                best_links = links;
            }
        }
        order.push_back(best);
        placed.set(best);
    }

    std::vector<Vertex> map(g.order());
    VertexSet used(h.order());
    if (detail::extend_isomorphism(g, h, order, 0, map, used))
        return map;
    return std::nullopt;
}

inline bool are_isomorphic(const Graph & g, const Graph & h) { return find_isomorphism(g, h).has_value(); }

} // namespace srg
