#pragma once

// Homomorphism search between graphs, classification of homomorphisms as
// isomorphisms or colorings, exhaustive verification that same-cosine
// primitive SRGs admit no other kind, core testing and hull computation.

#include "certs.hpp"
#include "error.hpp"
#include "graph.hpp"
#include "parallel.hpp"
#include "params.hpp"
#include "solvers.hpp"
#include "verify.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace srg {

enum class HomKind { Isomorphism, IsoOntoInducedSubgraph, Coloring, Other };

inline std::string_view to_string(HomKind k)
{
    switch (k) {
    case HomKind::Isomorphism: return "isomorphism";
    case HomKind::IsoOntoInducedSubgraph: return "iso-onto-induced-subgraph";
    case HomKind::Coloring: return "coloring";
    case HomKind::Other: return "other";
    }
    return "";
}

struct Hom {
    std::vector<Vertex> map;
    HomKind kind = HomKind::Other;

    friend bool operator==(const Hom &, const Hom &) = default;
};

/// Coloring when the image is a clique; otherwise an isomorphism onto an
/// induced subgraph when injective and non-adjacency preserving (a full
/// isomorphism when the orders agree); otherwise Other.
inline HomKind classify_hom(const Graph & g, const Graph & h, std::span<const Vertex> phi)
{
    require_total_map(g, h, phi);
    if (auto edge = non_homomorphic_edge(g, h, phi))
        throw Error(ErrorKind::NotHomomorphism, "edge (" + std::to_string(edge->first) + "," + std::to_string(edge->second)
            + ") maps to a non-edge");
    VertexSet image(h.order());
    bool injective = true;
    for (Vertex x : phi) {
        if (image.test(x))
            injective = false;
        image.set(x);
    }
    if (is_clique(h, image))
        return HomKind::Coloring;
    if (injective) {
        bool induced = true;
        for (Vertex u = 0; u < g.order() && induced; ++u)
            for (Vertex v = u + 1; v < g.order(); ++v)
                if (!g.adjacent(u, v) && h.adjacent(phi[u], phi[v])) {
                    induced = false;
                    break;
                }
        if (induced)
            return g.order() == h.order() ? HomKind::Isomorphism : HomKind::IsoOntoInducedSubgraph;
    }
    return HomKind::Other;
}

enum class SearchMode { First, Enumerate, Count };

struct HomSearchOptions {
    SearchMode mode = SearchMode::Enumerate;
    std::uint64_t budget = unlimited_budget;
    /// Prune with the structure theorem for same-parameter primitive SRGs:
    /// explore only clique-image maps and induced embeddings. Never used
    /// when verifying the theorem itself.
    bool fast = false;
    /// Force phi(u) = phi(v) for each listed pair.
    std::vector<std::pair<Vertex, Vertex>> identify;
    /// Restrict to maps whose image is a clique.
    bool clique_image_only = false;
    /// Restrict to injective maps that preserve non-adjacency.
    bool induced_embedding_only = false;
};

struct HomSearchResult {
    std::vector<Hom> homs;      ///< filled in First and Enumerate modes, lexicographically sorted
    std::uint64_t count = 0;
    bool complete = true;       ///< false when the node budget ran out
    std::uint64_t nodes = 0;
};

namespace detail {

/// Backtracking with forward checking. G's vertices are taken in a static
/// order (max degree first, then most already-placed neighbours); each
/// assignment v -> x intersects the domains of v's unplaced neighbours
/// with N_H(x).
class HomSearcher {
public:
    HomSearcher(const Graph & g, const Graph & h, const HomSearchOptions & options) : g_(g), h_(h), options_(options)
    {
        std::size_t n = g.order();
        order_.reserve(n);
        VertexSet placed(n);
        for (std::size_t step = 0; step < n; ++step) {
            Vertex best = n;
            std::size_t best_links = 0, best_degree = 0;
            for (Vertex v = 0; v < n; ++v) {
                if (placed.test(v))
                    continue;
                std::size_t links = g.neighbours(v).intersection_count(placed);
                std::size_t degree = g.degree(v);
                if (best == n || links > best_links || (links == best_links && degree > best_degree)) {
                    best = v;
                    best_links = links;
                    best_degree = degree;
                }
            }
            order_.push_back(best);
            placed.set(best);
        }
        partner_.assign(n, {});
        for (auto [u, v] : options.identify) {
            if (u >= n || v >= n)
                throw Error(ErrorKind::IndexOutOfRange, "identified vertex out of range");
            partner_[u].push_back(v);
            partner_[v].push_back(u);
        }
        map_.assign(n, 0);
    }

    /// visit(map) returns false to stop the search.
    template <typename Visit>
    bool run(Visit && visit)
    {
        std::vector<VertexSet> domains(g_.order(), VertexSet::full(h_.order()));
        for (auto [u, v] : options_.identify)
            if (g_.adjacent(u, v))
                return true; // no homomorphism identifies adjacent vertices
        if (h_.order() == 0)
            return g_.order() == 0 ? visit(map_) : true;
        return search(0, domains, visit);
    }

    std::uint64_t nodes = 0;
    bool aborted = false;

private:
    template <typename Visit>
    bool search(std::size_t depth, const std::vector<VertexSet> & domains, Visit & visit)
    {
        if (depth == order_.size())
            return visit(std::as_const(map_));
        Vertex v = order_[depth];
        const VertexSet & domain = domains[v];
        for (Vertex x = domain.first(); x < h_.order(); x = domain.next(x)) {
            if (++nodes > options_.budget) {
                aborted = true;
                return false;
            }
            map_[v] = x;
            std::vector<VertexSet> next = domains;
            bool feasible = true;
            for (std::size_t later = depth + 1; later < order_.size() && feasible; ++later) {
                Vertex w = order_[later];
                VertexSet & d = next[w];
                if (g_.adjacent(v, w))
                    d &= h_.neighbours(x);
                if (options_.clique_image_only) {
                    VertexSet allowed = h_.neighbours(x);
                    allowed.set(x);
                    d &= allowed;
                }
                if (options_.induced_embedding_only) {
                    d.reset(x);
                    if (!g_.adjacent(v, w))
                        d -= h_.neighbours(x);
                }
                feasible = !d.empty();
            }
            for (Vertex w : partner_[v]) {
                if (!feasible)
                    break;
                VertexSet only(h_.order());
                only.set(x);
                next[w] &= only;
                feasible = !next[w].empty();
            }
            if (!feasible)
                continue;
            if (!search(depth + 1, next, visit))
                return false;
        }
        return true;
    }

    const Graph & g_;
    const Graph & h_;
    const HomSearchOptions & options_;
    std::vector<Vertex> order_;
    std::vector<std::vector<Vertex>> partner_;
    std::vector<Vertex> map_;
};

inline bool same_parameter_primitive_srgs(const Graph & g, const Graph & h)
{
    auto rg = verify_srg(g);
    auto rh = verify_srg(h);
    return rg.is_srg && rh.is_srg && rg.primitive && rh.primitive && *rg.params == *rh.params;
}

} // namespace detail

/// Streams every homomorphism G -> H admitted by the options to visit(map);
/// visit returns false to stop. Returns (nodes, complete).
template <typename Visit>
std::pair<std::uint64_t, bool> for_each_hom(const Graph & g, const Graph & h, const HomSearchOptions & options, Visit && visit)
{
    detail::HomSearcher searcher(g, h, options);
    searcher.run(visit);
    return {searcher.nodes, !searcher.aborted};
}

/// Homomorphism search. In fast mode between same-parameter primitive SRGs
/// the search is split into clique-image maps and induced embeddings,
/// which by the structure theorem cover every homomorphism.
inline HomSearchResult find_homs(const Graph & g, const Graph & h, const HomSearchOptions & options = {})
{
    HomSearchResult result;
    std::vector<HomSearchOptions> passes;
    if (options.fast && detail::same_parameter_primitive_srgs(g, h)) {
        HomSearchOptions cliques = options;
        cliques.fast = false;
        cliques.clique_image_only = true;
        HomSearchOptions embeddings = options;
        embeddings.fast = false;
        embeddings.induced_embedding_only = true;
        passes = {cliques, embeddings};
    }
    else {
        passes = {options};
    }

    std::uint64_t budget_left = options.budget;
    for (auto pass : passes) {
        pass.budget = budget_left;
        auto [nodes, complete] = for_each_hom(g, h, pass, [&](const std::vector<Vertex> & map) {
            ++result.count;
            if (options.mode != SearchMode::Count)
                result.homs.push_back(Hom{map, classify_hom(g, h, map)});
            return options.mode != SearchMode::First;
        });
        result.nodes += nodes;
        budget_left = budget_left > nodes ? budget_left - nodes : 0;
        if (!complete) {
            result.complete = false;
            break;
        }
        if (options.mode == SearchMode::First && result.count > 0)
            break;
    }
    std::sort(result.homs.begin(), result.homs.end(), [](const Hom & a, const Hom & b) { return a.map < b.map; });
    result.homs.erase(std::unique(result.homs.begin(), result.homs.end()), result.homs.end());
    if (options.mode == SearchMode::First && result.homs.size() > 1)
        result.homs.resize(1);
    if (options.mode != SearchMode::Count)
        result.count = result.homs.size();
    return result;
}

enum class CosineRelation { SourceGreater, Equal, SourceLess };

struct MainTheoremReport {
    CosineRelation relation = CosineRelation::Equal;
    std::array<std::uint64_t, 4> kind_counts{}; ///< indexed by HomKind
    std::uint64_t homs = 0;
    std::uint64_t colorings_onto_delsarte_cliques = 0;
    std::uint64_t product_lemma_failures = 0;
    std::uint64_t disallowed = 0; ///< homs the theorem rules out for this relation
    std::optional<Hom> first_counterexample;
    std::optional<EntryFailure> first_product_failure;
    bool complete = true;
    std::uint64_t nodes = 0;

    std::uint64_t count(HomKind k) const { return kind_counts[static_cast<std::size_t>(k)]; }
    /// Zero counterexamples and every product check passed; meaningful only when complete.
    bool holds() const { return disallowed == 0 && product_lemma_failures == 0; }
};

/// Enumerates every homomorphism G -> H with no pruning derived from the
/// theorem, classifies each, and checks (A - tau I) X = 0 for each. With
/// beta > beta' only colorings are allowed; with beta = beta' colorings
/// and induced embeddings (isomorphisms when the orders agree).
inline MainTheoremReport verify_main_theorem(const Graph & g, const Graph & h, std::uint64_t budget = unlimited_budget)
{
    SrgParams pg = require_primitive_srg(g);
    SrgParams ph = require_primitive_srg(h);
    Cosines cg = cosines(pg);
    Cosines ch = cosines(ph);
    if (cg.alpha != ch.alpha)
        throw Error(ErrorKind::CosineMismatch, "adjacency cosines differ");
    MainTheoremReport r;
    r.relation = cg.beta > ch.beta ? CosineRelation::SourceGreater
        : cg.beta == ch.beta       ? CosineRelation::Equal
                                   : CosineRelation::SourceLess;
    QuadNum target_bound = hoffman_bound(ph);
    StructuredProductCheck product(g, h);

    HomSearchOptions options;
    options.mode = SearchMode::Count;
    options.budget = budget;
    auto [nodes, complete] = for_each_hom(g, h, options, [&](const std::vector<Vertex> & map) {
        ++r.homs;
        HomKind kind = classify_hom(g, h, map);
        ++r.kind_counts[static_cast<std::size_t>(kind)];
        bool allowed = kind == HomKind::Coloring
            || (r.relation == CosineRelation::Equal
                && (kind == HomKind::Isomorphism || kind == HomKind::IsoOntoInducedSubgraph))
            || r.relation == CosineRelation::SourceLess;
        if (!allowed) {
            ++r.disallowed;
            if (!r.first_counterexample)
                r.first_counterexample = Hom{map, kind};
        }
        if (kind == HomKind::Coloring) {
            VertexSet image(h.order());
            for (Vertex x : map)
                image.set(x);
            if (QuadNum(static_cast<long>(image.count())) == target_bound)
                ++r.colorings_onto_delsarte_cliques;
        }
        if (auto failure = product.check(map)) {
            ++r.product_lemma_failures;
            if (!r.first_product_failure)
                r.first_product_failure = failure;
        }
        return true;
    });
    r.nodes = nodes;
    r.complete = complete;
    return r;
}

/// Some endomorphism identifying u and v, if one exists.
inline std::optional<std::vector<Vertex>> endomorphism_identifying(const Graph & g, Vertex u, Vertex v,
    std::uint64_t budget, bool & complete)
{
    HomSearchOptions options;
    options.mode = SearchMode::First;
    options.budget = budget;
    options.identify = {{u, v}};
    std::optional<std::vector<Vertex>> found;
    auto [nodes, done] = for_each_hom(g, g, options, [&](const std::vector<Vertex> & map) {
        found = map;
        return false;
    });
    complete = done || found.has_value();
    return found;
}

struct CoreReport {
    std::optional<bool> core;                        ///< nullopt when undecided within budget
    std::optional<std::vector<Vertex>> witness;      ///< a proper endomorphism when not a core
    std::optional<bool> fast_path;                   ///< omega vs Hoffman bound vs chi (SRGs only)
    std::optional<bool> slow_path;                   ///< exhaustive identification search
    bool paths_agree() const { return !fast_path || !slow_path || *fast_path == *slow_path; }
};

enum class CorePaths { Fast, Slow, Both };

/// Core test. The fast path (primitive SRGs only) uses that G is not a
/// core iff omega = 1 - k/tau = chi, building the witness endomorphism
/// from a Hoffman coloring and a Delsarte clique. The slow path searches
/// for any endomorphism identifying a non-adjacent pair.
inline CoreReport is_core(const Graph & g, std::uint64_t budget = unlimited_budget, CorePaths paths = CorePaths::Both)
{
    CoreReport r;
    auto srg_report = verify_srg(g);
    bool srg = srg_report.is_srg && srg_report.primitive;

    if (srg && paths != CorePaths::Slow) {
        QuadNum bound = hoffman_bound(*srg_report.params);
        CliqueResult clique = max_clique(g, budget);
        if (clique.exact) {
            if (!clique.is_delsarte) {
                r.fast_path = true;
            }
            else {
                std::uint64_t left = budget;
                bool exhausted = false;
                auto colours = static_cast<std::size_t>(*integer_value(bound));
                auto colouring = find_colouring(g, colours, left, exhausted, clique.witness);
                if (colouring) {
                    r.fast_path = false;
                    std::vector<Vertex> endo(g.order());
                    for (std::size_t c = 0; c < colouring->size(); ++c)
                        for (Vertex v : (*colouring)[c])
                            endo[v] = clique.witness[c];
                    r.witness = std::move(endo);
                }
                else if (!exhausted) {
                    r.fast_path = true;
                }
            }
        }
    }

    if (paths != CorePaths::Fast || !srg) {
        bool decided = true;
        std::optional<std::vector<Vertex>> found;
        for (Vertex u = 0; u < g.order() && !found; ++u)
            for (Vertex v = u + 1; v < g.order() && !found; ++v) {
                if (g.adjacent(u, v))
                    continue;
                bool complete = true;
                found = endomorphism_identifying(g, u, v, budget, complete);
                if (!complete)
                    decided = false;
            }
        if (found) {
            r.slow_path = false;
            if (!r.witness)
                r.witness = found;
        }
        else if (decided) {
            r.slow_path = true;
        }
    }

    r.core = r.fast_path ? r.fast_path : r.slow_path;
    return r;
}

struct HullGraph {
    Graph base;
    Graph hull;
};

enum class HullStrategy { BruteForce, PseudocoreFast };

struct HullResult {
    HullGraph graph;
    bool complete = true; ///< false when some pair could not be decided within budget
};

namespace detail {

/// g with v merged into u.
inline Graph identify_vertices(const Graph & g, Vertex u, Vertex v)
{
    std::vector<Vertex> keep;
    std::vector<Vertex> index(g.order());
    for (Vertex w = 0; w < g.order(); ++w) {
        if (w == v)
            continue;
        index[w] = keep.size();
        keep.push_back(w);
    }
    index[v] = index[u];
    Graph q(keep.size());
    for (auto [a, b] : g.edges())
        if (index[a] != index[b])
            q.add_edge(index[a], index[b]);
    return q;
}

} // namespace detail

/// Hull: u ~ v unless some endomorphism identifies u and v. Brute force
/// runs one constrained search per non-adjacent pair (budget per pair).
/// The pseudocore strategy, for primitive SRGs, uses that every proper
/// endomorphism is a coloring onto a Delsarte clique: a pair is identified
/// iff some Hoffman coloring puts it in one class, and only when a
/// Delsarte clique exists.
inline HullResult hull(const Graph & g, HullStrategy strategy = HullStrategy::BruteForce,
    std::uint64_t budget = unlimited_budget, std::size_t threads = 1)
{
    HullResult r;
    r.graph.base = g;
    std::size_t n = g.order();
    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (!g.adjacent(u, v))
                pairs.emplace_back(u, v);
    // 1 = identified, 0 = never identified, 2 = undecided
    std::vector<int> identified(pairs.size(), 0);

    if (strategy == HullStrategy::BruteForce) {
        parallel_for(pairs.size(), threads, [&](std::size_t i) {
            bool complete = true;
            auto endo = endomorphism_identifying(g, pairs[i].first, pairs[i].second, budget, complete);
            identified[i] = endo ? 1 : (complete ? 0 : 2);
        });
    }
    else {
        SrgParams p = require_primitive_srg(g);
        QuadNum bound = hoffman_bound(p);
        bool may_have_proper_endos = false;
        std::size_t colours = 0;
        if (bound.is_integer()) {
            colours = static_cast<std::size_t>(*integer_value(bound));
            CliqueResult clique = max_clique(g, budget);
            if (!clique.exact)
                std::fill(identified.begin(), identified.end(), 2);
            may_have_proper_endos = clique.exact && clique.is_delsarte;
        }
        if (may_have_proper_endos) {
            parallel_for(pairs.size(), threads, [&](std::size_t i) {
                Graph quotient = detail::identify_vertices(g, pairs[i].first, pairs[i].second);
                std::uint64_t left = budget;
                bool exhausted = false;
                auto colouring = find_colouring(quotient, colours, left, exhausted);
                identified[i] = colouring ? 1 : (exhausted ? 2 : 0);
            });
        }
    }

    r.graph.hull = g;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        if (identified[i] == 2)
            r.complete = false;
        if (identified[i] == 0)
            r.graph.hull.add_edge(pairs[i].first, pairs[i].second);
    }
    return r;
}

} // namespace srg
