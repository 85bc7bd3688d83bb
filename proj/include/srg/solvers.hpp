#pragma once

// Exact clique, coclique and chromatic numbers, plus recognition and
// enumeration of Hoffman colorings (colorings with 1 - k/tau classes).
//
// All searches are deterministic and bounded by a node budget rather than
// wall-clock time. A search that runs out of budget reports bracketing
// bounds with exact = false instead of failing.

#include "error.hpp"
#include "graph.hpp"
#include "params.hpp"
#include "verify.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

namespace srg {

inline constexpr std::uint64_t unlimited_budget = std::numeric_limits<std::uint64_t>::max();

struct CliqueResult {
    std::size_t size = 0;          ///< best found; equals the clique number when exact
    std::vector<Vertex> witness;
    bool is_delsarte = false;
    bool exact = true;
    std::size_t upper_bound = 0;   ///< equals size when exact
    std::uint64_t nodes = 0;
};

struct ColoringResult {
    std::size_t chromatic = 0;     ///< colors used by `classes`; the chromatic number when exact
    std::vector<std::vector<Vertex>> classes;
    bool is_hoffman = false;
    bool exact = true;
    std::size_t lower_bound = 0;   ///< equals chromatic when exact
    std::uint64_t nodes = 0;
};

namespace detail {

/// Strong-regularity data used to tighten bounds, when available.
struct SrgBounds {
    std::optional<SrgParams> params;
    std::optional<QuadNum> hoffman;     ///< 1 - k/tau
    std::optional<QuadNum> ratio;       ///< n tau/(tau - k)
};

inline SrgBounds srg_bounds(const Graph & g)
{
    SrgBounds b;
    auto report = verify_srg(g);
    if (!report.is_srg || !check_feasible(*report.params).feasible)
        return b;
    b.params = report.params;
    b.hoffman = hoffman_bound(*report.params);
    b.ratio = ratio_bound(*report.params);
    return b;
}

/// Bitset branch and bound with greedy-coloring bounds.
class CliqueSearch {
public:
    CliqueSearch(const Graph & g, std::uint64_t budget, std::size_t stop_at) : g_(g), budget_(budget), stop_at_(stop_at) {}

    void run()
    {
        std::vector<Vertex> current;
        expand(current, VertexSet::full(g_.order()));
    }

    std::vector<Vertex> best;
    std::uint64_t nodes = 0;
    bool aborted = false;
    bool reached_stop = false;

private:
    void colour_order(const VertexSet & p, std::vector<Vertex> & order, std::vector<std::size_t> & bounds) const
    {
        VertexSet uncoloured = p;
        std::size_t colour = 0;
        while (!uncoloured.empty()) {
            ++colour;
            VertexSet candidates = uncoloured;
            while (!candidates.empty()) {
                Vertex v = candidates.first();
                candidates.reset(v);
                candidates -= g_.neighbours(v);
                uncoloured.reset(v);
                order.push_back(v);
                bounds.push_back(colour);
            }
        }
    }

    void expand(std::vector<Vertex> & current, VertexSet p)
    {
        if (aborted || reached_stop)
            return;
        if (++nodes > budget_) {
            aborted = true;
            return;
        }
        std::vector<Vertex> order;
        std::vector<std::size_t> bounds;
        colour_order(p, order, bounds);
        for (std::size_t i = order.size(); i-- > 0;) {
            if (current.size() + bounds[i] <= best.size())
                return;
            Vertex v = order[i];
            current.push_back(v);
            VertexSet next = p & g_.neighbours(v);
            if (next.empty()) {
                if (current.size() > best.size()) {
                    best = current;
                    if (best.size() >= stop_at_)
                        reached_stop = true;
                }
            }
            else {
                expand(current, std::move(next));
            }
            current.pop_back();
            if (aborted || reached_stop)
                return;
            p.reset(v);
        }
    }

    const Graph & g_;
    std::uint64_t budget_;
    std::size_t stop_at_;
};

inline std::size_t greedy_colour_bound(const Graph & g)
{
    VertexSet uncoloured = VertexSet::full(g.order());
    std::size_t colours = 0;
    while (!uncoloured.empty()) {
        ++colours;
        VertexSet candidates = uncoloured;
        while (!candidates.empty()) {
            Vertex v = candidates.first();
            candidates.reset(v);
            candidates -= g.neighbours(v);
            uncoloured.reset(v);
        }
    }
    return colours;
}

inline CliqueResult clique_search(const Graph & g, std::uint64_t budget, std::optional<QuadNum> cap)
{
    std::size_t stop_at = g.order() + 1;
    if (cap)
        stop_at = static_cast<std::size_t>(cap->floor().get_si());
    CliqueSearch search(g, budget, std::max<std::size_t>(stop_at, 1));
    search.run();
    CliqueResult r;
    r.witness = search.best;
    std::sort(r.witness.begin(), r.witness.end());
    r.size = r.witness.size();
    r.nodes = search.nodes;
    r.exact = !search.aborted;
    if (r.exact) {
        r.upper_bound = r.size;
    }
    else {
        r.upper_bound = greedy_colour_bound(g);
        if (cap)
            r.upper_bound = std::min(r.upper_bound, stop_at);
    }
    return r;
}

} // namespace detail

/// Exact clique number. For strongly regular graphs the search stops as
/// soon as a clique meeting the Hoffman bound is found.
inline CliqueResult max_clique(const Graph & g, std::uint64_t budget = unlimited_budget)
{
    auto bounds = detail::srg_bounds(g);
    CliqueResult r = detail::clique_search(g, budget, bounds.hoffman);
    r.is_delsarte = bounds.hoffman && QuadNum(static_cast<long>(r.size)) == *bounds.hoffman;
    return r;
}

/// Exact independence number via the complement; Delsarte when the ratio
/// bound n tau/(tau - k) of g is met.
inline CliqueResult max_coclique(const Graph & g, std::uint64_t budget = unlimited_budget)
{
    auto bounds = detail::srg_bounds(g);
    CliqueResult r = detail::clique_search(complement(g), budget, bounds.ratio);
    r.is_delsarte = bounds.ratio && QuadNum(static_cast<long>(r.size)) == *bounds.ratio;
    return r;
}

namespace detail {

/// DSATUR backtracking for k-colorability with an optional clique whose
/// vertices are pre-assigned distinct colors.
class ColouringSearch {
public:
    ColouringSearch(const Graph & g, std::size_t colours, std::uint64_t & budget_left)
        : colour_(g.order(), none), g_(g), k_(colours), budget_left_(budget_left),
          counts_(g.order() * colours, 0), saturation_(g.order(), 0)
    {
    }

    /// true: coloring found in `colour`; false: refuted; nullopt: budget exhausted.
    std::optional<bool> run(const std::vector<Vertex> & seed)
    {
        if (seed.size() > k_)
            return false;
        for (std::size_t i = 0; i < seed.size(); ++i)
            assign(seed[i], i);
        used_ = seed.size();
        coloured_ = seed.size();
        bool found = search();
        if (exhausted_)
            return std::nullopt;
        return found;
    }

    std::vector<std::size_t> colour_;

private:
    static constexpr std::size_t none = std::numeric_limits<std::size_t>::max();

    void assign(Vertex v, std::size_t c)
    {
        colour_[v] = c;
        g_.neighbours(v).for_each([&](Vertex w) {
            if (counts_[w * k_ + c]++ == 0)
                ++saturation_[w];
        });
    }

    void unassign(Vertex v)
    {
        std::size_t c = colour_[v];
        colour_[v] = none;
        g_.neighbours(v).for_each([&](Vertex w) {
            if (--counts_[w * k_ + c] == 0)
                --saturation_[w];
        });
    }

    Vertex choose() const
    {
        Vertex best = g_.order();
        std::size_t best_sat = 0, best_deg = 0;
        for (Vertex v = 0; v < g_.order(); ++v) {
            if (colour_[v] != none)
                continue;
            std::size_t deg = 0;
            g_.neighbours(v).for_each([&](Vertex w) { deg += colour_[w] == none; });
            if (best == g_.order() || saturation_[v] > best_sat || (saturation_[v] == best_sat && deg > best_deg)) {
                best = v;
                best_sat = saturation_[v];
                best_deg = deg;
            }
        }
        return best;
    }

    bool search()
    {
        if (coloured_ == g_.order())
            return true;
        Vertex v = choose();
        std::size_t limit = std::min(k_, used_ + 1);
        for (std::size_t c = 0; c < limit; ++c) {
            if (counts_[v * k_ + c] != 0)
                continue;
            if (budget_left_ == 0) {
                exhausted_ = true;
                return false;
            }
            --budget_left_;
            std::size_t saved_used = used_;
            used_ = std::max(used_, c + 1);
            assign(v, c);
            ++coloured_;
            if (search())
                return true;
            --coloured_;
            unassign(v);
            used_ = saved_used;
            if (exhausted_)
                return false;
        }
        return false;
    }

    const Graph & g_;
    std::size_t k_;
    std::uint64_t & budget_left_;
    std::vector<std::uint32_t> counts_;
    std::vector<std::size_t> saturation_;
    std::size_t used_ = 0;
    std::size_t coloured_ = 0;
    bool exhausted_ = false;
};

inline std::vector<std::vector<Vertex>> classes_from(const std::vector<std::size_t> & colour, std::size_t k)
{
    std::vector<std::vector<Vertex>> classes(k);
    for (Vertex v = 0; v < colour.size(); ++v)
        classes[colour[v]].push_back(v);
    std::erase_if(classes, [](const auto & c) { return c.empty(); });
    std::sort(classes.begin(), classes.end());
    return classes;
}

} // namespace detail

/// Colors g with k colors if possible. nullopt when refuted; throws nothing,
/// but `exhausted` is set if the budget ran out before a decision.
inline std::optional<std::vector<std::vector<Vertex>>> find_colouring(const Graph & g, std::size_t k,
    std::uint64_t & budget_left, bool & exhausted, const std::vector<Vertex> & seed_clique = {})
{
    exhausted = false;
    if (g.order() == 0)
        return std::vector<std::vector<Vertex>>{};
    if (k == 0)
        return std::nullopt;
    detail::ColouringSearch search(g, k, budget_left);
    auto found = search.run(seed_clique);
    if (!found) {
        exhausted = true;
        return std::nullopt;
    }
    if (!*found)
        return std::nullopt;
    return detail::classes_from(search.colour_, k);
}

/// Exact chromatic number by iterative deepening over k, starting from
/// max(clique number, ceil(Hoffman bound)) and seeding each k-colorability
/// search with a maximum clique.
inline ColoringResult chromatic_number(const Graph & g, std::uint64_t budget = unlimited_budget)
{
    ColoringResult r;
    std::size_t n = g.order();
    if (n == 0)
        return r;
    auto bounds = detail::srg_bounds(g);
    CliqueResult clique = detail::clique_search(g, budget, bounds.hoffman);
    std::uint64_t left = budget > clique.nodes ? budget - clique.nodes : 0;
    r.nodes = clique.nodes;

    std::size_t lower = std::max<std::size_t>(clique.size, 1);
    if (bounds.hoffman)
        lower = std::max(lower, static_cast<std::size_t>(bounds.hoffman->ceil().get_si()));

    // DSATUR with unlimited colors gives the initial upper bound
    std::uint64_t greedy_budget = unlimited_budget;
    bool exhausted = false;
    std::optional<std::vector<std::vector<Vertex>>> best;
    {
        detail::ColouringSearch greedy(g, n, greedy_budget);
        greedy.run(clique.witness);
        best = detail::classes_from(greedy.colour_, n);
    }
    std::size_t upper = best->size();

    for (std::size_t k = lower; k < upper; ++k) {
        std::uint64_t before = left;
        auto found = find_colouring(g, k, left, exhausted, clique.witness);
        r.nodes += before - left;
        if (exhausted) {
            r.exact = false;
            r.lower_bound = k;
            break;
        }
        if (found) {
            best = std::move(found);
            upper = k;
            break;
        }
        lower = k + 1;
    }

    r.classes = std::move(*best);
    r.chromatic = r.classes.size();
    if (r.exact)
        r.lower_bound = r.chromatic;
    r.is_hoffman = r.exact && bounds.hoffman && QuadNum(static_cast<long>(r.chromatic)) == *bounds.hoffman;
    return r;
}

struct HoffmanColoringReport {
    bool valid = false;
    bool bound_is_integer = false;
    bool class_count_matches = false;
    bool proper = false;
    bool delsarte_classes = false;
    bool equitable = false;
    std::string failure;
};

/// Validates a proposed Hoffman coloring of a primitive SRG: exactly
/// 1 - k/tau classes, each a Delsarte coclique, and every vertex with
/// exactly -tau neighbours in every other class.
inline HoffmanColoringReport check_hoffman_coloring(const Graph & g, const std::vector<std::vector<Vertex>> & classes)
{
    SrgParams p = require_primitive_srg(g);
    std::size_t n = g.order();
    std::vector<std::size_t> owner(n, classes.size());
    for (std::size_t c = 0; c < classes.size(); ++c) {
        if (classes[c].empty())
            throw Error(ErrorKind::NotPartition, "class " + std::to_string(c) + " is empty");
        for (Vertex v : classes[c]) {
            if (v >= n)
                throw Error(ErrorKind::NotPartition, "vertex " + std::to_string(v) + " out of range");
            if (owner[v] != classes.size())
                throw Error(ErrorKind::NotPartition, "vertex " + std::to_string(v) + " appears twice");
            owner[v] = c;
        }
    }
    for (Vertex v = 0; v < n; ++v)
        if (owner[v] == classes.size())
            throw Error(ErrorKind::NotPartition, "vertex " + std::to_string(v) + " is in no class");

    HoffmanColoringReport r;
    QuadNum bound = hoffman_bound(p);
    QuadNum ratio = ratio_bound(p);
    QuadNum minus_tau = -spectrum(p).tau;
    r.bound_is_integer = bound.is_integer();
    if (!r.bound_is_integer) {
        r.failure = "Hoffman bound " + bound.to_string() + " is not an integer";
        return r;
    }
    r.class_count_matches = QuadNum(static_cast<long>(classes.size())) == bound;
    if (!r.class_count_matches)
        r.failure = std::to_string(classes.size()) + " classes, bound is " + bound.to_string();

    std::vector<VertexSet> sets;
    for (const auto & c : classes) {
        VertexSet s(n);
        for (Vertex v : c)
            s.set(v);
        sets.push_back(std::move(s));
    }

    r.proper = true;
    r.delsarte_classes = true;
    for (std::size_t c = 0; c < sets.size(); ++c) {
        if (!is_coclique(g, sets[c])) {
            r.proper = false;
            r.delsarte_classes = false;
            if (r.failure.empty())
                r.failure = "class " + std::to_string(c) + " is not a coclique";
        }
        else if (QuadNum(static_cast<long>(sets[c].count())) != ratio) {
            r.delsarte_classes = false;
            if (r.failure.empty())
                r.failure = "class " + std::to_string(c) + " has size " + std::to_string(sets[c].count())
                    + ", ratio bound is " + ratio.to_string();
        }
    }

    r.equitable = true;
    for (Vertex v = 0; v < n && r.equitable; ++v) {
        for (std::size_t c = 0; c < sets.size(); ++c) {
            auto inside = static_cast<long>(g.neighbours(v).intersection_count(sets[c]));
            QuadNum expected = c == owner[v] ? QuadNum(0) : minus_tau;
            if (QuadNum(inside) != expected) {
                r.equitable = false;
                if (r.failure.empty())
                    r.failure = "vertex " + std::to_string(v) + " has " + std::to_string(inside) + " neighbours in class "
                        + std::to_string(c) + ", expected " + expected.to_string();
                break;
            }
        }
    }
    r.valid = r.class_count_matches && r.proper && r.delsarte_classes && r.equitable;
    return r;
}

struct HoffmanColoringList {
    std::vector<std::vector<std::vector<Vertex>>> partitions;
    bool truncated = false;       ///< hit `limit` partitions
    bool budget_exhausted = false;
    std::uint64_t nodes = 0;
};

namespace detail {

class HoffmanEnumerator {
public:
    HoffmanEnumerator(const Graph & g, std::size_t colours, std::size_t class_size, std::size_t per_foreign_class,
        std::size_t limit, std::uint64_t budget)
        : g_(g), k_(colours), cap_(class_size), t_(per_foreign_class), limit_(limit), budget_(budget),
          colour_(g.order(), none), counts_(g.order() * colours, 0), sizes_(colours, 0)
    {
    }

    void run() { search(0); }

    HoffmanColoringList out;

private:
    static constexpr std::size_t none = std::numeric_limits<std::size_t>::max();

    bool allowed(Vertex v, std::size_t c) const
    {
        if (sizes_[c] >= cap_ || counts_[v * k_ + c] != 0)
            return false;
        // v joining c adds one neighbour in class c to each neighbour of v
        bool ok = true;
        g_.neighbours(v).for_each([&](Vertex w) {
            if (counts_[w * k_ + c] + 1 > t_)
                ok = false;
        });
        return ok;
    }

    void assign(Vertex v, std::size_t c, int delta)
    {
        g_.neighbours(v).for_each([&](Vertex w) { counts_[w * k_ + c] += delta; });
        sizes_[c] += delta;
        colour_[v] = delta > 0 ? c : none;
    }

    void search(std::size_t coloured)
    {
        if (out.truncated || out.budget_exhausted)
            return;
        if (coloured == g_.order()) {
            record();
            return;
        }
        // most constrained vertex, lowest index on ties
        Vertex best = g_.order();
        std::size_t best_options = none;
        std::size_t limit = std::min(k_, used_ + 1);
        for (Vertex v = 0; v < g_.order(); ++v) {
            if (colour_[v] != none)
                continue;
            std::size_t options = 0;
            for (std::size_t c = 0; c < limit; ++c)
                options += allowed(v, c);
            if (options < best_options) {
                best = v;
                best_options = options;
            }
            if (options == 0)
                return;
        }
        for (std::size_t c = 0; c < limit; ++c) {
            if (!allowed(best, c))
                continue;
            if (++out.nodes > budget_) {
                out.budget_exhausted = true;
                return;
            }
            std::size_t saved = used_;
            used_ = std::max(used_, c + 1);
            assign(best, c, +1);
            search(coloured + 1);
            assign(best, c, -1);
            used_ = saved;
            if (out.truncated || out.budget_exhausted)
                return;
        }
    }

    void record()
    {
        // completed colorings with full classes and <= t per foreign class
        // are equitable: each vertex has (k total) split over k_-1 classes
        for (Vertex v = 0; v < g_.order(); ++v)
            for (std::size_t c = 0; c < k_; ++c)
                if (c != colour_[v] && counts_[v * k_ + c] != t_)
                    return;
        out.partitions.push_back(classes_from(colour_, k_));
        if (out.partitions.size() >= limit_)
            out.truncated = true;
    }

    const Graph & g_;
    std::size_t k_, cap_, t_, limit_;
    std::uint64_t budget_;
    std::vector<std::size_t> colour_;
    std::vector<std::size_t> counts_;
    std::vector<std::size_t> sizes_;
    std::size_t used_ = 0;
};

} // namespace detail

/// All Hoffman colorings of a primitive SRG as unlabeled partitions into
/// Delsarte cocliques, found by backtracking that enforces the equitable
/// -tau-per-foreign-class condition during extension. Sorted; stops after
/// `limit` partitions with truncated = true.
inline HoffmanColoringList enumerate_hoffman_colorings(const Graph & g, std::size_t limit = std::numeric_limits<std::size_t>::max(),
    std::uint64_t budget = unlimited_budget)
{
    SrgParams p = require_primitive_srg(g);
    QuadNum bound = hoffman_bound(p);
    if (!bound.is_integer())
        throw Error(ErrorKind::NonIntegerBound, "Hoffman bound " + bound.to_string() + " of " + p.to_string() + " is not an integer");
    QuadNum ratio = ratio_bound(p);
    QuadNum minus_tau = -spectrum(p).tau;
    if (!ratio.is_integer() || !minus_tau.is_integer())
        return {};
    auto colours = static_cast<std::size_t>(*integer_value(bound));
    auto class_size = static_cast<std::size_t>(*integer_value(ratio));
    auto t = static_cast<std::size_t>(*integer_value(minus_tau));
    detail::HoffmanEnumerator e(g, colours, class_size, t, limit, budget);
    if (limit > 0)
        e.run();
    std::sort(e.out.partitions.begin(), e.out.partitions.end());
    return std::move(e.out);
}

} // namespace srg
