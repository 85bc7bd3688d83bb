#pragma once

// Type A/B/C/X classification of primitive SRGs by which of omega and chi
// meet the Hoffman bound, batch processing of graph6 catalogs, and the Hasse
// diagram of the homomorphism order within one parameter set.

#include "error.hpp"
#include "graph.hpp"
#include "graph6.hpp"
#include "hom.hpp"
#include "parallel.hpp"
#include "params.hpp"
#include "solvers.hpp"
#include "verify.hpp"

#include <algorithm>
#include <cstdint>
#include <istream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace srg {

enum class TypeTag { A, B, C, X, Undetermined };

inline std::string_view to_string(TypeTag t)
{
    switch (t) {
    case TypeTag::A: return "A";
    case TypeTag::B: return "B";
    case TypeTag::C: return "C";
    case TypeTag::X: return "X";
    case TypeTag::Undetermined: return "undetermined";
    }
    return "";
}

/// A: omega < bound = chi; B: omega = bound = chi; C: omega = bound < chi;
/// X: omega < bound < chi. When a solver runs out of budget the tag is
/// Undetermined and `candidates` lists the types consistent with the
/// brackets.
struct SrgType {
    TypeTag tag = TypeTag::Undetermined;
    std::size_t omega_lo = 0, omega_hi = 0;
    std::size_t chi_lo = 0, chi_hi = 0;
    QuadNum bound;
    std::vector<TypeTag> candidates;
    std::vector<Vertex> clique;                  ///< a maximum (or largest found) clique
    std::vector<std::vector<Vertex>> colouring;  ///< best colouring found

    bool omega_exact() const { return omega_lo == omega_hi; }
    bool chi_exact() const { return chi_lo == chi_hi; }
    std::size_t omega() const { return omega_lo; }
    std::size_t chi() const { return chi_hi; }
};

/// Classifies a primitive SRG. A non-integer Hoffman bound forces type X
/// (omega and chi are still reported, within budget).
inline SrgType classify_type(const Graph & g, std::uint64_t budget = unlimited_budget)
{
    SrgParams p = require_primitive_srg(g);
    SrgType t;
    t.bound = hoffman_bound(p);

    CliqueResult clique = max_clique(g, budget);
    t.omega_lo = clique.size;
    t.omega_hi = clique.exact ? clique.size : clique.upper_bound;
    t.clique = clique.witness;
    ColoringResult chi = chromatic_number(g, budget);
    t.chi_lo = chi.lower_bound;
    t.chi_hi = chi.chromatic;
    t.colouring = chi.classes;

    auto b = integer_value(t.bound);
    if (!b) {
        t.tag = TypeTag::X;
        t.candidates = {TypeTag::X};
        return t;
    }
    auto bound = static_cast<std::size_t>(*b);
    // omega <= bound <= chi always holds for SRGs
    t.omega_hi = std::min(t.omega_hi, bound);
    bool omega_meets = t.omega_hi == bound;
    bool omega_below = t.omega_lo < bound;
    bool chi_meets = t.chi_lo <= bound;
    bool chi_above = t.chi_hi > bound;
    if (omega_below && chi_meets)
        t.candidates.push_back(TypeTag::A);
    if (omega_meets && chi_meets)
        t.candidates.push_back(TypeTag::B);
    if (omega_meets && chi_above)
        t.candidates.push_back(TypeTag::C);
    if (omega_below && chi_above)
        t.candidates.push_back(TypeTag::X);
    t.tag = t.candidates.size() == 1 ? t.candidates.front() : TypeTag::Undetermined;
    return t;
}

struct CatalogFlags {
    std::optional<bool> core;
    std::optional<bool> pseudocore_verified; ///< set only when requested
    std::optional<bool> has_hoffman_coloring;
    std::optional<bool> has_delsarte_clique;
};

struct CatalogEntry {
    std::string id;
    Graph graph;
    SrgParams params;
    SrgType type;
    CatalogFlags flags;
};

/// Flags follow from the type: not a core iff B, a Hoffman coloring iff
/// A or B, a Delsarte clique iff B or C.
inline CatalogFlags flags_for(TypeTag tag)
{
    CatalogFlags f;
    if (tag == TypeTag::Undetermined)
        return f;
    f.core = tag != TypeTag::B;
    f.has_hoffman_coloring = tag == TypeTag::A || tag == TypeTag::B;
    f.has_delsarte_clique = tag == TypeTag::B || tag == TypeTag::C;
    return f;
}

struct ClassifyOptions {
    std::uint64_t budget = unlimited_budget; ///< per graph, per solver
    std::size_t threads = 1;
    /// Also enumerate all endomorphisms and confirm every proper one is a coloring.
    bool verify_pseudocore = false;
};

inline CatalogEntry make_entry(std::string id, const Graph & g, const ClassifyOptions & options = {})
{
    CatalogEntry e;
    e.id = std::move(id);
    e.graph = g;
    e.params = require_primitive_srg(g);
    e.type = classify_type(g, options.budget);
    e.flags = flags_for(e.type.tag);
    if (options.verify_pseudocore) {
        auto report = verify_main_theorem(g, g, options.budget);
        if (report.complete)
            e.flags.pseudocore_verified = report.holds();
    }
    return e;
}

struct SkippedLine {
    std::size_t line_number = 0;
    std::string reason;
};

struct BatchResult {
    std::vector<CatalogEntry> entries;
    std::vector<SkippedLine> skipped;
    std::map<std::string, std::size_t> summary; ///< type name -> count

    std::size_t count(TypeTag t) const
    {
        auto it = summary.find(std::string(to_string(t)));
        return it == summary.end() ? 0 : it->second;
    }
};

/// Classifies each graph6 line; ids are line numbers. Unparsable lines and
/// graphs that are not primitive SRGs are skipped with a reason.
inline BatchResult batch_classify(std::istream & in, const ClassifyOptions & options = {})
{
    BatchResult r;
    std::vector<Graph6Line> lines = read_graph6_lines(in);
    std::vector<std::size_t> accepted;
    for (std::size_t i = 0; i < lines.size(); ++i) {
        const auto & line = lines[i];
        if (line.error) {
            r.skipped.push_back({line.line_number, line.error->what()});
            continue;
        }
        auto report = verify_srg(*line.graph);
        if (!report.is_srg) {
            r.skipped.push_back({line.line_number, "NotSrg: " + report.failure_witness->describe()});
            continue;
        }
        if (!report.primitive) {
            r.skipped.push_back({line.line_number, "NotPrimitiveSrg: " + report.params->to_string()});
            continue;
        }
        accepted.push_back(i);
    }
    r.entries.resize(accepted.size());
    parallel_for(accepted.size(), options.threads, [&](std::size_t j) {
        const auto & line = lines[accepted[j]];
        r.entries[j] = make_entry(std::to_string(line.line_number), *line.graph, options);
    });
    for (const auto & e : r.entries)
        ++r.summary[std::string(to_string(e.type.tag))];
    return r;
}

inline BatchResult batch_classify(std::vector<std::pair<std::string, Graph>> graphs, const ClassifyOptions & options = {})
{
    BatchResult r;
    r.entries.resize(graphs.size());
    parallel_for(graphs.size(), options.threads,
        [&](std::size_t i) { r.entries[i] = make_entry(graphs[i].first, graphs[i].second, options); });
    for (const auto & e : r.entries)
        ++r.summary[std::string(to_string(e.type.tag))];
    return r;
}

/// What the types alone say about a homomorphism source -> target between
/// same-parameter entries: one exists iff the graphs are isomorphic or
/// source is A/B and target is B/C. nullopt when a type is undetermined.
inline std::optional<bool> hom_predicted_by_types(const CatalogEntry & source, const CatalogEntry & target)
{
    if (are_isomorphic(source.graph, target.graph))
        return true;
    if (source.type.tag == TypeTag::Undetermined || target.type.tag == TypeTag::Undetermined)
        return std::nullopt;
    bool from = source.type.tag == TypeTag::A || source.type.tag == TypeTag::B;
    bool to = target.type.tag == TypeTag::B || target.type.tag == TypeTag::C;
    return from && to;
}

namespace detail {

inline std::string bracket(std::size_t lo, std::size_t hi)
{
    return lo == hi ? std::to_string(lo) : "[" + std::to_string(lo) + "," + std::to_string(hi) + "]";
}

inline std::string dot_escape(const std::string & s)
{
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\')
            out += '\\';
        out += c;
    }
    return out;
}

inline std::string entry_label(const CatalogEntry & e)
{
    return dot_escape(e.id) + "\\n" + std::string(to_string(e.type.tag)) + " omega=" + bracket(e.type.omega_lo, e.type.omega_hi)
        + " chi=" + bracket(e.type.chi_lo, e.type.chi_hi) + " bound=" + e.type.bound.to_string();
}

} // namespace detail

/// DOT digraph of the homomorphism order. Type B graphs are homomorphically
/// equivalent and share one node; edges run A -> B and B -> C (A -> C when
/// no B graph is present). X graphs and undetermined entries are isolated.
inline std::string hasse_dot(const std::vector<CatalogEntry> & entries)
{
    for (const auto & e : entries)
        if (!(e.params == entries.front().params))
            throw Error(ErrorKind::MixedParameters,
                "entries mix " + entries.front().params.to_string() + " and " + e.params.to_string());
    std::ostringstream out;
    out << "digraph hasse {\n";
    if (entries.empty()) {
        out << "}\n";
        return out.str();
    }
    out << "  label=\"SRG" << entries.front().params.to_string() << "\";\n";
    std::vector<std::size_t> a, c, b;
    for (std::size_t i = 0; i < entries.size(); ++i) {
        const auto & e = entries[i];
        switch (e.type.tag) {
        case TypeTag::A: a.push_back(i); break;
        case TypeTag::B: b.push_back(i); continue;
        case TypeTag::C: c.push_back(i); break;
        default: break;
        }
        out << "  n" << i << " [label=\"" << detail::entry_label(e) << "\"];\n";
    }
    if (!b.empty()) {
        const auto & first = entries[b.front()].type;
        out << "  B [label=\"B:";
        for (std::size_t i : b)
            out << " " << detail::dot_escape(entries[i].id);
        out << "\\nomega=" << first.omega() << " chi=" << first.chi() << " bound=" << first.bound.to_string() << "\"];\n";
        for (std::size_t i : a)
            out << "  n" << i << " -> B;\n";
        for (std::size_t i : c)
            out << "  B -> n" << i << ";\n";
    }
    else {
        for (std::size_t i : a)
            for (std::size_t j : c)
                out << "  n" << i << " -> n" << j << ";\n";
    }
    out << "}\n";
    return out.str();
}

} // namespace srg
