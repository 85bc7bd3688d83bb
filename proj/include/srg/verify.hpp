#pragma once

#include "graph.hpp"
#include "params.hpp"

#include <optional>
#include <string>

namespace srg {

struct SrgFailure {
    enum class Reason { Degenerate, Irregular, Lambda, Mu };
    Reason reason = Reason::Degenerate;
    Vertex u = 0;
    Vertex v = 0;
    std::int64_t observed = 0;
    std::int64_t expected = 0;

    std::string describe() const
    {
        switch (reason) {
        case Reason::Degenerate:
            return "degenerate graph (no edges or fewer than two vertices)";
        case Reason::Irregular:
            return "vertex " + std::to_string(v) + " has degree " + std::to_string(observed) + ", vertex "
                + std::to_string(u) + " has degree " + std::to_string(expected);
        case Reason::Lambda:
            return "adjacent pair (" + std::to_string(u) + "," + std::to_string(v) + ") has "
                + std::to_string(observed) + " common neighbours, expected lambda = " + std::to_string(expected);
        case Reason::Mu:
            return "non-adjacent pair (" + std::to_string(u) + "," + std::to_string(v) + ") has "
                + std::to_string(observed) + " common neighbours, expected mu = " + std::to_string(expected);
        }
        return {};
    }
};

struct SrgCheckReport {
    bool is_srg = false;
    bool primitive = false;
    std::optional<SrgParams> params;
    std::optional<SrgFailure> failure_witness;
};

/// Brute-force strong-regularity check by common-neighbour counts. lambda
/// is fixed by the first edge and mu by the first distinct non-adjacent
/// pair; complete graphs report mu = 0. Primitivity requires 1 <= mu < k
/// and connectivity of both the graph and its complement.
inline SrgCheckReport verify_srg(const Graph & g)
{
    SrgCheckReport report;
    std::size_t n = g.order();
    auto fail = [&](SrgFailure f) {
        report.failure_witness = f;
        return report;
    };
    if (n < 2)
        return fail({});
    for (Vertex v = 1; v < n; ++v)
        if (g.degree(v) != g.degree(0))
            return fail({SrgFailure::Reason::Irregular, 0, v, static_cast<std::int64_t>(g.degree(v)),
                static_cast<std::int64_t>(g.degree(0))});
    std::int64_t k = static_cast<std::int64_t>(g.degree(0));
    if (k == 0)
        return fail({});

    std::optional<std::int64_t> lambda, mu;
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
            auto common = static_cast<std::int64_t>(g.neighbours(u).intersection_count(g.neighbours(v)));
            auto & expected = g.adjacent(u, v) ? lambda : mu;
            if (!expected) {
                expected = common;
                continue;
            }
            if (*expected != common)
                return fail({g.adjacent(u, v) ? SrgFailure::Reason::Lambda : SrgFailure::Reason::Mu, u, v, common,
                    *expected});
        }
    }

    report.is_srg = true;
    report.params = SrgParams{static_cast<std::int64_t>(n), k, lambda.value_or(0), mu.value_or(0)};
    report.primitive = report.params->primitive() && is_connected(g) && is_connected(complement(g));
    return report;
}

/// Parameters of g, or NotPrimitiveSrg.
inline SrgParams require_primitive_srg(const Graph & g)
{
    auto report = verify_srg(g);
    if (!report.is_srg)
        throw Error(ErrorKind::NotPrimitiveSrg, "not strongly regular: " + report.failure_witness->describe());
    if (!report.primitive)
        throw Error(ErrorKind::NotPrimitiveSrg, "strongly regular " + report.params->to_string() + " but imprimitive");
    return *report.params;
}

} // namespace srg
