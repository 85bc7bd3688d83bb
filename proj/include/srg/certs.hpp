#pragma once

// Exact matrix certificates for primitive strongly regular graphs: the
// cosine matrix E_G (unit-diagonal scaling of the least-eigenvalue
// projector), pullbacks M^phi along vertex maps, homomorphism matrices
// X = E_H^phi - E_G, the coclique ratio-bound witness, the theta
// primal/dual pair, and (alpha, beta)-graph tests.

#include "error.hpp"
#include "graph.hpp"
#include "matrix.hpp"
#include "params.hpp"
#include "verify.hpp"

#include <map>
#include <optional>
#include <span>
#include <string>
#include <tuple>
#include <vector>

namespace srg {

/// First entry at which a claimed matrix identity fails.
struct EntryFailure {
    std::string identity;
    std::size_t row = 0;
    std::size_t col = 0;
    QuadNum value; ///< residual (lhs - rhs) at that entry

    std::string describe() const
    {
        return identity + " fails at (" + std::to_string(row) + "," + std::to_string(col) + "): residual "
            + value.to_string();
    }
};

/// Edge uv with phi(u), phi(v) not adjacent, if any.
inline std::optional<std::pair<Vertex, Vertex>> non_homomorphic_edge(const Graph & g, const Graph & h,
    std::span<const Vertex> phi)
{
    for (auto [u, v] : g.edges())
        if (!h.adjacent(phi[u], phi[v]))
            return std::pair{u, v};
    return std::nullopt;
}

inline void require_total_map(const Graph & g, const Graph & h, std::span<const Vertex> phi)
{
    if (phi.size() != g.order())
        throw Error(ErrorKind::IndexOutOfRange, "map has " + std::to_string(phi.size()) + " entries for "
            + std::to_string(g.order()) + " vertices");
    for (Vertex x : phi)
        if (x >= h.order())
            throw Error(ErrorKind::IndexOutOfRange, "image " + std::to_string(x) + " outside the target");
}

inline ExactMatrix cosine_matrix(const Graph & g, const SrgParams & params)
{
    Cosines c = cosines(params);
    return ExactMatrix::from_relations(g, QuadNum(1), c.alpha, c.beta);
}

/// Entries 1 / tau/k / (-tau-1)/(n-k-1) on diagonal / edges / non-edges.
inline ExactMatrix cosine_matrix(const Graph & g) { return cosine_matrix(g, require_primitive_srg(g)); }

struct ProjectorReport {
    bool adjacency_equation = false; ///< A^2 + (mu-lambda)A + (mu-k)I = mu J
    bool annihilated = false;        ///< (A - tau I) E_G = 0
    bool scaled_idempotent = false;  ///< E_G E_G = (n/m_tau) E_G
    bool psd = false;
    std::optional<EntryFailure> first_failure;

    bool ok() const { return adjacency_equation && annihilated && scaled_idempotent && psd; }
};

/// Checks the projector identities of g against claimed parameters. The
/// claimed parameters must be feasible and primitive; g itself need not
/// be strongly regular, in which case the report carries the failure.
inline ProjectorReport check_projector_identities(const Graph & g, const SrgParams & claimed)
{
    if (static_cast<std::int64_t>(g.order()) != claimed.n)
        throw Error(ErrorKind::InvalidArgument, "graph order differs from claimed n");
    Spectrum s = spectrum(claimed);
    ProjectorReport report;
    auto record = [&](EntryFailure f) {
        if (!report.first_failure)
            report.first_failure = std::move(f);
    };

    std::size_t n = g.order();
    report.adjacency_equation = true;
    for (Vertex u = 0; u < n && report.adjacency_equation; ++u) {
        for (Vertex v = 0; v < n; ++v) {
            auto walks = static_cast<std::int64_t>(g.neighbours(u).intersection_count(g.neighbours(v)));
            std::int64_t lhs = walks + (claimed.mu - claimed.lambda) * (g.adjacent(u, v) ? 1 : 0)
                + (u == v ? claimed.mu - claimed.k : 0);
            if (lhs != claimed.mu) {
                report.adjacency_equation = false;
                record({"A^2 + (mu-lambda)A + (mu-k)I = mu J", u, v, QuadNum(static_cast<long>(lhs - claimed.mu))});
                break;
            }
        }
    }

    ExactMatrix e = cosine_matrix(g, claimed);
    ExactMatrix shifted = ExactMatrix::adjacency(g) - ExactMatrix::identity(n) * s.tau;
    ExactMatrix product = shifted * e;
    if (auto at = product.first_nonzero())
        record({"(A - tau I) E_G = 0", at->first, at->second, product(at->first, at->second)});
    else
        report.annihilated = true;

    ExactMatrix square = e * e;
    ExactMatrix residual = square - e * QuadNum(Rational(Integer(static_cast<long>(claimed.n)), Integer(static_cast<long>(s.m_tau))));
    if (auto at = residual.first_nonzero())
        record({"E_G^2 = (n/m_tau) E_G", at->first, at->second, residual(at->first, at->second)});
    else
        report.scaled_idempotent = true;

    PsdResult psd = ldlt_psd(e);
    report.psd = psd.psd;
    if (!psd.psd)
        record({"E_G positive semidefinite", 0, 0, e.quadratic_form(*psd.witness)});
    return report;
}

inline ProjectorReport check_projector_identities(const Graph & g)
{
    return check_projector_identities(g, require_primitive_srg(g));
}

/// (M^phi)_uv = M_{phi(u) phi(v)}.
inline ExactMatrix pullback(const ExactMatrix & m, std::span<const Vertex> phi)
{
    for (Vertex x : phi)
        if (x >= m.size())
            throw Error(ErrorKind::IndexOutOfRange, "map image " + std::to_string(x) + " outside the matrix");
    ExactMatrix out(phi.size());
    for (std::size_t u = 0; u < phi.size(); ++u)
        for (std::size_t v = 0; v < phi.size(); ++v)
            out(u, v) = m(phi[u], phi[v]);
    return out;
}

struct HomMatrix {
    ExactMatrix x;
    ExactMatrix pulled_back; ///< E_H^phi
    QuadNum alpha;
    QuadNum beta;       ///< non-adjacency cosine of the source
    QuadNum beta_prime; ///< non-adjacency cosine of the target
};

/// X = E_H^phi - E_G for a homomorphism phi between primitive SRGs that
/// share their adjacency cosine.
inline HomMatrix hom_matrix(const Graph & g, const Graph & h, std::span<const Vertex> phi)
{
    SrgParams pg = require_primitive_srg(g);
    SrgParams ph = require_primitive_srg(h);
    require_total_map(g, h, phi);
    Cosines cg = cosines(pg);
    Cosines ch = cosines(ph);
    if (cg.alpha != ch.alpha)
        throw Error(ErrorKind::CosineMismatch,
            "adjacency cosines differ: " + cg.alpha.to_string() + " vs " + ch.alpha.to_string());
    if (auto edge = non_homomorphic_edge(g, h, phi))
        throw Error(ErrorKind::NotHomomorphism, "edge (" + std::to_string(edge->first) + "," + std::to_string(edge->second)
            + ") maps to a non-edge");
    HomMatrix hm;
    hm.pulled_back = pullback(cosine_matrix(h, ph), phi);
    hm.x = hm.pulled_back - cosine_matrix(g, pg);
    hm.alpha = cg.alpha;
    hm.beta = cg.beta;
    hm.beta_prime = ch.beta;
    return hm;
}

struct ProductLemmaReport {
    bool ok = false;
    std::optional<EntryFailure> failure;
};

/// Verifies (A - tau I) M = 0 by a dense exact product, tau being the
/// least eigenvalue of the primitive SRG g.
inline ProductLemmaReport check_product_lemma(const Graph & g, const ExactMatrix & m)
{
    SrgParams p = require_primitive_srg(g);
    if (m.size() != g.order())
        throw Error(ErrorKind::InvalidArgument, "matrix order differs from graph order");
    Spectrum s = spectrum(p);
    ExactMatrix product = (ExactMatrix::adjacency(g) - ExactMatrix::identity(g.order()) * s.tau) * m;
    ProductLemmaReport report;
    if (auto at = product.first_nonzero()) {
        report.failure = EntryFailure{"(A - tau I) M = 0", at->first, at->second, product(at->first, at->second)};
        return report;
    }
    report.ok = true;
    return report;
}

/// Both (A - tau I) E_H^phi = 0 and (A - tau I) X = 0.
inline ProductLemmaReport check_product_lemma(const Graph & g, const HomMatrix & hm)
{
    ProductLemmaReport pulled = check_product_lemma(g, hm.pulled_back);
    if (!pulled.ok) {
        pulled.failure->identity = "(A - tau I) E_H^phi = 0";
        return pulled;
    }
    ProductLemmaReport x = check_product_lemma(g, hm.x);
    if (!x.ok)
        x.failure->identity = "(A - tau I) X = 0";
    return x;
}

/// Evaluates (A - tau I) X for many homomorphisms G -> H without building
/// dense matrices. Entry uv equals
///   -tau X_uv + c1 (1 - beta) + c2 (alpha - beta) + c3 (beta' - beta)
/// where c1, c2, c3 count neighbours w of u that are non-neighbours of v
/// with phi(w) = phi(v), phi(w) ~ phi(v), and phi(w) non-adjacent to phi(v)
/// respectively. Each distinct (class, c1, c2, c3) is evaluated exactly once.
class StructuredProductCheck {
public:
    StructuredProductCheck(const Graph & g, const Graph & h) : g_(g), h_(h)
    {
        SrgParams pg = require_primitive_srg(g);
        SrgParams ph = require_primitive_srg(h);
        Cosines cg = cosines(pg);
        Cosines ch = cosines(ph);
        if (cg.alpha != ch.alpha)
            throw Error(ErrorKind::CosineMismatch, "adjacency cosines differ");
        tau_ = spectrum(pg).tau;
        class_value_ = {QuadNum(), QuadNum(1) - cg.beta, cg.alpha - cg.beta, ch.beta - cg.beta};
    }

    /// Caller guarantees phi is a homomorphism.
    std::optional<EntryFailure> check(std::span<const Vertex> phi)
    {
        std::size_t n = g_.order();
        std::vector<VertexSet> cls(4, VertexSet(n));
        for (Vertex v = 0; v < n; ++v) {
            for (auto & c : cls)
                c.clear();
            for (Vertex w = 0; w < n; ++w) {
                if (w == v || g_.adjacent(w, v))
                    continue;
                if (phi[w] == phi[v])
                    cls[1].set(w);
                else if (h_.adjacent(phi[w], phi[v]))
                    cls[2].set(w);
                else
                    cls[3].set(w);
            }
            for (Vertex u = 0; u < n; ++u) {
                int own = 0;
                for (int c = 1; c <= 3; ++c)
                    if (cls[c].test(u))
                        own = c;
                Key key{own, g_.neighbours(u).intersection_count(cls[1]),
                    g_.neighbours(u).intersection_count(cls[2]), g_.neighbours(u).intersection_count(cls[3])};
                const QuadNum & value = evaluate(key);
                if (!value.is_zero())
                    return EntryFailure{"(A - tau I) X = 0", u, v, value};
            }
        }
        return std::nullopt;
    }

private:
    using Key = std::tuple<int, std::size_t, std::size_t, std::size_t>;

    const QuadNum & evaluate(const Key & key)
    {
        auto it = cache_.find(key);
        if (it != cache_.end())
            return it->second;
        auto [own, c1, c2, c3] = key;
        QuadNum value = -tau_ * class_value_[own]
            + QuadNum(static_cast<long>(c1)) * class_value_[1]
            + QuadNum(static_cast<long>(c2)) * class_value_[2]
            + QuadNum(static_cast<long>(c3)) * class_value_[3];
        return cache_.emplace(key, std::move(value)).first->second;
    }

    const Graph & g_;
    const Graph & h_;
    QuadNum tau_;
    std::vector<QuadNum> class_value_;
    std::map<Key, QuadNum> cache_;
};

struct RatioReport {
    std::size_t size = 0;
    QuadNum bound;            ///< n tau / (tau - k)
    QuadNum quadratic_form;   ///< y^T N y for the characteristic vector y
    bool within_bound = false;
    bool tight = false;
    /// Only meaningful when tight: every outside vertex has -tau neighbours in S.
    bool outside_condition = false;
    std::optional<std::pair<Vertex, std::size_t>> outside_failure; ///< vertex and its count
};

/// Ratio-bound witness for a coclique S of a k-regular graph with least
/// eigenvalue tau: y^T N y >= 0 with N = (A - tau I) - ((k - tau)/n) J,
/// |S| <= n tau/(tau - k), and in the tight case the -tau neighbour
/// condition on every vertex outside S.
inline RatioReport ratio_witness(const Graph & g, const VertexSet & s, const QuadNum & tau)
{
    auto k = g.regular_degree();
    if (!k)
        throw Error(ErrorKind::NotRegular, "ratio bound needs a regular graph");
    if (!is_coclique(g, s))
        throw Error(ErrorKind::NotCoclique, "vertex set is not a coclique");
    QuadNum n(static_cast<long>(g.order()));
    QuadNum kq(static_cast<long>(*k));
    RatioReport r;
    r.size = s.count();
    r.bound = n * tau / (tau - kq);

    QuadNum size(static_cast<long>(r.size));
    long inside_edges_twice = 0;
    s.for_each([&](Vertex v) { inside_edges_twice += static_cast<long>(g.neighbours(v).intersection_count(s)); });
    r.quadratic_form = QuadNum(inside_edges_twice) - tau * size - (kq - tau) / n * size * size;
    r.within_bound = r.quadratic_form.sign() >= 0 && size <= r.bound;
    r.tight = size == r.bound;
    if (r.tight) {
        r.outside_condition = true;
        for (Vertex v = 0; v < g.order(); ++v) {
            if (s.test(v))
                continue;
            std::size_t inside = g.neighbours(v).intersection_count(s);
            if (QuadNum(static_cast<long>(inside)) != -tau) {
                r.outside_condition = false;
                r.outside_failure = std::pair{v, inside};
                break;
            }
        }
    }
    return r;
}

/// Same, with tau taken from the parameters of the strongly regular graph g.
inline RatioReport ratio_witness(const Graph & g, const VertexSet & s)
{
    auto report = verify_srg(g);
    if (!report.is_srg)
        throw Error(ErrorKind::NotPrimitiveSrg, "least eigenvalue is only known exactly for strongly regular graphs");
    return ratio_witness(g, s, spectrum(*report.params).tau);
}

struct ThetaCert {
    ExactMatrix primal; ///< M: M_uu = t-1, M_uv = -1 on edges, PSD
    ExactMatrix dual;   ///< B: zero on non-edges, trace one, PSD
    QuadNum value;      ///< t = 1 - k/tau
};

struct ThetaReport {
    ThetaCert cert;
    bool primal_feasible = false;
    bool dual_feasible = false;
    QuadNum primal_objective;
    QuadNum dual_objective; ///< sum(B)
    QuadNum trace_product;  ///< tr(MB); zero certifies optimality of both

    bool optimal() const { return primal_feasible && dual_feasible && trace_product.is_zero() && primal_objective == dual_objective; }
};

inline bool theta_primal_feasible(const Graph & g, const ExactMatrix & m, const QuadNum & t)
{
    for (Vertex u = 0; u < g.order(); ++u) {
        if (m(u, u) != t - QuadNum(1))
            return false;
        for (Vertex v = 0; v < g.order(); ++v)
            if (g.adjacent(u, v) && m(u, v) != QuadNum(-1))
                return false;
    }
    return m.is_symmetric() && ldlt_psd(m).psd;
}

inline bool theta_dual_feasible(const Graph & g, const ExactMatrix & b)
{
    for (Vertex u = 0; u < g.order(); ++u)
        for (Vertex v = 0; v < g.order(); ++v)
            if (u != v && !g.adjacent(u, v) && !b(u, v).is_zero())
                return false;
    return b.trace() == QuadNum(1) && b.is_symmetric() && ldlt_psd(b).psd;
}

/// Closed-form optimal primal and dual solutions of the theta program for
/// the strict vector chromatic number of a primitive SRG:
/// M = (t-1) E_G and B = (A - tau I)/(n (-tau)).
inline ThetaReport theta_witnesses(const Graph & g)
{
    SrgParams p = require_primitive_srg(g);
    Spectrum s = spectrum(p);
    QuadNum k(static_cast<long>(p.k));
    QuadNum n(static_cast<long>(p.n));
    ThetaReport r;
    r.cert.value = QuadNum(1) - k / s.tau;
    r.cert.primal = cosine_matrix(g, p) * (r.cert.value - QuadNum(1));
    r.cert.dual = (ExactMatrix::adjacency(g) - ExactMatrix::identity(g.order()) * s.tau) * (QuadNum(1) / (n * -s.tau));
    r.primal_feasible = theta_primal_feasible(g, r.cert.primal, r.cert.value);
    r.dual_feasible = theta_dual_feasible(g, r.cert.dual);
    r.primal_objective = r.cert.primal(0, 0) + QuadNum(1);
    r.dual_objective = r.cert.dual.sum();
    r.trace_product = (r.cert.primal * r.cert.dual).trace();
    return r;
}

enum class Optimality { Certified, Unverified, NotApplicable };

inline std::string_view to_string(Optimality o)
{
    switch (o) {
    case Optimality::Certified: return "certified";
    case Optimality::Unverified: return "unverified";
    case Optimality::NotApplicable: return "not applicable";
    }
    return "";
}

struct AlphaBetaReport {
    ExactMatrix gram;              ///< I + alpha A + beta Abar
    bool feasible = false;         ///< gram is PSD
    std::optional<std::vector<QuadNum>> infeasibility_witness;
    std::size_t rank = 0;
    QuadNum value;                 ///< t = 1 - 1/alpha
    Optimality optimality = Optimality::NotApplicable;
    std::optional<QuadNum> trace_product; ///< tr(gram * (A - k alpha I)) when tested
};

/// Is I + alpha A_H + beta Abar_H the Gram matrix of an optimal strict
/// vector coloring of H? The feasibility tier is an exact PSD test. The
/// optimality tier applies to k-regular H only: the dual witness is
/// A - k alpha I (its value 1 - k/(k alpha) equals t), which certifies
/// optimality when it is PSD and the complementary-slackness trace
/// vanishes. Otherwise optimality is reported as unverified.
inline AlphaBetaReport alphabeta_check(const Graph & h, const QuadNum & alpha, const QuadNum & beta)
{
    if (alpha < QuadNum(-1) || alpha.sign() >= 0)
        throw Error(ErrorKind::InvalidArgument, "alpha must lie in [-1, 0)");
    AlphaBetaReport r;
    r.gram = ExactMatrix::from_relations(h, QuadNum(1), alpha, beta);
    r.value = QuadNum(1) - QuadNum(1) / alpha;
    PsdResult psd = ldlt_psd(r.gram);
    r.feasible = psd.psd;
    r.rank = psd.rank;
    r.infeasibility_witness = psd.witness;
    if (!r.feasible)
        return r;

    auto k = h.regular_degree();
    if (!k || *k == 0) {
        r.optimality = Optimality::NotApplicable;
        return r;
    }
    QuadNum shift = QuadNum(static_cast<long>(*k)) * alpha;
    ExactMatrix dual = ExactMatrix::adjacency(h) - ExactMatrix::identity(h.order()) * shift;
    r.trace_product = (r.gram * dual).trace();
    bool certified = r.trace_product->is_zero() && ldlt_psd(dual).psd;
    r.optimality = certified ? Optimality::Certified : Optimality::Unverified;
    return r;
}

} // namespace srg
