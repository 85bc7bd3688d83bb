#pragma once

// Everything that follows from (n, k, lambda, mu) alone: feasibility,
// spectrum and multiplicities, complement parameters, cosines, and the
// Hoffman / ratio bounds.

#include "error.hpp"
#include "exactnum.hpp"

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

namespace srg {

struct SrgParams {
    std::int64_t n = 0;
    std::int64_t k = 0;
    std::int64_t lambda = 0;
    std::int64_t mu = 0;

    /// 1 <= mu < k; equivalently the graph and its complement are connected.
    bool primitive() const { return 1 <= mu && mu < k; }

    std::string to_string() const
    {
        return "(" + std::to_string(n) + "," + std::to_string(k) + "," + std::to_string(lambda) + ","
            + std::to_string(mu) + ")";
    }

    friend bool operator==(const SrgParams &, const SrgParams &) = default;
    friend std::ostream & operator<<(std::ostream & os, const SrgParams & p) { return os << p.to_string(); }
};

/// Eigenvalues other than k, with multiplicities. theta > tau.
struct Spectrum {
    QuadNum theta;
    QuadNum tau;
    std::int64_t m_theta = 0;
    std::int64_t m_tau = 0;
};

struct Cosines {
    QuadNum alpha; ///< adjacency cosine tau/k
    QuadNum beta;  ///< non-adjacency cosine (-tau-1)/(n-k-1)
};

struct FeasibilityReport {
    bool feasible = false;
    std::string violation; ///< empty when feasible
};

namespace detail {

inline std::uint64_t discriminant(const SrgParams & p)
{
    std::int64_t diff = p.lambda - p.mu;
    return static_cast<std::uint64_t>(diff * diff + 4 * (p.k - p.mu));
}

/// Roots (theta, tau) of x^2 + (mu - lambda) x + (mu - k) = 0.
inline std::pair<QuadNum, QuadNum> eigenvalue_roots(const SrgParams & p)
{
    Rational half_diff = Rational(Integer(static_cast<long>(p.lambda - p.mu)), Integer(2));
    std::uint64_t disc = discriminant(p);
    QuadNum theta = QuadNum::make(half_diff, Rational(Integer(1), Integer(2)), disc);
    QuadNum tau = QuadNum::make(half_diff, Rational(Integer(-1), Integer(2)), disc);
    return {theta, tau};
}

/// m_theta from 1 + m_theta + m_tau = n and k + m_theta theta + m_tau tau = 0.
inline QuadNum multiplicity_of_theta(const SrgParams & p, const QuadNum & theta, const QuadNum & tau)
{
    QuadNum numerator = QuadNum(-static_cast<long>(p.k)) - QuadNum(static_cast<long>(p.n - 1)) * tau;
    return numerator / (theta - tau);
}

} // namespace detail

inline FeasibilityReport check_feasible(const SrgParams & p)
{
    auto fail = [](std::string why) { return FeasibilityReport{false, std::move(why)}; };
    if (p.n < 2 || p.k < 1 || p.k >= p.n)
        return fail("need n > k >= 1");
    if (p.lambda < 0 || p.mu < 0)
        return fail("lambda and mu must be non-negative");
    if (p.lambda > p.k - 1)
        return fail("lambda exceeds k-1");
    if (p.mu > p.k)
        return fail("mu exceeds k");
    // the complement has lambda' = n-2k+mu-2 and mu' = n-2k+lambda
    if (p.n - 2 * p.k + p.mu - 2 < 0 || p.n - 2 * p.k + p.lambda < 0)
        return fail("complement parameters would be negative");
    std::int64_t lhs = p.k * (p.k - p.lambda - 1);
    std::int64_t rhs = (p.n - p.k - 1) * p.mu;
    if (lhs != rhs)
        return fail("edge count identity k(k-lambda-1) = (n-k-1)mu fails: " + std::to_string(lhs)
            + " != " + std::to_string(rhs));
    if (detail::discriminant(p) == 0)
        return fail("repeated eigenvalue: (lambda-mu)^2 + 4(k-mu) = 0");

    auto [theta, tau] = detail::eigenvalue_roots(p);
    QuadNum m_theta = detail::multiplicity_of_theta(p, theta, tau);
    QuadNum m_tau = QuadNum(static_cast<long>(p.n - 1)) - m_theta;
    if (!m_theta.is_integer() || !m_tau.is_integer())
        return fail("multiplicities are not integers: m_theta = " + m_theta.to_string() + ", m_tau = " + m_tau.to_string());
    if (m_theta.sign() <= 0 || m_tau.sign() <= 0)
        return fail("multiplicities are not positive: m_theta = " + m_theta.to_string() + ", m_tau = " + m_tau.to_string());
    if (!theta.is_rational() && m_theta != m_tau)
        return fail("irrational eigenvalues require m_theta = m_tau");
    return {true, {}};
}

inline void require_feasible(const SrgParams & p)
{
    auto report = check_feasible(p);
    if (!report.feasible)
        throw Error(ErrorKind::InfeasibleParams, p.to_string() + ": " + report.violation);
}

inline Spectrum spectrum(const SrgParams & p)
{
    require_feasible(p);
    auto [theta, tau] = detail::eigenvalue_roots(p);
    QuadNum m_theta = detail::multiplicity_of_theta(p, theta, tau);
    Spectrum s;
    s.theta = theta;
    s.tau = tau;
    s.m_theta = m_theta.rational_part().num().get_si();
    s.m_tau = p.n - 1 - s.m_theta;
    return s;
}

struct ComplementParams {
    SrgParams params;
    Spectrum spectrum;
};

/// Parameters of the complement, with eigenvalues theta' = -tau-1 and
/// tau' = -theta-1 (multiplicities swap accordingly).
inline ComplementParams complement_params(const SrgParams & p)
{
    Spectrum s = spectrum(p);
    ComplementParams c;
    c.params = SrgParams{p.n, p.n - p.k - 1, p.n - 2 * p.k - 2 + p.mu, p.n - 2 * p.k + p.lambda};
    require_feasible(c.params);
    c.spectrum.theta = -s.tau - QuadNum(1);
    c.spectrum.tau = -s.theta - QuadNum(1);
    c.spectrum.m_theta = s.m_tau;
    c.spectrum.m_tau = s.m_theta;
    return c;
}

inline Cosines cosines(const SrgParams & p)
{
    if (!p.primitive())
        throw Error(ErrorKind::ImprimitiveParams, p.to_string() + " is not primitive");
    Spectrum s = spectrum(p);
    Cosines c;
    c.alpha = s.tau / QuadNum(static_cast<long>(p.k));
    c.beta = (-s.tau - QuadNum(1)) / QuadNum(static_cast<long>(p.n - p.k - 1));
    return c;
}

/// 1 - k/tau: an upper bound on the clique number and a lower bound on the
/// chromatic number. Non-integer values rule out both equalities.
inline QuadNum hoffman_bound(const SrgParams & p)
{
    Spectrum s = spectrum(p);
    return QuadNum(1) - QuadNum(static_cast<long>(p.k)) / s.tau;
}

/// n tau / (tau - k), the maximum possible coclique size.
inline QuadNum ratio_bound(const SrgParams & p)
{
    Spectrum s = spectrum(p);
    return QuadNum(static_cast<long>(p.n)) * s.tau / (s.tau - QuadNum(static_cast<long>(p.k)));
}

/// Integer value of an exact bound, if it is one.
inline std::optional<std::int64_t> integer_value(const QuadNum & q)
{
    if (!q.is_integer())
        return std::nullopt;
    return q.rational_part().num().get_si();
}

} // namespace srg
