#include "oracles.hpp"

#include "srg/fixtures.hpp"
#include "srg/params.hpp"
#include "srg/verify.hpp"

#include <Eigen/Dense>
#include <gtest/gtest.h>

#include <cmath>

using namespace srg;

namespace {

QuadNum rat(long p, long q = 1) { return QuadNum(Rational(Integer(p), Integer(q))); }
QuadNum root(long a, long b, std::uint64_t d, long den)
{
    return QuadNum::make(Rational(Integer(a), Integer(den)), Rational(Integer(b), Integer(den)), d);
}

std::vector<SrgParams> feasible_sets(std::int64_t max_n)
{
    std::vector<SrgParams> out;
    for (std::int64_t n = 5; n <= max_n; ++n)
        for (std::int64_t k = 2; k < n - 1; ++k)
            for (std::int64_t l = 0; l < k; ++l)
                for (std::int64_t m = 1; m < k; ++m) {
                    SrgParams p{n, k, l, m};
                    if (check_feasible(p).feasible)
                        out.push_back(p);
                }
    return out;
}

/// Distinct eigenvalues (rounded) with multiplicities, from a floating
/// symmetric eigensolver.
std::vector<std::pair<double, int>> float_spectrum(const Graph & g)
{
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(g.order(), g.order());
    for (auto [u, v] : g.edges())
        a(u, v) = a(v, u) = 1;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a);
    std::vector<std::pair<double, int>> out;
    for (int i = 0; i < solver.eigenvalues().size(); ++i) {
        double x = solver.eigenvalues()(i);
        if (!out.empty() && std::abs(out.back().first - x) < 1e-8)
            ++out.back().second;
        else
            out.emplace_back(x, 1);
    }
    return out;
}

} // namespace

TEST(Feasibility, Examples)
{
    EXPECT_TRUE(check_feasible({10, 3, 0, 1}).feasible);
    EXPECT_TRUE(check_feasible({16, 10, 6, 6}).feasible);
    auto bad = check_feasible({10, 3, 1, 1});
    EXPECT_FALSE(bad.feasible);
    EXPECT_FALSE(bad.violation.empty());
    try {
        spectrum({10, 3, 1, 1});
        FAIL();
    }
    catch (const Error & e) {
        EXPECT_EQ(e.kind(), ErrorKind::InfeasibleParams);
    }
}

TEST(Feasibility, NonIntegralMultiplicity)
{
    // edge identity holds but multiplicities are not integers
    SrgParams p{15, 7, 3, 3};
    ASSERT_EQ(p.k * (p.k - p.lambda - 1), (p.n - p.k - 1) * p.mu);
    EXPECT_FALSE(check_feasible(p).feasible);
}

TEST(Spectrum, Examples)
{
    Spectrum s = spectrum({10, 3, 0, 1});
    EXPECT_EQ(s.theta, QuadNum(1));
    EXPECT_EQ(s.tau, QuadNum(-2));
    EXPECT_EQ(s.m_theta, 5);
    EXPECT_EQ(s.m_tau, 4);

    EXPECT_EQ(spectrum({16, 10, 6, 6}).tau, QuadNum(-2));

    Spectrum c5 = spectrum({5, 2, 0, 1});
    EXPECT_EQ(c5.theta, root(-1, 1, 5, 2));
    EXPECT_EQ(c5.tau, root(-1, -1, 5, 2));
    EXPECT_EQ(c5.m_theta, 2);
    EXPECT_EQ(c5.m_tau, 2);
}

TEST(Spectrum, MatchesFloatingEigensolver)
{
    for (const char * name : {"petersen", "rook4", "shrikhande", "clebsch", "c5", "paley13", "paley9", "paley17", "paley25"}) {
        Graph g = fixtures::by_name(name);
        SrgParams p = *verify_srg(g).params;
        Spectrum s = spectrum(p);
        auto eig = float_spectrum(g);
        ASSERT_EQ(eig.size(), 3u) << name;
        EXPECT_NEAR(eig[0].first, s.tau.approx(), 1e-9) << name;
        EXPECT_EQ(eig[0].second, s.m_tau) << name;
        EXPECT_NEAR(eig[1].first, s.theta.approx(), 1e-9) << name;
        EXPECT_EQ(eig[1].second, s.m_theta) << name;
        EXPECT_NEAR(eig[2].first, static_cast<double>(p.k), 1e-9) << name;
        EXPECT_EQ(eig[2].second, 1) << name;
    }
}

TEST(Spectrum, RootsOfTheQuadratic)
{
    for (const auto & p : feasible_sets(60)) {
        Spectrum s = spectrum(p);
        for (const QuadNum & x : {s.theta, s.tau})
            EXPECT_TRUE((x * x + QuadNum(p.mu - p.lambda) * x + QuadNum(p.mu - p.k)).is_zero()) << p;
        EXPECT_GT(QuadNum(p.k), s.theta) << p;
        EXPECT_GT(s.theta, QuadNum(0)) << p;
        EXPECT_LT(s.tau, QuadNum(0)) << p;
        // trace of A and of A^2
        EXPECT_EQ(QuadNum(p.k) + QuadNum(s.m_theta) * s.theta + QuadNum(s.m_tau) * s.tau, QuadNum(0)) << p;
        EXPECT_EQ(QuadNum(p.k * p.k) + QuadNum(s.m_theta) * s.theta * s.theta + QuadNum(s.m_tau) * s.tau * s.tau,
            QuadNum(p.n * p.k))
            << p;
    }
}

TEST(Complement, Examples)
{
    auto c = complement_params({10, 3, 0, 1});
    EXPECT_EQ(c.params, (SrgParams{10, 6, 3, 4}));
    EXPECT_EQ(c.spectrum.theta, QuadNum(1));
    EXPECT_EQ(c.spectrum.tau, QuadNum(-2));
    EXPECT_EQ(*verify_srg(complement(fixtures::petersen())).params, c.params);
    EXPECT_EQ(complement_params({5, 2, 0, 1}).params, (SrgParams{5, 2, 0, 1}));
}

TEST(Complement, Involution)
{
    auto sets = feasible_sets(60);
    ASSERT_GE(sets.size(), 50u);
    for (const auto & p : sets) {
        auto once = complement_params(p);
        EXPECT_EQ(complement_params(once.params).params, p);
        Spectrum s = spectrum(p);
        EXPECT_EQ(once.spectrum.theta, -s.tau - QuadNum(1));
        EXPECT_EQ(once.spectrum.tau, -s.theta - QuadNum(1));
    }
}

TEST(Complement, MatchesBruteForce)
{
    for (const char * name : {"petersen", "rook4", "shrikhande", "clebsch", "paley13"}) {
        Graph g = fixtures::by_name(name);
        SrgParams p = *verify_srg(g).params;
        EXPECT_EQ(*verify_srg(complement(g)).params, complement_params(p).params) << name;
    }
}

TEST(Cosines, PaperSets)
{
    for (SrgParams p : {SrgParams{16, 10, 6, 6}, SrgParams{26, 15, 8, 9}, SrgParams{36, 20, 10, 12}}) {
        Cosines c = cosines(p);
        EXPECT_EQ(c.alpha, rat(-1, 5)) << p;
        EXPECT_EQ(c.beta, rat(1, 5)) << p;
    }
}

TEST(Cosines, RangesAndErrors)
{
    for (const auto & p : feasible_sets(60)) {
        Cosines c = cosines(p);
        EXPECT_GT(c.alpha, QuadNum(-1)) << p;
        EXPECT_LT(c.alpha, QuadNum(0)) << p;
        EXPECT_GT(c.beta, QuadNum(0)) << p;
        EXPECT_LT(c.beta, QuadNum(1)) << p;
    }
    try {
        cosines({6, 3, 0, 3});
        FAIL();
    }
    catch (const Error & e) {
        EXPECT_EQ(e.kind(), ErrorKind::ImprimitiveParams);
    }
}

TEST(Bounds, Examples)
{
    EXPECT_EQ(hoffman_bound({10, 3, 0, 1}), rat(5, 2));
    EXPECT_FALSE(hoffman_bound({10, 3, 0, 1}).is_integer());
    EXPECT_EQ(hoffman_bound({49, 12, 5, 2}), QuadNum(7));
    EXPECT_EQ(hoffman_bound({16, 6, 2, 2}), QuadNum(4));
    EXPECT_EQ(ratio_bound({10, 3, 0, 1}), QuadNum(4));
    EXPECT_EQ(ratio_bound({16, 6, 2, 2}), QuadNum(4));
    // C5: n tau / (tau - k) simplifies to sqrt 5, above alpha(C5) = 2
    QuadNum c5 = ratio_bound({5, 2, 0, 1});
    EXPECT_EQ(c5, root(0, 1, 5, 1));
    EXPECT_GE(c5, QuadNum(static_cast<long>(oracle::independence_number(fixtures::c5()))));
    EXPECT_EQ(oracle::independence_number(fixtures::petersen()), 4u);
    EXPECT_EQ(oracle::independence_number(fixtures::rook4()), 4u);
}

TEST(Bounds, HoffmanIsOrderOverRatio)
{
    // chi >= n / alpha and alpha <= ratio bound, with equality in the bounds
    for (const auto & p : feasible_sets(60))
        EXPECT_EQ(hoffman_bound(p), QuadNum(p.n) / ratio_bound(p)) << p;
}

TEST(Bounds, IntegerValue)
{
    EXPECT_EQ(integer_value(QuadNum(7)), 7);
    EXPECT_FALSE(integer_value(rat(5, 2)).has_value());
    EXPECT_FALSE(integer_value(root(0, 1, 5, 1)).has_value());
}

TEST(Feasibility, ComplementMustBeValid)
{
    // identity and multiplicities pass, but the complement would have lambda = -1
    SrgParams p{21, 16, 12, 12};
    ASSERT_EQ(p.k * (p.k - p.lambda - 1), (p.n - p.k - 1) * p.mu);
    EXPECT_FALSE(check_feasible(p).feasible);
}
