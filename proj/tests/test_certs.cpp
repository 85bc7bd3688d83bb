#include "oracles.hpp"

#include "srg/certs.hpp"
#include "srg/fixtures.hpp"
#include "srg/hom.hpp"

#include <gtest/gtest.h>

#include <random>
#include <set>

using namespace srg;

namespace {

QuadNum rat(long p, long q = 1) { return QuadNum(Rational(Integer(p), Integer(q))); }

std::set<QuadNum> distinct_entries(const ExactMatrix & m)
{
    std::set<QuadNum> out;
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m.size(); ++j)
            out.insert(m(i, j));
    return out;
}

ExactMatrix random_matrix(std::size_t n, std::mt19937_64 & rng, std::uint64_t d)
{
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 6);
    ExactMatrix m(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m(i, j) = QuadNum::make(Rational(Integer(num(rng)), Integer(den(rng))),
                Rational(Integer(num(rng)), Integer(den(rng))), d);
    return m;
}

VertexSet to_set(std::size_t n, std::uint32_t mask)
{
    VertexSet s(n);
    for (Vertex v = 0; v < n; ++v)
        if ((mask >> v) & 1u)
            s.set(v);
    return s;
}

const char * const srg_fixtures[] = {"petersen", "rook4", "shrikhande", "clebsch", "paley13", "c5", "paley9"};

} // namespace

TEST(CosineMatrix, Entries)
{
    EXPECT_EQ(distinct_entries(cosine_matrix(fixtures::petersen())), (std::set<QuadNum>{QuadNum(1), rat(-2, 3), rat(1, 6)}));
    EXPECT_EQ(distinct_entries(cosine_matrix(fixtures::rook4())), (std::set<QuadNum>{QuadNum(1), rat(-1, 3), rat(1, 9)}));
}

TEST(CosineMatrix, SixteenTenSixSix)
{
    // complement of the Clebsch graph is an SRG(16,10,6,6)
    Graph g = complement(fixtures::clebsch());
    ASSERT_EQ(*verify_srg(g).params, (SrgParams{16, 10, 6, 6}));
    EXPECT_EQ(distinct_entries(cosine_matrix(g)), (std::set<QuadNum>{QuadNum(1), rat(-1, 5), rat(1, 5)}));
}

TEST(Projector, FixturesSatisfyAllIdentities)
{
    for (const char * name : srg_fixtures) {
        auto r = check_projector_identities(fixtures::by_name(name));
        EXPECT_TRUE(r.adjacency_equation) << name;
        EXPECT_TRUE(r.annihilated) << name;
        EXPECT_TRUE(r.scaled_idempotent) << name;
        EXPECT_TRUE(r.psd) << name;
        EXPECT_FALSE(r.first_failure.has_value()) << name;
    }
}

TEST(Projector, EdgeDeletedPetersenFails)
{
    Graph g = fixtures::petersen();
    auto [u, v] = g.edges().front();
    g.remove_edge(u, v);
    auto r = check_projector_identities(g, SrgParams{10, 3, 0, 1});
    EXPECT_FALSE(r.adjacency_equation);
    ASSERT_TRUE(r.first_failure.has_value());
    EXPECT_FALSE(r.first_failure->value.is_zero());
}

TEST(Projector, Trace)
{
    // tr(M^T N) = sum(M o N) exactly
    std::mt19937_64 rng(17);
    for (int i = 0; i < 40; ++i) {
        std::uint64_t d = (i % 2) ? 0 : 7;
        ExactMatrix m = random_matrix(2 + rng() % 6, rng, d);
        ExactMatrix n = random_matrix(m.size(), rng, d);
        EXPECT_EQ((m.transpose() * n).trace(), hadamard(m, n).sum());
    }
}

TEST(Projector, TraceIdentityGivesAlpha)
{
    // sum(A o E_tau)/(nk) = tau m_tau / (nk) and the cosine matrix is the
    // scaled projector E = (n/m_tau) E_tau
    for (const char * name : srg_fixtures) {
        Graph g = fixtures::by_name(name);
        SrgParams p = *verify_srg(g).params;
        Spectrum s = spectrum(p);
        ExactMatrix e = cosine_matrix(g);
        ExactMatrix a = ExactMatrix::adjacency(g);
        QuadNum nk(p.n * p.k);
        QuadNum lhs = hadamard(a, e).sum() / nk;
        EXPECT_EQ(lhs, cosines(p).alpha) << name;
        EXPECT_EQ(e.trace(), QuadNum(p.n)) << name;
        EXPECT_EQ((a * e).trace(), s.tau * QuadNum(p.n)) << name;
    }
}

TEST(Pullback, Trivial)
{
    ExactMatrix e = cosine_matrix(fixtures::rook4());
    std::vector<Vertex> id(16);
    std::iota(id.begin(), id.end(), 0);
    EXPECT_EQ(pullback(e, id), e);
    std::vector<Vertex> constant(5, 3);
    ExactMatrix c = pullback(e, constant);
    EXPECT_EQ(distinct_entries(c), (std::set<QuadNum>{e(3, 3)}));
}

TEST(Pullback, RandomMapsStayPsd)
{
    ExactMatrix e = cosine_matrix(fixtures::rook4());
    std::mt19937_64 rng(23);
    for (int i = 0; i < 50; ++i) {
        std::size_t n = 1 + rng() % 20;
        std::vector<Vertex> phi(n);
        for (auto & x : phi)
            x = rng() % 16;
        EXPECT_TRUE(ldlt_psd(pullback(e, phi)).psd);
    }
}

TEST(HomMatrix, IdentityGivesZero)
{
    for (const char * name : {"petersen", "rook4"}) {
        Graph g = fixtures::by_name(name);
        std::vector<Vertex> id(g.order());
        std::iota(id.begin(), id.end(), 0);
        auto hm = hom_matrix(g, g, id);
        EXPECT_TRUE(hm.x.is_zero());
        EXPECT_TRUE(check_product_lemma(g, hm).ok);
    }
}

TEST(HomMatrix, IsomorphismGivesZero)
{
    Graph g = fixtures::rook4();
    // transpose the grid
    std::vector<Vertex> phi(16);
    for (Vertex r = 0; r < 4; ++r)
        for (Vertex c = 0; c < 4; ++c)
            phi[r * 4 + c] = c * 4 + r;
    EXPECT_TRUE(hom_matrix(g, g, phi).x.is_zero());
}

TEST(HomMatrix, ColoringEntries)
{
    Graph s = fixtures::shrikhande();
    Graph r = fixtures::rook4();
    HomSearchOptions options;
    options.mode = SearchMode::First;
    auto found = find_homs(s, r, options);
    ASSERT_EQ(found.homs.size(), 1u);
    auto hm = hom_matrix(s, r, found.homs.front().map);
    auto entries = distinct_entries(hm.x);
    std::set<QuadNum> allowed{QuadNum(0), QuadNum(1) - rat(1, 9), rat(-1, 3) - rat(1, 9)};
    for (const auto & x : entries)
        EXPECT_TRUE(allowed.count(x)) << x;
    EXPECT_TRUE(check_product_lemma(s, hm).ok);
}

TEST(HomMatrix, RejectsNonHomomorphism)
{
    Graph g = fixtures::petersen();
    std::vector<Vertex> phi(10);
    std::iota(phi.begin(), phi.end(), 0);
    auto [u, v] = g.edges().front();
    // collapse an edge onto one vertex
    phi[v] = phi[u];
    try {
        hom_matrix(g, g, phi);
        FAIL();
    }
    catch (const Error & e) {
        EXPECT_EQ(e.kind(), ErrorKind::NotHomomorphism);
    }
    try {
        hom_matrix(fixtures::petersen(), fixtures::rook4(), std::vector<Vertex>(10, 0));
        FAIL();
    }
    catch (const Error & e) {
        EXPECT_EQ(e.kind(), ErrorKind::CosineMismatch);
    }
}

TEST(ProductLemma, DenseAndStructuredAgree)
{
    // both checks on every homomorphism Shrikhande -> rook4 found in a prefix of the search
    Graph s = fixtures::shrikhande();
    Graph r = fixtures::rook4();
    StructuredProductCheck structured(s, r);
    HomSearchOptions options;
    options.mode = SearchMode::Enumerate;
    auto homs = find_homs(s, r, options);
    ASSERT_FALSE(homs.homs.empty());
    for (std::size_t i = 0; i < homs.homs.size(); i += 97) {
        const auto & phi = homs.homs[i].map;
        EXPECT_TRUE(check_product_lemma(s, hom_matrix(s, r, phi)).ok);
        EXPECT_FALSE(structured.check(phi).has_value());
    }
}

TEST(ProductLemma, DenseDetectsNonAutomorphism)
{
    // relabelling by a permutation that is not an automorphism breaks (A - tau I) E^phi = 0
    Graph g = fixtures::rook4();
    std::vector<Vertex> phi(16);
    std::iota(phi.begin(), phi.end(), 0);
    std::swap(phi[0], phi[5]); // 0 and 5 are non-adjacent in the grid
    ASSERT_TRUE(non_homomorphic_edge(g, g, phi).has_value());
    auto dense = check_product_lemma(g, pullback(cosine_matrix(g), phi) - cosine_matrix(g));
    EXPECT_FALSE(dense.ok);
    ASSERT_TRUE(dense.failure.has_value());
}

TEST(RatioBound, PetersenMaximumCocliques)
{
    Graph g = fixtures::petersen();
    auto all = oracle::cocliques_of_size(g, 4);
    ASSERT_FALSE(all.empty());
    for (auto mask : all) {
        auto r = ratio_witness(g, to_set(10, mask));
        EXPECT_TRUE(r.tight);
        EXPECT_TRUE(r.within_bound);
        EXPECT_TRUE(r.outside_condition);
        EXPECT_EQ(r.bound, QuadNum(4));
        EXPECT_TRUE(r.quadratic_form.is_zero());
    }
    auto three = oracle::cocliques_of_size(g, 3);
    auto r = ratio_witness(g, to_set(10, three.front()));
    EXPECT_FALSE(r.tight);
    EXPECT_TRUE(r.within_bound);
}

TEST(RatioBound, RookPermutationCoclique)
{
    Graph g = fixtures::rook4();
    VertexSet s(16);
    for (Vertex r : {0u, 1u, 2u, 3u})
        s.set(r * 4 + (r * 3 + 1) % 4);
    auto report = ratio_witness(g, s);
    EXPECT_TRUE(report.tight);
    EXPECT_TRUE(report.outside_condition);
}

TEST(RatioBound, Errors)
{
    Graph g = fixtures::petersen();
    VertexSet s(10);
    auto [u, v] = g.edges().front();
    s.set(u);
    s.set(v);
    EXPECT_THROW(ratio_witness(g, s), Error);
    Graph path(3, {{0, 1}, {1, 2}});
    VertexSet ends(3);
    ends.set(0);
    ends.set(2);
    try {
        ratio_witness(path, ends, QuadNum(-1));
        FAIL();
    }
    catch (const Error & e) {
        EXPECT_EQ(e.kind(), ErrorKind::NotRegular);
    }
}

TEST(Theta, Witnesses)
{
    EXPECT_EQ(theta_witnesses(fixtures::petersen()).cert.value, rat(5, 2));
    EXPECT_EQ(theta_witnesses(fixtures::rook4()).cert.value, QuadNum(4));
    for (const char * name : srg_fixtures) {
        auto r = theta_witnesses(fixtures::by_name(name));
        EXPECT_TRUE(r.primal_feasible) << name;
        EXPECT_TRUE(r.dual_feasible) << name;
        EXPECT_TRUE(r.trace_product.is_zero()) << name;
        EXPECT_EQ(r.dual_objective, r.cert.value) << name;
        EXPECT_EQ(r.primal_objective, r.cert.value) << name;
        EXPECT_TRUE(r.optimal()) << name;
    }
}

TEST(Ldlt, Examples)
{
    EXPECT_TRUE(ldlt_psd(ExactMatrix::identity(5)).psd);
    EXPECT_EQ(ldlt_psd(ExactMatrix::identity(5)).rank, 5u);
    ExactMatrix d(2);
    d(0, 0) = QuadNum(1);
    d(1, 1) = QuadNum(-1);
    auto r = ldlt_psd(d);
    EXPECT_FALSE(r.psd);
    ASSERT_TRUE(r.witness.has_value());
    EXPECT_EQ(*r.witness, (std::vector<QuadNum>{QuadNum(0), QuadNum(1)}));
    auto e = ldlt_psd(cosine_matrix(fixtures::petersen()));
    EXPECT_TRUE(e.psd);
    EXPECT_EQ(e.rank, 4u); // m_tau
    ExactMatrix asym(2);
    asym(0, 1) = QuadNum(1);
    EXPECT_THROW(ldlt_psd(asym), Error);
}

TEST(Ldlt, WitnessesAreNegative)
{
    // random symmetric matrices over Q and Q(sqrt 2): every NotPSD verdict
    // carries y with y^T M y < 0, every PSD verdict agrees with a Gram construction
    std::mt19937_64 rng(31);
    int negatives = 0;
    for (int i = 0; i < 300; ++i) {
        std::uint64_t d = (i % 3 == 0) ? 2 : 0;
        ExactMatrix m = random_matrix(1 + rng() % 6, rng, d);
        ExactMatrix sym = m + m.transpose();
        if (i % 4 == 0)
            sym = m.transpose() * m; // PSD by construction
        auto r = ldlt_psd(sym);
        if (i % 4 == 0) {
            EXPECT_TRUE(r.psd);
        }
        if (!r.psd) {
            ASSERT_TRUE(r.witness.has_value());
            EXPECT_LT(sym.quadratic_form(*r.witness).sign(), 0);
            ++negatives;
        }
    }
    EXPECT_GT(negatives, 50);
}

TEST(Ldlt, ZeroPivotWitness)
{
    // [[0,1],[1,0]] has a zero pivot with a nonzero off-diagonal entry
    ExactMatrix m(2);
    m(0, 1) = m(1, 0) = QuadNum(1);
    auto r = ldlt_psd(m);
    EXPECT_FALSE(r.psd);
    EXPECT_LT(m.quadratic_form(*r.witness).sign(), 0);
}

TEST(AlphaBeta, Examples)
{
    auto rook = alphabeta_check(fixtures::rook4(), rat(-1, 3), rat(1, 9));
    EXPECT_TRUE(rook.feasible);
    EXPECT_EQ(rook.optimality, Optimality::Certified);
    EXPECT_EQ(rook.value, QuadNum(4));

    Graph p3(3, {{0, 1}, {1, 2}});
    auto path = alphabeta_check(p3, QuadNum(-1), QuadNum(1));
    EXPECT_TRUE(path.feasible);
    EXPECT_EQ(path.rank, 1u);
    EXPECT_EQ(path.gram(0, 2), QuadNum(1));
    EXPECT_EQ(path.gram(0, 1), QuadNum(-1));
    EXPECT_EQ(path.optimality, Optimality::NotApplicable);

    auto bad = alphabeta_check(fixtures::rook4(), rat(-1, 3), rat(1, 2));
    EXPECT_FALSE(bad.feasible);
    ASSERT_TRUE(bad.infeasibility_witness.has_value());
    EXPECT_LT(bad.gram.quadratic_form(*bad.infeasibility_witness).sign(), 0);
}

TEST(AlphaBeta, SrgCosineMatricesAreCertified)
{
    for (const char * name : srg_fixtures) {
        Graph g = fixtures::by_name(name);
        Cosines c = cosines(*verify_srg(g).params);
        auto r = alphabeta_check(g, c.alpha, c.beta);
        EXPECT_TRUE(r.feasible) << name;
        EXPECT_EQ(r.optimality, Optimality::Certified) << name;
        EXPECT_EQ(r.value, hoffman_bound(*verify_srg(g).params)) << name;
    }
}
