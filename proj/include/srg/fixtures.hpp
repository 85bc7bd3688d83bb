#pragma once

// Deterministic constructions of the small strongly regular graphs used
// throughout the tests, the acceptance suite and the CLI.

#include "error.hpp"
#include "graph.hpp"

#include <cctype>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace srg::fixtures {

/// Kneser graph K(5,2): 2-subsets of {0..4}, adjacent when disjoint.
inline Graph petersen()
{
    std::vector<std::pair<int, int>> pairs;
    for (int a = 0; a < 5; ++a)
        for (int b = a + 1; b < 5; ++b)
            pairs.emplace_back(a, b);
    Graph g(pairs.size());
    for (std::size_t i = 0; i < pairs.size(); ++i)
        for (std::size_t j = i + 1; j < pairs.size(); ++j) {
            auto [a, b] = pairs[i];
            auto [c, d] = pairs[j];
            if (a != c && a != d && b != c && b != d)
                g.add_edge(i, j);
        }
    return g;
}

/// K_m box K_m; vertex r*m + c is the cell in row r, column c.
inline Graph rook(std::size_t m)
{
    Graph g(m * m);
    for (std::size_t u = 0; u < m * m; ++u)
        for (std::size_t v = u + 1; v < m * m; ++v)
            if (u / m == v / m || u % m == v % m)
                g.add_edge(u, v);
    return g;
}

inline Graph rook4() { return rook(4); }

/// Cayley graph on Z4 x Z4 with connection set {±(1,0), ±(0,1), ±(1,1)};
/// vertex 4x + y is (x, y).
inline Graph shrikhande()
{
    Graph g(16);
    auto connected = [](int dx, int dy) {
        dx = (dx + 4) % 4;
        dy = (dy + 4) % 4;
        return (dx == 1 && dy == 0) || (dx == 3 && dy == 0) || (dx == 0 && dy == 1) || (dx == 0 && dy == 3)
            || (dx == 1 && dy == 1) || (dx == 3 && dy == 3);
    };
    for (int u = 0; u < 16; ++u)
        for (int v = u + 1; v < 16; ++v)
            if (connected(v / 4 - u / 4, v % 4 - u % 4))
                g.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
    return g;
}

/// Folded 5-cube: F_2^4, adjacent when the difference is a unit vector or
/// the all-ones vector. SRG(16,5,0,2).
inline Graph clebsch()
{
    Graph g(16);
    for (unsigned u = 0; u < 16; ++u)
        for (unsigned v = u + 1; v < 16; ++v) {
            unsigned x = u ^ v;
            if (x == 15 || (x & (x - 1)) == 0)
                g.add_edge(u, v);
        }
    return g;
}

inline Graph cycle(std::size_t n)
{
    Graph g(n);
    for (std::size_t i = 0; i < n; ++i)
        g.add_edge(i, (i + 1) % n);
    return g;
}

inline Graph c5() { return cycle(5); }

namespace detail {

/// GF(p^e) with elements encoded as base-p digit vectors of polynomials
/// reduced modulo a monic irreducible of degree e.
class FiniteField {
public:
    FiniteField(std::uint32_t p, std::uint32_t e) : p_(p), e_(e)
    {
        q_ = 1;
        for (std::uint32_t i = 0; i < e; ++i)
            q_ *= p;
        modulus_ = find_irreducible();
    }

    std::uint32_t order() const { return q_; }

    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const
    {
        auto x = digits(a), y = digits(b);
        for (std::uint32_t i = 0; i < e_; ++i)
            x[i] = (x[i] + p_ - y[i]) % p_;
        return encode(x);
    }

    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const
    {
        auto x = digits(a), y = digits(b);
        std::vector<std::uint32_t> prod(2 * e_, 0);
        for (std::uint32_t i = 0; i < e_; ++i)
            for (std::uint32_t j = 0; j < e_; ++j)
                prod[i + j] = (prod[i + j] + x[i] * y[j]) % p_;
        reduce(prod, modulus_);
        prod.resize(e_);
        return encode(prod);
    }

private:
    std::vector<std::uint32_t> digits(std::uint32_t a) const
    {
        std::vector<std::uint32_t> d(e_);
        for (std::uint32_t i = 0; i < e_; ++i) {
            d[i] = a % p_;
            a /= p_;
        }
        return d;
    }

    std::uint32_t encode(const std::vector<std::uint32_t> & d) const
    {
        std::uint32_t a = 0;
        for (std::uint32_t i = e_; i-- > 0;)
            a = a * p_ + d[i];
        return a;
    }

    /// poly mod monic divisor, in place; coefficient i is the x^i term
    void reduce(std::vector<std::uint32_t> & poly, const std::vector<std::uint32_t> & divisor) const
    {
        std::size_t deg = divisor.size() - 1;
        for (std::size_t i = poly.size(); i-- > deg;) {
            std::uint32_t c = poly[i];
            if (c == 0)
                continue;
            for (std::size_t j = 0; j <= deg; ++j)
                poly[i - deg + j] = (poly[i - deg + j] + p_ * p_ - c * divisor[j] % p_) % p_;
        }
    }

    bool divides(const std::vector<std::uint32_t> & divisor, std::vector<std::uint32_t> poly) const
    {
        reduce(poly, divisor);
        for (std::size_t i = 0; i + 1 < divisor.size(); ++i)
            if (poly[i] != 0)
                return false;
        return true;
    }

    std::vector<std::uint32_t> find_irreducible() const
    {
        if (e_ == 1)
            return {0, 1};
        std::uint32_t count = q_; // candidates x^e + (lower terms)
        for (std::uint32_t lower = 0; lower < count; ++lower) {
            auto poly = digits(lower);
            poly.push_back(1);
            bool irreducible = true;
            for (std::uint32_t d = 1; d <= e_ / 2 && irreducible; ++d) {
                std::uint32_t pd = 1;
                for (std::uint32_t i = 0; i < d; ++i)
                    pd *= p_;
                for (std::uint32_t f = 0; f < pd && irreducible; ++f) {
                    std::vector<std::uint32_t> factor(d + 1, 0);
                    std::uint32_t x = f;
                    for (std::uint32_t i = 0; i < d; ++i) {
                        factor[i] = x % p_;
                        x /= p_;
                    }
                    factor[d] = 1;
                    if (divides(factor, poly))
                        irreducible = false;
                }
            }
            if (irreducible)
                return poly;
        }
        throw Error(ErrorKind::InvalidArgument, "no irreducible polynomial found");
    }

    std::uint32_t p_, e_, q_ = 1;
    std::vector<std::uint32_t> modulus_;
};

inline bool prime_power(std::uint32_t q, std::uint32_t & p, std::uint32_t & e)
{
    if (q < 2)
        return false;
    for (p = 2; p * p <= q; ++p)
        if (q % p == 0)
            break;
    if (q % p != 0)
        p = q;
    e = 0;
    while (q % p == 0) {
        q /= p;
        ++e;
    }
    return q == 1;
}

} // namespace detail

/// Paley graph on GF(q), q a prime power congruent to 1 mod 4: adjacent
/// when the difference is a non-zero square.
inline Graph paley(std::uint32_t q)
{
    std::uint32_t p = 0, e = 0;
    if (!detail::prime_power(q, p, e) || q % 4 != 1)
        throw Error(ErrorKind::UnknownFixture, "paley(" + std::to_string(q) + ") needs a prime power q = 1 mod 4");
    if (q > max_graph_order)
        throw Error(ErrorKind::UnsupportedSize, "paley order too large");
    detail::FiniteField field(p, e);
    std::vector<bool> square(q, false);
    for (std::uint32_t x = 1; x < q; ++x)
        square[field.mul(x, x)] = true;
    Graph g(q);
    for (std::uint32_t u = 0; u < q; ++u)
        for (std::uint32_t v = u + 1; v < q; ++v)
            if (square[field.sub(v, u)])
                g.add_edge(u, v);
    return g;
}

/// Looks up a fixture by name: petersen, rook4, shrikhande, clebsch, c5,
/// paley(q) or paleyQ.
inline Graph by_name(std::string_view name)
{
    if (name == "petersen")
        return petersen();
    if (name == "rook4")
        return rook4();
    if (name == "shrikhande")
        return shrikhande();
    if (name == "clebsch")
        return clebsch();
    if (name == "c5")
        return c5();
    if (name.starts_with("cycle")) {
        std::string_view rest = name.substr(5);
        if (!rest.empty() && rest.size() < 5
            && std::all_of(rest.begin(), rest.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
            return cycle(std::stoul(std::string(rest)));
    }
    if (name.starts_with("paley")) {
        std::string_view rest = name.substr(5);
        if (rest.starts_with("(") && rest.ends_with(")"))
            rest = rest.substr(1, rest.size() - 2);
        if (!rest.empty() && rest.size() < 7
            && std::all_of(rest.begin(), rest.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
            return paley(static_cast<std::uint32_t>(std::stoul(std::string(rest))));
    }
    throw Error(ErrorKind::UnknownFixture, "unknown fixture '" + std::string(name) + "'");
}

} // namespace srg::fixtures
