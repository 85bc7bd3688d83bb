#pragma once

// Dense square matrices over Q(sqrt d) and an exact positive-semidefiniteness
// test by symmetric LDL^T elimination.

#include "error.hpp"
#include "exactnum.hpp"
#include "graph.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace srg {

inline constexpr std::size_t max_certificate_order = 256;

class ExactMatrix {
public:
    ExactMatrix() = default;

    explicit ExactMatrix(std::size_t n, const QuadNum & fill = QuadNum()) : n_(n), data_(n * n, fill)
    {
        if (n > max_certificate_order)
            throw Error(ErrorKind::UnsupportedSize,
                "exact certificates are limited to " + std::to_string(max_certificate_order) + " rows");
    }

    static ExactMatrix identity(std::size_t n)
    {
        ExactMatrix m(n);
        for (std::size_t i = 0; i < n; ++i)
            m(i, i) = QuadNum(1);
        return m;
    }

    static ExactMatrix adjacency(const Graph & g)
    {
        ExactMatrix m(g.order());
        for (auto [u, v] : g.edges()) {
            m(u, v) = QuadNum(1);
            m(v, u) = QuadNum(1);
        }
        return m;
    }

    /// diag on the diagonal, on_edge on edges of g, off_edge on distinct
    /// non-adjacent pairs.
    static ExactMatrix from_relations(const Graph & g, const QuadNum & diag, const QuadNum & on_edge, const QuadNum & off_edge)
    {
        ExactMatrix m(g.order());
        for (std::size_t u = 0; u < g.order(); ++u)
            for (std::size_t v = 0; v < g.order(); ++v)
                m(u, v) = u == v ? diag : (g.adjacent(u, v) ? on_edge : off_edge);
        return m;
    }

    std::size_t size() const { return n_; }

    QuadNum & operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
    const QuadNum & operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

    bool is_symmetric() const
    {
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = i + 1; j < n_; ++j)
                if ((*this)(i, j) != (*this)(j, i))
                    return false;
        return true;
    }

    /// First (row-major) entry that is not zero.
    std::optional<std::pair<std::size_t, std::size_t>> first_nonzero() const
    {
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j)
                if (!(*this)(i, j).is_zero())
                    return std::pair{i, j};
        return std::nullopt;
    }

    bool is_zero() const { return !first_nonzero().has_value(); }

    QuadNum trace() const
    {
        QuadNum t;
        for (std::size_t i = 0; i < n_; ++i)
            t += (*this)(i, i);
        return t;
    }

    QuadNum sum() const
    {
        QuadNum s;
        for (const auto & x : data_)
            s += x;
        return s;
    }

    ExactMatrix transpose() const
    {
        ExactMatrix t(n_);
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j)
                t(j, i) = (*this)(i, j);
        return t;
    }

    ExactMatrix & operator+=(const ExactMatrix & o)
    {
        check_same(o);
        for (std::size_t i = 0; i < data_.size(); ++i)
            data_[i] += o.data_[i];
        return *this;
    }

    ExactMatrix & operator-=(const ExactMatrix & o)
    {
        check_same(o);
        for (std::size_t i = 0; i < data_.size(); ++i)
            data_[i] -= o.data_[i];
        return *this;
    }

    ExactMatrix & operator*=(const QuadNum & s)
    {
        for (auto & x : data_)
            x *= s;
        return *this;
    }

    friend ExactMatrix operator+(ExactMatrix a, const ExactMatrix & b) { return a += b; }
    friend ExactMatrix operator-(ExactMatrix a, const ExactMatrix & b) { return a -= b; }
    friend ExactMatrix operator*(ExactMatrix a, const QuadNum & s) { return a *= s; }
    friend ExactMatrix operator*(const QuadNum & s, ExactMatrix a) { return a *= s; }

    friend ExactMatrix operator*(const ExactMatrix & a, const ExactMatrix & b)
    {
        a.check_same(b);
        std::size_t n = a.n_;
        ExactMatrix c(n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t l = 0; l < n; ++l) {
                const QuadNum & x = a(i, l);
                if (x.is_zero())
                    continue;
                for (std::size_t j = 0; j < n; ++j)
                    if (!b(l, j).is_zero())
                        c(i, j) += x * b(l, j);
            }
        return c;
    }

    /// Entrywise (Schur) product.
    friend ExactMatrix hadamard(const ExactMatrix & a, const ExactMatrix & b)
    {
        a.check_same(b);
        ExactMatrix c(a.n_);
        for (std::size_t i = 0; i < a.data_.size(); ++i)
            c.data_[i] = a.data_[i] * b.data_[i];
        return c;
    }

    friend bool operator==(const ExactMatrix &, const ExactMatrix &) = default;

    /// Quadratic form y^T M y.
    QuadNum quadratic_form(std::span<const QuadNum> y) const
    {
        QuadNum total;
        for (std::size_t i = 0; i < n_; ++i) {
            if (y[i].is_zero())
                continue;
            QuadNum row;
            for (std::size_t j = 0; j < n_; ++j)
                if (!y[j].is_zero())
                    row += (*this)(i, j) * y[j];
            total += y[i] * row;
        }
        return total;
    }

private:
    void check_same(const ExactMatrix & o) const
    {
        if (o.n_ != n_)
            throw Error(ErrorKind::InvalidArgument, "matrix dimension mismatch");
    }

    std::size_t n_ = 0;
    std::vector<QuadNum> data_;
};

struct PsdResult {
    bool psd = false;
    /// For non-PSD input: y with y^T M y < 0.
    std::optional<std::vector<QuadNum>> witness;
    /// Number of strictly positive pivots, i.e. the rank when PSD.
    std::size_t rank = 0;
};

/// Exact PSD test by symmetric Gaussian elimination without pivoting
/// across rows: each diagonal pivot must be non-negative, and a zero pivot
/// requires its whole remaining row to vanish. On failure a witness vector
/// in original coordinates is recovered from the stored multipliers.
inline PsdResult ldlt_psd(const ExactMatrix & m)
{
    if (!m.is_symmetric())
        throw Error(ErrorKind::AsymmetricInput, "ldlt_psd needs a symmetric matrix");
    std::size_t n = m.size();
    ExactMatrix s = m;
    // multipliers[p] lists (j, l_jp) for eliminated pivot p
    std::vector<std::vector<std::pair<std::size_t, QuadNum>>> multipliers(n);
    std::vector<std::size_t> eliminated;

    // maps a vector z in the current Schur-complement basis back to y with
    // y^T M y = z^T S z: apply E_p^T for eliminated pivots, newest first
    auto lift = [&](std::vector<QuadNum> z) {
        for (auto it = eliminated.rbegin(); it != eliminated.rend(); ++it) {
            std::size_t p = *it;
            QuadNum acc;
            for (const auto & [j, l] : multipliers[p])
                if (!z[j].is_zero())
                    acc += l * z[j];
            z[p] -= acc;
        }
        return z;
    };

    PsdResult result;
    for (std::size_t p = 0; p < n; ++p) {
        int sign = s(p, p).sign();
        if (sign < 0) {
            std::vector<QuadNum> z(n);
            z[p] = QuadNum(1);
            result.witness = lift(std::move(z));
            return result;
        }
        if (sign == 0) {
            for (std::size_t j = p + 1; j < n; ++j) {
                if (s(p, j).is_zero())
                    continue;
                // z = t e_p + e_j gives 2 t s_pj + s_jj; pick t to make it -1
                std::vector<QuadNum> z(n);
                z[p] = -(s(j, j) + QuadNum(1)) / (QuadNum(2) * s(p, j));
                z[j] = QuadNum(1);
                result.witness = lift(std::move(z));
                return result;
            }
            continue;
        }
        ++result.rank;
        eliminated.push_back(p);
        const QuadNum pivot = s(p, p);
        for (std::size_t j = p + 1; j < n; ++j) {
            if (s(j, p).is_zero())
                continue;
            QuadNum l = s(j, p) / pivot;
            multipliers[p].emplace_back(j, l);
            for (std::size_t c = p + 1; c < n; ++c)
                if (!s(p, c).is_zero())
                    s(j, c) -= l * s(p, c);
        }
        for (std::size_t j = p + 1; j < n; ++j)
            s(j, p) = s(p, j) = QuadNum();
    }
    result.psd = true;
    return result;
}

} // namespace srg
