#include "cusp/exactnum/linalg.hpp"

#include <stdexcept>

namespace cusp::exactnum {

RationalMatrix identity_matrix(std::size_t n)
{
    RationalMatrix m(n, std::vector<Rational>(n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i) {
        m[i][i] = 1;
    }
    return m;
}

RationalMatrix to_rational(const IntMatrix& m)
{
    RationalMatrix r;
    r.reserve(m.size());
    for (const auto& row : m) {
        r.emplace_back(row.begin(), row.end());
    }
    return r;
}

RationalMatrix multiply(const RationalMatrix& a, const RationalMatrix& b)
{
    if (a.empty()) {
        return {};
    }
    const std::size_t inner = b.size();
    const std::size_t cols = b.empty() ? 0 : b[0].size();
    RationalMatrix r(a.size(), std::vector<Rational>(cols, Rational(0)));
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t k = 0; k < inner; ++k) {
            if (a[i][k] == 0) {
                continue;
            }
            for (std::size_t j = 0; j < cols; ++j) {
                r[i][j] += a[i][k] * b[k][j];
            }
        }
    }
    return r;
}

std::vector<Rational> multiply(const RationalMatrix& a, const std::vector<Rational>& v)
{
    std::vector<Rational> r(a.size(), Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < v.size(); ++j) {
            r[i] += a[i][j] * v[j];
        }
    }
    return r;
}

RationalMatrix transpose(const RationalMatrix& a)
{
    if (a.empty()) {
        return {};
    }
    RationalMatrix t(a[0].size(), std::vector<Rational>(a.size()));
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < a[i].size(); ++j) {
            t[j][i] = a[i][j];
        }
    }
    return t;
}

namespace {

// Row-reduces in place; returns pivot columns.
std::vector<std::size_t> row_reduce(RationalMatrix& m)
{
    std::vector<std::size_t> pivots;
    if (m.empty()) {
        return pivots;
    }
    const std::size_t rows = m.size();
    const std::size_t cols = m[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m[p][c] == 0) {
            ++p;
        }
        if (p == rows) {
            continue;
        }
        std::swap(m[p], m[r]);
        const Rational inv = 1 / m[r][c];
        for (auto& x : m[r]) {
            x *= inv;
        }
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) {
                continue;
            }
            const Rational f = m[i][c];
            for (std::size_t j = c; j < cols; ++j) {
                m[i][j] -= f * m[r][j];
            }
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

} // namespace

std::size_t rank(RationalMatrix m)
{
    return row_reduce(m).size();
}

Rational determinant(RationalMatrix m)
{
    const std::size_t n = m.size();
    Rational det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m[p][c] == 0) {
            ++p;
        }
        if (p == n) {
            return 0;
        }
        if (p != c) {
            std::swap(m[p], m[c]);
            det = -det;
        }
        det *= m[c][c];
        for (std::size_t i = c + 1; i < n; ++i) {
            if (m[i][c] == 0) {
                continue;
            }
            const Rational f = m[i][c] / m[c][c];
            for (std::size_t j = c; j < n; ++j) {
                m[i][j] -= f * m[c][j];
            }
        }
    }
    return det;
}

RationalMatrix inverse(const RationalMatrix& m)
{
    const std::size_t n = m.size();
    RationalMatrix aug(n, std::vector<Rational>(2 * n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            aug[i][j] = m[i][j];
        }
        aug[i][n + i] = 1;
    }
    auto pivots = row_reduce(aug);
    if (pivots.size() < n || pivots[n - 1] >= n) {
        throw std::domain_error("singular matrix");
    }
    RationalMatrix inv(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            inv[i][j] = aug[i][n + j];
        }
    }
    return inv;
}

std::optional<std::vector<Rational>> solve_unique(RationalMatrix m, std::vector<Rational> b)
{
    const std::size_t rows = m.size();
    if (rows == 0) {
        return std::vector<Rational>{};
    }
    const std::size_t cols = m[0].size();
    for (std::size_t i = 0; i < rows; ++i) {
        m[i].push_back(b[i]);
    }
    auto pivots = row_reduce(m);
    if (!pivots.empty() && pivots.back() == cols) {
        return std::nullopt;
    }
    if (pivots.size() != cols) {
        throw std::domain_error("solution is not unique");
    }
    std::vector<Rational> x(cols);
    for (std::size_t i = 0; i < cols; ++i) {
        x[pivots[i]] = m[i][cols];
    }
    return x;
}

std::vector<std::vector<Rational>> kernel(RationalMatrix m)
{
    if (m.empty()) {
        return {};
    }
    const std::size_t cols = m[0].size();
    auto pivots = row_reduce(m);
    std::vector<bool> is_pivot(cols, false);
    for (auto p : pivots) {
        is_pivot[p] = true;
    }
    std::vector<std::vector<Rational>> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) {
            continue;
        }
        std::vector<Rational> v(cols, Rational(0));
        v[free] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) {
            v[pivots[i]] = -m[i][free];
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

Integer int_determinant(const std::vector<std::vector<Integer>>& input)
{
    auto m = input;
    const std::size_t n = m.size();
    if (n == 0) {
        return 1;
    }
    Integer sign = 1;
    Integer prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t p = k + 1;
            while (p < n && m[p][k] == 0) {
                ++p;
            }
            if (p == n) {
                return 0;
            }
            std::swap(m[p], m[k]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Integer v = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                m[i][j] = v;
            }
        }
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

std::size_t cyclo_rank(std::vector<std::vector<CycloNumber>> m)
{
    if (m.empty()) {
        return 0;
    }
    const std::size_t rows = m.size();
    const std::size_t cols = m[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m[p][c].is_zero()) {
            ++p;
        }
        if (p == rows) {
            continue;
        }
        std::swap(m[p], m[r]);
        const CycloNumber inv = m[r][c].inverse();
        for (std::size_t i = r + 1; i < rows; ++i) {
            if (m[i][c].is_zero()) {
                continue;
            }
            const CycloNumber f = m[i][c] * inv;
            for (std::size_t j = c; j < cols; ++j) {
                m[i][j] -= f * m[r][j];
            }
        }
        ++r;
    }
    return r;
}

} // namespace cusp::exactnum
