#pragma once

// Independent reference computations for the tests. Nothing here calls the
// library routine it is used to check.

#include "fewnomial/laurent.hpp"
#include "fewnomial/univariate.hpp"

#include <utility>
#include <vector>

namespace oracle {

using namespace fewnomial;
using RationalMatrix = std::vector<std::vector<Rational>>;

/// Gaussian elimination with nonzero pivot search.
inline Rational determinant(RationalMatrix m)
{
    const std::size_t n = m.size();
    Rational det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m[p][c] == 0) ++p;
        if (p == n) return 0;
        if (p != c) {
            std::swap(m[p], m[c]);
            det = -det;
        }
        det *= m[c][c];
        for (std::size_t r = c + 1; r < n; ++r) {
            if (m[r][c] == 0) continue;
            const Rational f = m[r][c] / m[c][c];
            for (std::size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
        }
    }
    return det;
}

/// Rank over Q.
inline std::size_t rank(RationalMatrix m)
{
    std::size_t r = 0;
    const std::size_t cols = m.empty() ? 0 : m[0].size();
    for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
        std::size_t p = r;
        while (p < m.size() && m[p][c] == 0) ++p;
        if (p == m.size()) continue;
        std::swap(m[p], m[r]);
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == r || m[i][c] == 0) continue;
            const Rational f = m[i][c] / m[r][c];
            for (std::size_t k = c; k < cols; ++k) m[i][k] -= f * m[r][k];
        }
        ++r;
    }
    return r;
}

/// Sylvester matrix of a (degree m) and b (degree n), coefficients ascending.
inline RationalMatrix sylvester(const std::vector<Rational>& a, const std::vector<Rational>& b)
{
    const std::size_t m = a.size() - 1, n = b.size() - 1;
    RationalMatrix s(m + n, std::vector<Rational>(m + n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k <= m; ++k) s[i][i + k] = a[m - k];
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t k = 0; k <= n; ++k) s[n + i][i + k] = b[n - k];
    return s;
}

/// Coefficients in x_var of p after setting the other variable of a bivariate polynomial to `at`.
inline std::vector<Rational> specialize(const LaurentPolynomial& p, std::size_t var, const Rational& at)
{
    std::vector<Rational> c(static_cast<std::size_t>(p.degree_in(var)) + 1, 0);
    for (const auto& [e, coeff] : p.terms()) {
        Rational v = coeff;
        for (long k = 0; k < e[1 - var]; ++k) v *= at;
        c[static_cast<std::size_t>(e[var])] += v;
    }
    return c;
}

/// Horner evaluation with exact rationals.
inline Rational eval(const UnivariatePolynomial& p, const Rational& x)
{
    Rational acc = 0;
    const auto& c = p.coefficients();
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
    return acc;
}

/// Naive product by double loop over the term maps.
inline LaurentPolynomial multiply(const LaurentPolynomial& a, const LaurentPolynomial& b)
{
    std::map<ExponentVector, Rational> acc;
    for (const auto& [ea, ca] : a.terms())
        for (const auto& [eb, cb] : b.terms()) {
            ExponentVector e(ea.size());
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            acc[e] += ca * cb;
        }
    LaurentPolynomial out(a.nvars());
    for (const auto& [e, c] : acc)
        if (c != 0) out.add_term(e, c);
    return out;
}

} // namespace oracle
