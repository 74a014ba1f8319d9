#include "fewnomial/resultant.hpp"

#include "fewnomial/errors.hpp"

#include <algorithm>

namespace fewnomial {

Integer bareiss_determinant(IntegerMatrixRows m)
{
    const std::size_t n = m.size();
    if (n == 0) return 1;
    for (const auto& row : m)
        if (row.size() != n) throw InvalidInput("determinant of a non-square matrix");
    int sign = 1;
    Integer prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t swap = k + 1;
            while (swap < n && m[swap][k] == 0) ++swap;
            if (swap == n) return 0;
            std::swap(m[k], m[swap]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Integer v = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                m[i][j] = std::move(v);
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    Integer det = m[n - 1][n - 1];
    return sign < 0 ? Integer(-det) : det;
}

Rational rational_determinant(std::vector<std::vector<Rational>> m)
{
    const std::size_t n = m.size();
    Rational det = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot = k;
        while (pivot < n && m[pivot][k] == 0) ++pivot;
        if (pivot == n) return 0;
        if (pivot != k) {
            std::swap(m[k], m[pivot]);
            det = -det;
        }
        det *= m[k][k];
        for (std::size_t i = k + 1; i < n; ++i) {
            if (m[i][k] == 0) continue;
            Rational f = m[i][k] / m[k][k];
            for (std::size_t j = k; j < n; ++j) m[i][j] -= f * m[k][j];
        }
    }
    return det;
}

UnivariatePolynomial coefficient_in(const LaurentPolynomial& p, std::size_t var, long exponent)
{
    if (p.nvars() != 2 || var > 1) throw InvalidInput("coefficient_in expects a bivariate polynomial");
    const std::size_t other = 1 - var;
    std::vector<Rational> c;
    for (const auto& [e, v] : p.terms()) {
        if (e[var] != exponent) continue;
        if (e[other] < 0) throw InvalidInput("coefficient_in expects nonnegative exponents");
        auto idx = static_cast<std::size_t>(e[other]);
        if (c.size() <= idx) c.resize(idx + 1);
        c[idx] += v;
    }
    return UnivariatePolynomial(std::move(c));
}

namespace {

// Sylvester-type matrix for S_{k,j}: rows x^t p (t = n-k-1..0), x^t q
// (t = m-k-1..0); columns x^{m+n-k-1} .. x^{k+1}, then x^j.
template <typename Entry, typename Getter>
std::vector<std::vector<Entry>> subresultant_matrix(int m, int n, int k, int j, Getter coeff)
{
    const int size = m + n - 2 * k;
    std::vector<int> col_exp;
    for (int e = m + n - k - 1; e >= k + 1; --e) col_exp.push_back(e);
    col_exp.push_back(j);
    std::vector<std::vector<Entry>> rows;
    rows.reserve(static_cast<std::size_t>(size));
    for (int which = 0; which < 2; ++which) {
        const int count = which == 0 ? n - k : m - k;
        for (int t = count - 1; t >= 0; --t) {
            std::vector<Entry> row;
            row.reserve(static_cast<std::size_t>(size));
            for (int e : col_exp) row.push_back(coeff(which, e - t));
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

void check_kj(int m, int n, int k, int j)
{
    const bool ok = (k == 0 && j == 0) || (j >= 0 && j <= k && k < std::min(m, n));
    if (!ok) throw InvalidInput("subresultant index out of range");
}

struct BivariateIntegerForm {
    std::vector<IntegerPolynomial> coeffs; // coefficient of x_elim^e as integer polynomial in the other variable
    Integer scale;                         // positive factor applied to clear denominators
    long total_degree = 0;
};

BivariateIntegerForm integer_form(const LaurentPolynomial& p, std::size_t eliminate)
{
    if (p.nvars() != 2 || eliminate > 1) throw InvalidInput("resultant expects bivariate polynomials");
    if (p.is_zero()) throw InvalidInput("resultant of the zero polynomial");
    if (!p.is_polynomial()) throw InvalidInput("resultant expects nonnegative exponents");
    BivariateIntegerForm out;
    out.scale = denominator_lcm(p);
    out.total_degree = p.total_degree();
    const long deg = p.degree_in(eliminate);
    if (deg <= 0) throw InvalidInput("resultant input has degree zero in the eliminated variable");
    out.coeffs.resize(static_cast<std::size_t>(deg + 1));
    const std::size_t other = 1 - eliminate;
    for (const auto& [e, v] : p.terms()) {
        auto& poly = out.coeffs[static_cast<std::size_t>(e[eliminate])];
        auto idx = static_cast<std::size_t>(e[other]);
        if (poly.size() <= idx) poly.resize(idx + 1);
        Rational scaled = v * out.scale;
        poly[idx] = scaled.get_num();
    }
    return out;
}

Integer evaluate_integer(const IntegerPolynomial& p, const Integer& at)
{
    Integer acc = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * at + *it;
    return acc;
}

// Upper bound on the degree (in the surviving variable) of S_{k,j}.
long degree_bound(const BivariateIntegerForm& p, const BivariateIntegerForm& q, int k, int j)
{
    const int m = static_cast<int>(p.coeffs.size()) - 1;
    const int n = static_cast<int>(q.coeffs.size()) - 1;
    long weighted = 0;
    for (int t = n - k - 1; t >= 0; --t) weighted += p.total_degree + t;
    for (int t = m - k - 1; t >= 0; --t) weighted += q.total_degree + t;
    for (int e = m + n - k - 1; e >= k + 1; --e) weighted -= e;
    weighted -= j;

    auto max_deg = [](const BivariateIntegerForm& f) {
        long d = 0;
        for (const auto& c : f.coeffs) d = std::max(d, static_cast<long>(c.size()) - 1);
        return d;
    };
    long rowwise = (n - k) * max_deg(p) + (m - k) * max_deg(q);
    return std::max(0L, std::min(weighted, rowwise));
}

Integer sample_point(std::size_t i)
{
    // 0, 1, -1, 2, -2, ...
    long v = static_cast<long>((i + 1) / 2);
    return (i % 2 == 1) ? Integer(v) : Integer(-v);
}

} // namespace

Integer subresultant_coefficient(const IntegerPolynomial& p, const IntegerPolynomial& q, int k, int j)
{
    const int m = static_cast<int>(p.size()) - 1;
    const int n = static_cast<int>(q.size()) - 1;
    if (m < 0 || n < 0) throw InvalidInput("subresultant of an empty polynomial");
    check_kj(m, n, k, j);
    auto rows = subresultant_matrix<Integer>(m, n, k, j, [&](int which, int e) -> Integer {
        const IntegerPolynomial& f = which == 0 ? p : q;
        if (e < 0 || e >= static_cast<int>(f.size())) return 0;
        return f[static_cast<std::size_t>(e)];
    });
    return bareiss_determinant(std::move(rows));
}

UnivariatePolynomial interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys)
{
    const std::size_t n = xs.size();
    if (ys.size() != n) throw InvalidInput("interpolation data of unequal length");
    std::vector<Rational> dd = ys;
    for (std::size_t level = 1; level < n; ++level)
        for (std::size_t i = n - 1; i >= level; --i) dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - level]);
    UnivariatePolynomial result;
    for (std::size_t i = n; i-- > 0;)
        result = result * UnivariatePolynomial({Rational(-xs[i]), Rational(1)}) + UnivariatePolynomial::constant(dd[i]);
    return result;
}

std::vector<UnivariatePolynomial> subresultant_coefficients(const LaurentPolynomial& p, const LaurentPolynomial& q,
                                                            std::size_t eliminate,
                                                            const std::vector<std::pair<int, int>>& requests)
{
    BivariateIntegerForm fp = integer_form(p, eliminate);
    BivariateIntegerForm fq = integer_form(q, eliminate);
    const int m = static_cast<int>(fp.coeffs.size()) - 1;
    const int n = static_cast<int>(fq.coeffs.size()) - 1;

    long max_bound = 0;
    std::vector<long> bounds;
    for (auto [k, j] : requests) {
        check_kj(m, n, k, j);
        bounds.push_back(degree_bound(fp, fq, k, j));
        max_bound = std::max(max_bound, bounds.back());
    }

    std::vector<Rational> xs;
    std::vector<std::vector<Rational>> values(requests.size());
    for (std::size_t i = 0; i <= static_cast<std::size_t>(max_bound); ++i) {
        const Integer s = sample_point(i);
        IntegerPolynomial ps, qs;
        for (const auto& c : fp.coeffs) ps.push_back(evaluate_integer(c, s));
        for (const auto& c : fq.coeffs) qs.push_back(evaluate_integer(c, s));
        xs.emplace_back(s);
        for (std::size_t r = 0; r < requests.size(); ++r) {
            if (static_cast<long>(i) > bounds[r]) continue;
            values[r].emplace_back(subresultant_coefficient(ps, qs, requests[r].first, requests[r].second));
        }
    }

    std::vector<UnivariatePolynomial> out;
    for (std::size_t r = 0; r < requests.size(); ++r) {
        const int k = requests[r].first;
        std::vector<Rational> nodes(xs.begin(), xs.begin() + static_cast<long>(values[r].size()));
        UnivariatePolynomial poly = interpolate(nodes, values[r]);
        Rational unscale = Rational(1) / (Rational(ipow(fp.scale, static_cast<unsigned long>(n - k))) *
                                          Rational(ipow(fq.scale, static_cast<unsigned long>(m - k))));
        out.push_back(poly * unscale);
    }
    return out;
}

UnivariatePolynomial subresultant_coefficient(const LaurentPolynomial& p, const LaurentPolynomial& q,
                                              std::size_t eliminate, int k, int j)
{
    return subresultant_coefficients(p, q, eliminate, {{k, j}}).front();
}

UnivariatePolynomial resultant(const LaurentPolynomial& p, const LaurentPolynomial& q, std::size_t eliminate)
{
    return subresultant_coefficient(p, q, eliminate, 0, 0);
}

} // namespace fewnomial
