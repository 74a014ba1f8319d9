#include "fewnomial/univariate.hpp"

#include "fewnomial/errors.hpp"

#include <algorithm>

namespace fewnomial {

UnivariatePolynomial::UnivariatePolynomial(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients))
{
    trim();
}

UnivariatePolynomial::UnivariatePolynomial(std::initializer_list<Rational> coefficients) : coeffs_(coefficients)
{
    trim();
}

UnivariatePolynomial UnivariatePolynomial::constant(const Rational& c) { return UnivariatePolynomial({c}); }

UnivariatePolynomial UnivariatePolynomial::x() { return UnivariatePolynomial({Rational(0), Rational(1)}); }

void UnivariatePolynomial::trim()
{
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational UnivariatePolynomial::coefficient(int i) const
{
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return 0;
    return coeffs_[static_cast<std::size_t>(i)];
}

Rational UnivariatePolynomial::operator()(const Rational& at) const
{
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + *it;
    return acc;
}

UnivariatePolynomial& UnivariatePolynomial::operator+=(const UnivariatePolynomial& o)
{
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

UnivariatePolynomial& UnivariatePolynomial::operator-=(const UnivariatePolynomial& o)
{
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
}

UnivariatePolynomial operator*(const UnivariatePolynomial& a, const UnivariatePolynomial& b)
{
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return UnivariatePolynomial(std::move(c));
}

UnivariatePolynomial operator*(UnivariatePolynomial a, const Rational& c)
{
    for (auto& v : a.coeffs_) v *= c;
    a.trim();
    return a;
}

UnivariatePolynomial UnivariatePolynomial::operator-() const
{
    UnivariatePolynomial r(*this);
    for (auto& v : r.coeffs_) v = -v;
    return r;
}

UnivariatePolynomial derivative(const UnivariatePolynomial& p)
{
    std::vector<Rational> c;
    for (int i = 1; i <= p.degree(); ++i) c.push_back(p.coefficient(i) * i);
    return UnivariatePolynomial(std::move(c));
}

std::pair<UnivariatePolynomial, UnivariatePolynomial> divmod(const UnivariatePolynomial& a,
                                                             const UnivariatePolynomial& b)
{
    if (b.is_zero()) throw InvalidInput("polynomial division by zero");
    std::vector<Rational> rem = a.coefficients();
    const int db = b.degree();
    const Rational lead = b.leading();
    std::vector<Rational> quot(static_cast<std::size_t>(std::max(0, a.degree() - db + 1)));
    for (int i = a.degree(); i >= db; --i) {
        Rational c = rem[static_cast<std::size_t>(i)];
        if (c == 0) continue;
        c /= lead;
        quot[static_cast<std::size_t>(i - db)] = c;
        for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(i - db + j)] -= c * b.coefficient(j);
    }
    rem.resize(static_cast<std::size_t>(std::max(0, std::min(a.degree() + 1, db))));
    return {UnivariatePolynomial(std::move(quot)), UnivariatePolynomial(std::move(rem))};
}

UnivariatePolynomial remainder(const UnivariatePolynomial& a, const UnivariatePolynomial& b)
{
    return divmod(a, b).second;
}

UnivariatePolynomial divide_exact(const UnivariatePolynomial& a, const UnivariatePolynomial& b)
{
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw InternalError("inexact univariate division");
    return q;
}

UnivariatePolynomial monic(const UnivariatePolynomial& p)
{
    if (p.is_zero()) return p;
    return p * Rational(1 / p.leading());
}

UnivariatePolynomial gcd(const UnivariatePolynomial& a, const UnivariatePolynomial& b)
{
    if (a.is_zero()) return monic(b);
    if (b.is_zero()) return monic(a);
    IntegerPolynomial g = gcd(primitive_integer(a), primitive_integer(b));
    return monic(to_rational(g));
}

UnivariatePolynomial squarefree_part(const UnivariatePolynomial& p)
{
    if (p.is_zero()) throw InvalidInput("squarefree part of the zero polynomial");
    return monic(to_rational(squarefree_integer(p)));
}

std::optional<UnivariatePolynomial> inverse_mod(const UnivariatePolynomial& a, const UnivariatePolynomial& m)
{
    if (m.degree() < 1) throw InvalidInput("inverse modulo a constant");
    // Invariant: r0 = s0 * a mod m and r1 = s1 * a mod m.
    UnivariatePolynomial r0 = m, r1 = remainder(a, m);
    UnivariatePolynomial s0, s1 = UnivariatePolynomial::constant(1);
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        UnivariatePolynomial s = s0 - q * s1;
        r0 = std::move(r1);
        s0 = std::move(s1);
        // Keep remainders monic to limit coefficient growth.
        if (!r.is_zero()) {
            const Rational inv = 1 / r.leading();
            r = r * inv;
            s = s * inv;
        }
        r1 = std::move(r);
        s1 = std::move(s);
    }
    if (r0.degree() != 0) return std::nullopt;
    return remainder(s0 * Rational(1 / r0.leading()), m);
}

UnivariatePolynomial compose(const UnivariatePolynomial& p, const UnivariatePolynomial& q)
{
    UnivariatePolynomial acc;
    for (int i = p.degree(); i >= 0; --i) acc = acc * q + UnivariatePolynomial::constant(p.coefficient(i));
    return acc;
}

std::string to_string(const UnivariatePolynomial& p, const std::string& var)
{
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (int i = p.degree(); i >= 0; --i) {
        const Rational c = p.coefficient(i);
        if (c == 0) continue;
        if (first) {
            if (c < 0) out += "-";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        first = false;
        Rational mag = abs(c);
        std::string mono = i == 0 ? "" : (i == 1 ? var : var + "^" + std::to_string(i));
        if (i == 0) out += to_string(mag);
        else if (mag == 1) out += mono;
        else out += to_string(mag) + "*" + mono;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Integer polynomials

namespace {

void trim(IntegerPolynomial& p)
{
    while (!p.empty() && p.back() == 0) p.pop_back();
}

Integer content(const IntegerPolynomial& p)
{
    Integer g = 0;
    for (const auto& c : p) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

} // namespace

int degree(const IntegerPolynomial& p) { return static_cast<int>(p.size()) - 1; }

IntegerPolynomial primitive_part(IntegerPolynomial p)
{
    trim(p);
    if (p.empty()) return p;
    Integer g = content(p);
    if (p.back() < 0) g = -g;
    if (g != 1)
        for (auto& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    return p;
}

IntegerPolynomial remove_content(IntegerPolynomial p)
{
    trim(p);
    Integer g = content(p);
    if (g > 1)
        for (auto& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    return p;
}

IntegerPolynomial primitive_integer(const UnivariatePolynomial& p)
{
    Integer l = 1;
    for (const auto& c : p.coefficients()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    IntegerPolynomial out;
    out.reserve(p.coefficients().size());
    for (const auto& c : p.coefficients()) {
        Integer v = l / c.get_den();
        out.push_back(v * c.get_num());
    }
    return remove_content(std::move(out));
}

UnivariatePolynomial to_rational(const IntegerPolynomial& p)
{
    std::vector<Rational> c;
    c.reserve(p.size());
    for (const auto& v : p) c.emplace_back(v);
    return UnivariatePolynomial(std::move(c));
}

int sign_at(const IntegerPolynomial& p, const Integer& a, const Integer& b)
{
    // sum c_i a^i b^(n-i), evaluated by Horner on (a, b).
    if (p.empty()) return 0;
    Integer acc = p.back();
    Integer bpow = 1;
    for (int i = degree(p) - 1; i >= 0; --i) {
        bpow *= b;
        acc = acc * a + p[static_cast<std::size_t>(i)] * bpow;
    }
    return sgn(acc);
}

int sign_at(const IntegerPolynomial& p, const Rational& at) { return sign_at(p, at.get_num(), at.get_den()); }

int sign_at_infinity(const IntegerPolynomial& p, bool negative)
{
    if (p.empty()) return 0;
    int s = sgn(p.back());
    if (negative && degree(p) % 2 == 1) s = -s;
    return s;
}

IntegerPolynomial signed_prem(const IntegerPolynomial& a, const IntegerPolynomial& b)
{
    if (b.empty()) throw InvalidInput("pseudo-remainder by zero");
    const int da = degree(a);
    const int db = degree(b);
    if (da < db) return a;
    IntegerPolynomial r = a;
    const Integer& lb = b.back();
    // Classic prem: lc(b)^(da-db+1) * a mod b.
    for (int i = da; i >= db; --i) {
        Integer c = r[static_cast<std::size_t>(i)];
        for (auto& v : r) v *= lb;
        if (c != 0)
            for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(i - db + j)] -= c * b[static_cast<std::size_t>(j)];
        r.pop_back();
    }
    trim(r);
    if (lb < 0 && (da - db + 1) % 2 == 1)
        for (auto& v : r) v = -v;
    return r;
}

IntegerPolynomial gcd(const IntegerPolynomial& a, const IntegerPolynomial& b)
{
    IntegerPolynomial x = primitive_part(a);
    IntegerPolynomial y = primitive_part(b);
    if (x.empty()) return y;
    if (y.empty()) return x;
    if (degree(x) < degree(y)) std::swap(x, y);
    while (!y.empty()) {
        IntegerPolynomial r = primitive_part(signed_prem(x, y));
        x = std::move(y);
        y = std::move(r);
    }
    return primitive_part(std::move(x));
}

IntegerPolynomial squarefree_integer(const UnivariatePolynomial& p)
{
    IntegerPolynomial ip = primitive_integer(p);
    if (ip.empty()) throw InvalidInput("squarefree part of the zero polynomial");
    if (degree(ip) <= 0) return IntegerPolynomial{Integer(1)};
    IntegerPolynomial dp;
    for (int i = 1; i <= degree(ip); ++i) dp.push_back(ip[static_cast<std::size_t>(i)] * i);
    IntegerPolynomial g = gcd(ip, dp);
    if (degree(g) == 0) return primitive_part(ip);
    UnivariatePolynomial q = divide_exact(to_rational(ip), to_rational(g));
    return primitive_part(primitive_integer(q));
}

void taylor_shift_one(IntegerPolynomial& p)
{
    const int n = degree(p);
    for (int i = 0; i < n; ++i)
        for (int j = n - 1; j >= i; --j) p[static_cast<std::size_t>(j)] += p[static_cast<std::size_t>(j + 1)];
}

int sign_variations(const IntegerPolynomial& p)
{
    int count = 0;
    int last = 0;
    for (const auto& c : p) {
        int s = sgn(c);
        if (s == 0) continue;
        if (last != 0 && s != last) ++count;
        last = s;
    }
    return count;
}

} // namespace fewnomial
