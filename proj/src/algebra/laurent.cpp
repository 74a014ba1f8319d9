#include "fewnomial/laurent.hpp"

#include "fewnomial/errors.hpp"

#include <algorithm>
#include <limits>

namespace fewnomial {

ExponentVector operator+(const ExponentVector& a, const ExponentVector& b)
{
    if (a.size() != b.size()) throw InvalidInput("exponent vectors of different length");
    ExponentVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

ExponentVector operator-(const ExponentVector& a, const ExponentVector& b)
{
    if (a.size() != b.size()) throw InvalidInput("exponent vectors of different length");
    ExponentVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

ExponentVector scaled(const ExponentVector& a, long factor)
{
    ExponentVector r(a);
    for (auto& e : r) e *= factor;
    return r;
}

long coordinate_sum(const ExponentVector& a)
{
    long s = 0;
    for (long e : a) s += e;
    return s;
}

LaurentPolynomial::LaurentPolynomial(std::size_t nvars) : nvars_(nvars)
{
    if (nvars == 0) throw InvalidInput("polynomial needs at least one variable");
}

LaurentPolynomial LaurentPolynomial::constant(std::size_t nvars, const Rational& value)
{
    LaurentPolynomial p(nvars);
    p.add_term(ExponentVector(nvars, 0), value);
    return p;
}

LaurentPolynomial LaurentPolynomial::monomial(const ExponentVector& exponent, const Rational& coefficient)
{
    LaurentPolynomial p(exponent.size());
    p.add_term(exponent, coefficient);
    return p;
}

LaurentPolynomial LaurentPolynomial::variable(std::size_t nvars, std::size_t index)
{
    if (index >= nvars) throw InvalidInput("variable index out of range");
    ExponentVector e(nvars, 0);
    e[index] = 1;
    return monomial(e);
}

bool LaurentPolynomial::is_constant() const
{
    if (terms_.empty()) return true;
    if (terms_.size() > 1) return false;
    const auto& e = terms_.begin()->first;
    return std::all_of(e.begin(), e.end(), [](long v) { return v == 0; });
}

bool LaurentPolynomial::is_polynomial() const
{
    for (const auto& [e, c] : terms_)
        for (long v : e)
            if (v < 0) return false;
    return true;
}

Rational LaurentPolynomial::coefficient(const ExponentVector& exponent) const
{
    auto it = terms_.find(exponent);
    return it == terms_.end() ? Rational(0) : it->second;
}

void LaurentPolynomial::add_term(const ExponentVector& exponent, const Rational& coefficient)
{
    if (exponent.size() != nvars_) throw InvalidInput("exponent length does not match variable count");
    if (coefficient == 0) return;
    auto [it, inserted] = terms_.try_emplace(exponent, coefficient);
    if (!inserted) {
        it->second += coefficient;
        if (it->second == 0) terms_.erase(it);
    }
}

long LaurentPolynomial::total_degree() const
{
    long best = -1;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        long s = coordinate_sum(e);
        if (first || s > best) best = s;
        first = false;
    }
    return best;
}

long LaurentPolynomial::degree_in(std::size_t var) const
{
    long best = std::numeric_limits<long>::min();
    for (const auto& [e, c] : terms_) best = std::max(best, e.at(var));
    return terms_.empty() ? -1 : best;
}

long LaurentPolynomial::min_degree_in(std::size_t var) const
{
    long best = std::numeric_limits<long>::max();
    for (const auto& [e, c] : terms_) best = std::min(best, e.at(var));
    return terms_.empty() ? 0 : best;
}

ExponentVector LaurentPolynomial::min_exponents() const
{
    if (terms_.empty()) throw InvalidInput("zero polynomial has no minimal exponent");
    ExponentVector m = terms_.begin()->first;
    for (const auto& [e, c] : terms_)
        for (std::size_t i = 0; i < nvars_; ++i) m[i] = std::min(m[i], e[i]);
    return m;
}

Rational LaurentPolynomial::evaluate(std::span<const Rational> point) const
{
    if (point.size() != nvars_) throw InvalidInput("evaluation point has wrong arity");
    Rational sum = 0;
    for (const auto& [e, c] : terms_) {
        Rational term = c;
        for (std::size_t i = 0; i < nvars_; ++i) {
            if (e[i] == 0) continue;
            if (point[i] == 0) {
                if (e[i] < 0) throw InvalidInput("negative exponent evaluated at zero coordinate");
                term = 0;
                break;
            }
            Rational base = e[i] > 0 ? point[i] : Rational(1 / point[i]);
            Integer num = ipow(base.get_num(), static_cast<unsigned long>(std::labs(e[i])));
            Integer den = ipow(base.get_den(), static_cast<unsigned long>(std::labs(e[i])));
            term *= make_rational(num, den);
        }
        sum += term;
    }
    return sum;
}

void LaurentPolynomial::check_arity(const LaurentPolynomial& other) const
{
    if (other.nvars_ != nvars_)
        throw InvalidInput("polynomials in " + std::to_string(nvars_) + " and " + std::to_string(other.nvars_) +
                           " variables cannot be combined");
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& other)
{
    check_arity(other);
    for (const auto& [e, c] : other.terms_) add_term(e, c);
    return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& other)
{
    check_arity(other);
    for (const auto& [e, c] : other.terms_) add_term(e, -c);
    return *this;
}

LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b)
{
    a.check_arity(b);
    LaurentPolynomial r(a.nvars_);
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            ExponentVector e = ea + eb;
            auto [it, inserted] = r.terms_.try_emplace(std::move(e), ca * cb);
            if (!inserted) it->second += ca * cb;
        }
    std::erase_if(r.terms_, [](const auto& kv) { return kv.second == 0; });
    return r;
}

LaurentPolynomial& LaurentPolynomial::operator*=(const LaurentPolynomial& other)
{
    *this = *this * other;
    return *this;
}

LaurentPolynomial& LaurentPolynomial::operator*=(const Rational& factor)
{
    if (factor == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, c] : terms_) c *= factor;
    return *this;
}

LaurentPolynomial LaurentPolynomial::operator-() const
{
    LaurentPolynomial r(*this);
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

LaurentPolynomial scale(const LaurentPolynomial& p, const Rational& factor) { return p * factor; }

LaurentPolynomial monomial_shift(const LaurentPolynomial& p, const ExponentVector& shift)
{
    if (shift.size() != p.nvars()) throw InvalidInput("shift has wrong length");
    LaurentPolynomial r(p.nvars());
    for (const auto& [e, c] : p.terms()) r.add_term(e + shift, c);
    return r;
}

LaurentPolynomial pow(const LaurentPolynomial& p, unsigned long exponent)
{
    LaurentPolynomial result = LaurentPolynomial::constant(p.nvars(), 1);
    LaurentPolynomial base = p;
    while (exponent > 0) {
        if (exponent & 1UL) result *= base;
        exponent >>= 1;
        if (exponent > 0) base *= base;
    }
    return result;
}

LaurentPolynomial substitute(const LaurentPolynomial& p, std::span<const LaurentPolynomial> images)
{
    if (images.size() != p.nvars()) throw InvalidInput("substitution needs one image per variable");
    const std::size_t out_vars = images.front().nvars();
    for (const auto& img : images) {
        if (img.nvars() != out_vars) throw InvalidInput("substitution images live in different rings");
        if (img.is_zero()) throw InvalidInput("substitution image is zero");
    }

    // Cache of positive and negative powers per variable.
    std::vector<std::map<long, LaurentPolynomial>> cache(p.nvars());
    auto power = [&](std::size_t var, long e) -> const LaurentPolynomial& {
        auto it = cache[var].find(e);
        if (it != cache[var].end()) return it->second;
        LaurentPolynomial value(out_vars);
        if (e >= 0) {
            value = pow(images[var], static_cast<unsigned long>(e));
        } else {
            if (!images[var].is_monomial())
                throw InvalidInput("negative exponent applied to a non-monomial image");
            const auto& [me, mc] = *images[var].terms().begin();
            Rational inv = 1 / mc;
            Integer num = ipow(inv.get_num(), static_cast<unsigned long>(-e));
            Integer den = ipow(inv.get_den(), static_cast<unsigned long>(-e));
            value = LaurentPolynomial::monomial(scaled(me, e), make_rational(num, den));
        }
        return cache[var].emplace(e, std::move(value)).first->second;
    };

    LaurentPolynomial result(out_vars);
    for (const auto& [e, c] : p.terms()) {
        LaurentPolynomial term = LaurentPolynomial::constant(out_vars, c);
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] != 0) term *= power(i, e[i]);
        result += term;
    }
    return result;
}

ClearedPolynomial clear_denominators(const LaurentPolynomial& p)
{
    if (p.is_zero()) throw InvalidInput("cannot clear denominators of the zero polynomial");
    ExponentVector shift = scaled(p.min_exponents(), -1);
    return {monomial_shift(p, shift), shift};
}

LaurentPolynomial partial_derivative(const LaurentPolynomial& p, std::size_t var)
{
    if (var >= p.nvars()) throw InvalidInput("variable index out of range");
    LaurentPolynomial r(p.nvars());
    for (const auto& [e, c] : p.terms()) {
        if (e[var] == 0) continue;
        ExponentVector d = e;
        d[var] -= 1;
        r.add_term(d, c * e[var]);
    }
    return r;
}

LaurentPolynomial toric_derivative(const LaurentPolynomial& p, std::size_t var)
{
    if (var >= p.nvars()) throw InvalidInput("variable index out of range");
    LaurentPolynomial r(p.nvars());
    for (const auto& [e, c] : p.terms())
        if (e[var] != 0) r.add_term(e, c * e[var]);
    return r;
}

std::optional<LaurentPolynomial> divide_exact(const LaurentPolynomial& num, const LaurentPolynomial& den)
{
    if (num.nvars() != den.nvars()) throw InvalidInput("division of polynomials in different rings");
    if (den.is_zero()) throw InvalidInput("division by the zero polynomial");
    if (!num.is_polynomial() || !den.is_polynomial())
        throw InvalidInput("exact division is defined for true polynomials only");

    // Lexicographic leading terms: the map's last key is the lex-largest exponent.
    const auto& [lead_e, lead_c] = *den.terms().rbegin();
    LaurentPolynomial quotient(num.nvars());
    LaurentPolynomial rem = num;
    while (!rem.is_zero()) {
        const auto& [re, rc] = *rem.terms().rbegin();
        ExponentVector diff = re - lead_e;
        if (std::any_of(diff.begin(), diff.end(), [](long v) { return v < 0; })) return std::nullopt;
        LaurentPolynomial step = LaurentPolynomial::monomial(diff, rc / lead_c);
        quotient += step;
        rem -= step * den;
    }
    return quotient;
}

Integer denominator_lcm(const LaurentPolynomial& p)
{
    Integer l = 1;
    for (const auto& [e, c] : p.terms()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    return l;
}

std::string to_string(const LaurentPolynomial& p, std::span<const std::string> names)
{
    if (p.is_zero()) return "0";
    auto name = [&](std::size_t i) -> std::string {
        if (i < names.size()) return names[i];
        if (p.nvars() <= 3) return std::string(1, "xyz"[i]);
        return "x" + std::to_string(i + 1);
    };
    std::string out;
    bool first = true;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const auto& [e, c] = *it;
        bool unit = std::all_of(e.begin(), e.end(), [](long v) { return v == 0; });
        Rational mag = abs(c);
        if (first) {
            if (c < 0) out += "-";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        first = false;
        std::string mono;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += name(i);
            if (e[i] != 1) mono += "^" + std::to_string(e[i]);
        }
        if (unit) {
            out += to_string(mag);
        } else if (mag == 1) {
            out += mono;
        } else {
            out += to_string(mag) + "*" + mono;
        }
    }
    return out;
}

} // namespace fewnomial
