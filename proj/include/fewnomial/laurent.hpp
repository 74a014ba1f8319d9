#pragma once

// Multivariate Laurent polynomials with exact rational coefficients.

#include "fewnomial/rational.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace fewnomial {

/// Exponent of a Laurent monomial; entries may be negative.
using ExponentVector = std::vector<long>;

ExponentVector operator+(const ExponentVector& a, const ExponentVector& b);
ExponentVector operator-(const ExponentVector& a, const ExponentVector& b);
ExponentVector scaled(const ExponentVector& a, long factor);
long coordinate_sum(const ExponentVector& a);

/// Sparse polynomial sum of c_a x^a over integer exponent vectors a.
///
/// The term map never stores a zero coefficient and every key has length
/// nvars(), so structural equality is polynomial equality.
class LaurentPolynomial {
public:
    using TermMap = std::map<ExponentVector, Rational>;

    explicit LaurentPolynomial(std::size_t nvars = 1);

    static LaurentPolynomial constant(std::size_t nvars, const Rational& value);
    static LaurentPolynomial monomial(const ExponentVector& exponent, const Rational& coefficient = 1);
    static LaurentPolynomial variable(std::size_t nvars, std::size_t index);

    std::size_t nvars() const { return nvars_; }
    const TermMap& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    bool is_monomial() const { return terms_.size() == 1; }

    /// True when no exponent is negative.
    bool is_polynomial() const;

    Rational coefficient(const ExponentVector& exponent) const;
    void add_term(const ExponentVector& exponent, const Rational& coefficient);

    /// Largest coordinate sum over the terms; -1 for the zero polynomial.
    long total_degree() const;
    long degree_in(std::size_t var) const;
    long min_degree_in(std::size_t var) const;

    /// Componentwise minimum of all exponents. Requires a nonzero polynomial.
    ExponentVector min_exponents() const;

    Rational evaluate(std::span<const Rational> point) const;

    LaurentPolynomial& operator+=(const LaurentPolynomial& other);
    LaurentPolynomial& operator-=(const LaurentPolynomial& other);
    LaurentPolynomial& operator*=(const LaurentPolynomial& other);
    LaurentPolynomial& operator*=(const Rational& factor);

    friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) { return a += b; }
    friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) { return a -= b; }
    friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b);
    friend LaurentPolynomial operator*(LaurentPolynomial a, const Rational& c) { return a *= c; }
    friend LaurentPolynomial operator*(const Rational& c, LaurentPolynomial a) { return a *= c; }
    LaurentPolynomial operator-() const;

    friend bool operator==(const LaurentPolynomial& a, const LaurentPolynomial& b) = default;

private:
    void check_arity(const LaurentPolynomial& other) const;

    std::size_t nvars_;
    TermMap terms_;
};

LaurentPolynomial scale(const LaurentPolynomial& p, const Rational& factor);

/// Multiplies p by the monomial x^shift.
LaurentPolynomial monomial_shift(const LaurentPolynomial& p, const ExponentVector& shift);

LaurentPolynomial pow(const LaurentPolynomial& p, unsigned long exponent);

/// Composes p with x_i -> images[i]. Negative exponents need monomial images.
LaurentPolynomial substitute(const LaurentPolynomial& p, std::span<const LaurentPolynomial> images);

struct ClearedPolynomial {
    LaurentPolynomial polynomial;
    ExponentVector shift;
};

/// Returns p * x^shift with the componentwise-minimal shift that removes all
/// negative exponents and all monomial factors.
ClearedPolynomial clear_denominators(const LaurentPolynomial& p);

LaurentPolynomial partial_derivative(const LaurentPolynomial& p, std::size_t var);

/// x_var * d/dx_var, which keeps the support and scales each term by its exponent.
LaurentPolynomial toric_derivative(const LaurentPolynomial& p, std::size_t var);

/// Exact division of true polynomials; nullopt when den does not divide num.
std::optional<LaurentPolynomial> divide_exact(const LaurentPolynomial& num, const LaurentPolynomial& den);

/// Smallest positive integer c such that c * p has integer coefficients.
Integer denominator_lcm(const LaurentPolynomial& p);

std::string to_string(const LaurentPolynomial& p, std::span<const std::string> names = {});

} // namespace fewnomial
