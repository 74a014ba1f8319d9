#pragma once

// Dense univariate polynomials over Q, plus the primitive integer form used by
// the root-isolation and elimination code.

#include "fewnomial/rational.hpp"

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace fewnomial {

/// Coefficients in ascending degree; the leading coefficient is nonzero unless
/// the polynomial is zero (empty coefficient list).
class UnivariatePolynomial {
public:
    UnivariatePolynomial() = default;
    explicit UnivariatePolynomial(std::vector<Rational> coefficients);
    UnivariatePolynomial(std::initializer_list<Rational> coefficients);

    static UnivariatePolynomial constant(const Rational& c);
    static UnivariatePolynomial x();

    const std::vector<Rational>& coefficients() const { return coeffs_; }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    Rational leading() const { return coeffs_.empty() ? Rational(0) : coeffs_.back(); }
    Rational coefficient(int i) const;

    Rational operator()(const Rational& at) const;

    UnivariatePolynomial& operator+=(const UnivariatePolynomial& o);
    UnivariatePolynomial& operator-=(const UnivariatePolynomial& o);
    friend UnivariatePolynomial operator+(UnivariatePolynomial a, const UnivariatePolynomial& b) { return a += b; }
    friend UnivariatePolynomial operator-(UnivariatePolynomial a, const UnivariatePolynomial& b) { return a -= b; }
    friend UnivariatePolynomial operator*(const UnivariatePolynomial& a, const UnivariatePolynomial& b);
    friend UnivariatePolynomial operator*(UnivariatePolynomial a, const Rational& c);
    UnivariatePolynomial operator-() const;

    friend bool operator==(const UnivariatePolynomial&, const UnivariatePolynomial&) = default;

private:
    void trim();
    std::vector<Rational> coeffs_;
};

UnivariatePolynomial derivative(const UnivariatePolynomial& p);

/// Euclidean division: a = q*b + r with deg r < deg b.
std::pair<UnivariatePolynomial, UnivariatePolynomial> divmod(const UnivariatePolynomial& a,
                                                             const UnivariatePolynomial& b);
UnivariatePolynomial remainder(const UnivariatePolynomial& a, const UnivariatePolynomial& b);

/// Exact quotient; throws InternalError if b does not divide a.
UnivariatePolynomial divide_exact(const UnivariatePolynomial& a, const UnivariatePolynomial& b);

/// Monic gcd (zero only when both inputs are zero).
UnivariatePolynomial gcd(const UnivariatePolynomial& a, const UnivariatePolynomial& b);

/// p / gcd(p, p'), made monic.
UnivariatePolynomial squarefree_part(const UnivariatePolynomial& p);

UnivariatePolynomial monic(const UnivariatePolynomial& p);

/// u with u * a = 1 mod m; nullopt when gcd(a, m) is not constant.
std::optional<UnivariatePolynomial> inverse_mod(const UnivariatePolynomial& a, const UnivariatePolynomial& m);

/// Polynomial composition p(q(x)).
UnivariatePolynomial compose(const UnivariatePolynomial& p, const UnivariatePolynomial& q);

std::string to_string(const UnivariatePolynomial& p, const std::string& var = "x");

/// Integer coefficients (ascending). Used where sizes matter: sign evaluation,
/// pseudo-remainder sequences and Descartes bisection.
using IntegerPolynomial = std::vector<Integer>;

/// Positive rational multiple of p with coprime integer coefficients (signs kept).
IntegerPolynomial primitive_integer(const UnivariatePolynomial& p);
/// Divides by the content, normalizing the leading coefficient to be positive.
IntegerPolynomial primitive_part(IntegerPolynomial p);
/// Divides by the positive content only; the sign of every value is preserved.
IntegerPolynomial remove_content(IntegerPolynomial p);
UnivariatePolynomial to_rational(const IntegerPolynomial& p);

int degree(const IntegerPolynomial& p);
/// Sign of p(a/b) computed with homogeneous integer Horner; b > 0.
int sign_at(const IntegerPolynomial& p, const Integer& a, const Integer& b);
int sign_at(const IntegerPolynomial& p, const Rational& at);
/// Sign of p at +infinity (negative=false) or -infinity (negative=true).
int sign_at_infinity(const IntegerPolynomial& p, bool negative);

/// Pseudo-remainder scaled so that it is a *positive* multiple of the true remainder.
IntegerPolynomial signed_prem(const IntegerPolynomial& a, const IntegerPolynomial& b);

/// Primitive gcd with positive leading coefficient.
IntegerPolynomial gcd(const IntegerPolynomial& a, const IntegerPolynomial& b);

/// Squarefree primitive part with positive leading coefficient.
IntegerPolynomial squarefree_integer(const UnivariatePolynomial& p);

/// p(x + 1), in place, O(n^2) additions.
void taylor_shift_one(IntegerPolynomial& p);

/// Sign variations of the coefficient sequence (zeros skipped).
int sign_variations(const IntegerPolynomial& p);

} // namespace fewnomial
