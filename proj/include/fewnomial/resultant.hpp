#pragma once

// Sylvester resultants and subresultant coefficients of bivariate polynomials.
//
// Every determinant is a polynomial in the surviving variable. It is computed
// by evaluating the Sylvester-type matrix at integer points, taking
// fraction-free (Bareiss) determinants, and interpolating, with a degree bound
// read off the row and column weights of the matrix.

#include "fewnomial/laurent.hpp"
#include "fewnomial/univariate.hpp"

#include <vector>

namespace fewnomial {

using IntegerMatrixRows = std::vector<std::vector<Integer>>;

/// Determinant of a square integer matrix by fraction-free elimination.
Integer bareiss_determinant(IntegerMatrixRows m);

/// Determinant over Q by ordinary Gaussian elimination.
Rational rational_determinant(std::vector<std::vector<Rational>> m);

/// Coefficient of x_var^exponent in a bivariate polynomial, as a polynomial in the other variable.
UnivariatePolynomial coefficient_in(const LaurentPolynomial& p, std::size_t var, long exponent);

/// Subresultant coefficient S_{k,j} of univariate integer polynomials with
/// formal degrees m = size(p) - 1 and n = size(q) - 1 (leading entries may be 0).
/// S_{0,0} is the resultant and S_{k,k} the k-th principal subresultant coefficient.
Integer subresultant_coefficient(const IntegerPolynomial& p, const IntegerPolynomial& q, int k, int j);

/// Res_{x_eliminate}(p, q) as a polynomial in the other variable.
UnivariatePolynomial resultant(const LaurentPolynomial& p, const LaurentPolynomial& q, std::size_t eliminate);

/// S_{k,j} of p and q with respect to x_eliminate, as a polynomial in the other variable.
UnivariatePolynomial subresultant_coefficient(const LaurentPolynomial& p, const LaurentPolynomial& q,
                                              std::size_t eliminate, int k, int j);

/// Several subresultant coefficients sharing one set of evaluations.
/// Each request is (k, j); results come back in the same order.
std::vector<UnivariatePolynomial> subresultant_coefficients(const LaurentPolynomial& p, const LaurentPolynomial& q,
                                                            std::size_t eliminate,
                                                            const std::vector<std::pair<int, int>>& requests);

/// Newton interpolation through (xs[i], ys[i]) with distinct nodes.
UnivariatePolynomial interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys);

} // namespace fewnomial
