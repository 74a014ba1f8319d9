#pragma once

// Certified real-root machinery for univariate polynomials: Sturm counts,
// Descartes bisection isolation, exact sign decisions at algebraic numbers.

#include "fewnomial/univariate.hpp"

#include <optional>
#include <vector>

namespace fewnomial {

struct Interval {
    Rational lo;
    Rational hi;

    Rational width() const { return hi - lo; }
    Rational midpoint() const { return (lo + hi) / 2; }
};

/// One real root of a squarefree integer polynomial, either exact or isolated
/// in an open interval whose endpoints are non-roots of opposite sign.
class RealRoot {
public:
    RealRoot(IntegerPolynomial defining, const Rational& exact);
    RealRoot(IntegerPolynomial defining, Interval isolating);

    const IntegerPolynomial& defining() const { return defining_; }
    bool is_exact() const { return exact_; }
    /// Exact value; only meaningful when is_exact().
    const Rational& value() const { return interval_.lo; }
    /// Degenerate [v, v] for exact roots.
    const Interval& interval() const { return interval_; }

    /// Halves the isolating interval (no-op for exact roots). If the midpoint is
    /// the root the representation becomes exact.
    void bisect();
    void refine_to(const Rational& max_width);

    /// Lower/upper rational approximations, for ordering and display.
    Rational lower() const { return interval_.lo; }
    Rational upper() const { return interval_.hi; }

private:
    IntegerPolynomial defining_;
    Interval interval_;
    bool exact_;
    int sign_lo_ = 0;
};

struct RootIsolation {
    std::vector<Rational> exact_roots;
    std::vector<Interval> intervals;
    /// The same roots as RealRoot objects, sorted increasingly.
    std::vector<RealRoot> roots;
};

/// Distinct real roots of p in (lo, hi]; a missing endpoint means infinity.
int sturm_count(const UnivariatePolynomial& p, const std::optional<Rational>& lo, const std::optional<Rational>& hi);

/// Sturm sequence of the squarefree part, integer coefficients with positive contents removed.
std::vector<IntegerPolynomial> sturm_sequence(const UnivariatePolynomial& p);

RootIsolation isolate_real_roots(const UnivariatePolynomial& p);
/// Isolation of an already squarefree primitive integer polynomial.
RootIsolation isolate_real_roots(const IntegerPolynomial& squarefree);

/// Descartes sign-variation bound for the roots of q in the open interval.
int descartes_bound(const IntegerPolynomial& q, const Interval& interval);

/// Exact sign of q at the root. The root may be refined in place.
int sign_at_root(const UnivariatePolynomial& q, RealRoot& root);
int sign_at_root(const IntegerPolynomial& q, RealRoot& root);

/// Rational interval containing q(root), narrower than max_width. Refines root.
Interval enclose_value(const UnivariatePolynomial& q, RealRoot& root, const Rational& max_width);

/// Interval Horner evaluation of q over [lo, hi].
Interval evaluate_on(const UnivariatePolynomial& q, const Interval& x);
Interval evaluate_on(const IntegerPolynomial& q, const Interval& x);

} // namespace fewnomial
