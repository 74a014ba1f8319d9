#pragma once

// Certified counting of real solutions of bivariate systems.
//
// The plane is sheared by x = s - lambda*y so that both polynomials have a
// constant leading coefficient in y. The resultant in y then vanishes exactly
// at the s-values of common zeros, and on each fiber the subresultants give y
// as a polynomial in s modulo a factor of the squarefree resultant. Every
// candidate point is certified by exact back-substitution.

#include "fewnomial/bounds.hpp"
#include "fewnomial/gale.hpp"
#include "fewnomial/roots.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace fewnomial {

/// A real common zero (x(t0), y(t0)) where t0 is a real root of `defining`.
/// The separating coordinate t is a positive multiple of x + lambda*y chosen
/// so that `defining` is monic with integer coefficients.
struct AlgebraicPoint2D {
    UnivariatePolynomial defining; // squarefree factor of the resultant, in t
    RealRoot root;                 // t0
    UnivariatePolynomial x_map;    // x as a polynomial in t of degree < deg defining
    UnivariatePolynomial y_map;
    int x_sign = 0;
    int y_sign = 0;
    bool nondegenerate = false;    // nonzero Jacobian at the point
    std::string x_preview;         // 3 decimals
    std::string y_preview;
    Rational x_approx;             // within 10^-6, used for ordering
    Rational y_approx;
};

struct CountReport {
    /// Distinct real solutions with both coordinates nonzero.
    long total_real = 0;
    long nondegenerate_real = 0;
    /// Solutions on a coordinate axis; excluded from every other count.
    long on_axes = 0;
    /// "real", "positive", and for Gale systems "m_real", "delta".
    std::map<std::string, long> per_region;
    /// Gale points with some h_i = 0; not part of any region count.
    long boundary = 0;
    /// Points with nonzero coordinates, sorted by (x, y).
    std::vector<AlgebraicPoint2D> points;
    long shear = 0;
    int attempts = 0;
};

struct CountOptions {
    std::uint64_t seed = 1;
    int max_attempts = 16;
    long initial_shear_range = 4; // doubled after each failed attempt
};

CountReport count_real_solutions_2d(const LaurentPolynomial& p, const LaurentPolynomial& q,
                                    const CountOptions& options = {});

enum class SignRequirement { Positive, Nonzero, Any };

struct RegionSpec {
    std::vector<SignRequirement> coordinate_signs; // one per variable
    std::vector<std::pair<LaurentPolynomial, SignRequirement>> h_constraints;
};

struct Classification {
    long count = 0;
    /// Points where a constrained polynomial vanishes.
    long boundary = 0;
};

/// Exact sign of a Laurent polynomial at a certified point (nonzero coordinates).
int sign_at_point(const LaurentPolynomial& f, const AlgebraicPoint2D& point);

Classification classify(const CountReport& report, const RegionSpec& region);

RegionSpec positive_orthant();
/// y != 0 and every h_i != 0.
RegionSpec gale_real_region(const std::vector<LaurentPolynomial>& h);
/// y > 0 and every h_i > 0.
RegionSpec gale_delta_region(const std::vector<LaurentPolynomial>& h);

/// l = 2 only. Counts the cleared Gale equations and fills "m_real" and
/// "delta"; points on some h_i = 0 go to the boundary bucket.
CountReport count_gale(const GaleSystem& gs, const CountOptions& options = {});

struct CorrespondenceVerdict {
    GaleHypotheses hypotheses;
    long original_positive = 0;
    long gale_delta = 0;
    long original_positive_nondegenerate = 0;
    long gale_delta_nondegenerate = 0;
    bool positive_equal = false;
    bool real_checked = false; // real_case_ok
    long original_real = 0;
    long gale_m_real = 0;
    bool real_equal = false;
    bool ok() const { return positive_equal && (!real_checked || real_equal); }
};

/// n = l = 2. Uses the saturated relation module unless relations are given.
CorrespondenceVerdict verify_correspondence(const FewnomialSystem& sys, const DenseDecomposition& dec,
                                            const std::optional<Sublattice>& relations = std::nullopt,
                                            const CountOptions& options = {});

/// The verdict for counts already computed by count_real_solutions_2d and count_gale.
CorrespondenceVerdict compare_counts(const GaleHypotheses& hypotheses, const CountReport& original,
                                     const CountReport& gale);

bool check_bound_compliance(long count, const BoundReport& bound);

} // namespace fewnomial
