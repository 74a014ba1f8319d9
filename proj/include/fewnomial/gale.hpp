#pragma once

// Diagonalization of (d, l)-dense systems onto their W-monomials, the dual
// system in l variables, its hypotheses, and the polynomial witnesses used in
// the Khovanskii-Rolle part of the bound (g_k, toric Jacobians).

#include "fewnomial/lattice.hpp"
#include "fewnomial/laurent.hpp"
#include "fewnomial/support.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace fewnomial {

/// n Laurent polynomials in n variables over a common declared support.
/// Column c of the coefficient matrix belongs to support.points()[c].
struct FewnomialSystem {
    std::size_t nvars = 0;
    SupportSet support;
    std::vector<std::vector<Rational>> coefficients;

    /// Support is the union of the polynomials' supports.
    static FewnomialSystem from_polynomials(const std::vector<LaurentPolynomial>& polys);
    std::vector<LaurentPolynomial> polynomials() const;
};

struct DiagonalizedSystem {
    DenseDecomposition decomposition;
    /// h_i in l variables, supported on the simplex d * Delta_l.
    std::vector<LaurentPolynomial> h;
};

/// Solves the system for the W-monomials: x^(w_i - v0) = h_i(x^v_1, ..., x^v_l).
/// Throws AlgebraicPreconditionError when the decomposition does not match
/// the support or the W-coefficient block is singular.
DiagonalizedSystem diagonalize(const FewnomialSystem& sys, const DenseDecomposition& dec);

/// The system x^(w_i) - x^(v0) h_i(x^v) = 0 over the full support of dec.
FewnomialSystem reconstruct_system(const DiagonalizedSystem& diag);

struct GaleRelation {
    ExponentVector beta;  // length l
    ExponentVector gamma; // length n
    friend bool operator==(const GaleRelation&, const GaleRelation&) = default;
};

/// y^beta_j h(y)^gamma_j = 1 for j = 1..l.
struct GaleSystem {
    long d = 1;
    std::size_t ell = 0;
    std::size_t n = 0;
    std::vector<LaurentPolynomial> h;
    std::vector<GaleRelation> relations;
};

/// Relations among v_1..v_l, w_1 - v0, ..., w_n - v0 as a matrix with rows
/// (beta, gamma), i.e. the stacked exponent vectors whose left kernel is taken.
IntegerMatrix relation_source_matrix(const DenseDecomposition& dec);

/// The saturated module of all linear relations.
Sublattice default_relations(const DenseDecomposition& dec);

/// Rows of `relations` are (beta, gamma) in Z^(l + n). Throws
/// AlgebraicPreconditionError unless there are l independent rows, each a relation.
GaleSystem build_gale_system(const DiagonalizedSystem& diag, const Sublattice& relations);

/// y^(beta+) h^(gamma+) - y^(beta-) h^(gamma-) for relation j (1-based).
LaurentPolynomial gale_equation_as_polynomial(const GaleSystem& gs, std::size_t j);

/// The same with every exponent doubled, so that g_k = 0 also captures
/// y^beta h^gamma = -1 (1-based k).
LaurentPolynomial build_gk(const GaleSystem& gs, std::size_t k);

struct GaleHypotheses {
    LatticeIndex span_index;
    bool span_odd = false;
    Integer relation_index_in_saturation;
    bool relation_odd = false;
    bool relations_full_rank = false;
    bool positive_case_ok = false;
    bool real_case_ok = false;
};

/// Relations must lie in the relation module of the decomposition
/// (AlgebraicPreconditionError otherwise); rank defects show up as flags.
GaleHypotheses check_hypotheses(const SupportSet& a, const Sublattice& relations, const DenseDecomposition& dec);

struct HomogenizedRelationRow {
    Integer b;
    ExponentVector beta;
    ExponentVector gamma;
};

/// b_k = sum beta_k + d * sum gamma_k.
HomogenizedRelationRow homogenize(const GaleRelation& r, long d);

enum class MinorScope { AllOrders, MaximalOnly };

struct GenericityCheck {
    bool ok = true;
    /// Row and column indices of the first vanishing minor, when !ok.
    std::vector<std::size_t> rows;
    std::vector<std::size_t> cols;
};

/// Checks that the minors of the matrix with rows (-b_k, beta_k, gamma_k) are nonzero.
GenericityCheck check_genericity_minors(const std::vector<HomogenizedRelationRow>& rows,
                                        MinorScope scope = MinorScope::AllOrders);

struct JacobianWitness {
    std::size_t j = 0;
    LaurentPolynomial upsilon_times_J;
    long expected_degree = 0;
    long actual_degree = 0;
    bool is_polynomial = false;
};

/// Upsilon * J(f_1..f_j, G_{j+1}..G_l) with Upsilon = prod y_m * prod h_i and
/// f_k = sum beta_k,m log|y_m| + sum gamma_k,i log|h_i|.
///
/// G lists G_{j+1}, ..., G_l (size l - j); G_i must have degree 2^(l-i) n d,
/// where d is the largest degree of the h_i. Rows k <= j of the toric Jacobian
/// are kept over the common denominator prod h_i, and the final division by
/// its (j-1)-st power must be exact; InternalError otherwise.
JacobianWitness jacobian_witness(const std::vector<LaurentPolynomial>& h, const std::vector<GaleRelation>& relations,
                                 const std::vector<LaurentPolynomial>& G, std::size_t j);

/// Dense polynomial of the given total degree in nvars variables. Every one of
/// the binom(degree + nvars, nvars) coefficients is p/q with p uniform on
/// {-20..20} \ {0} and q uniform on {1..4}, drawn in graded order.
LaurentPolynomial random_generic_polynomial(long degree, std::size_t nvars, std::uint64_t seed);

} // namespace fewnomial
