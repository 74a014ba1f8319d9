#pragma once

// Support sets: (d, l)-dense decompositions, Newton polygon volumes and the
// planar mixed volume.

#include "fewnomial/lattice.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace fewnomial {

/// Finite set of exponent vectors, kept sorted and duplicate-free.
class SupportSet {
public:
    explicit SupportSet(std::size_t nvars = 0) : nvars_(nvars) {}
    SupportSet(std::size_t nvars, std::vector<ExponentVector> points);

    std::size_t nvars() const { return nvars_; }
    const std::vector<ExponentVector>& points() const { return points_; }
    std::size_t size() const { return points_.size(); }
    bool contains(const ExponentVector& p) const;

    friend bool operator==(const SupportSet&, const SupportSet&) = default;

private:
    std::size_t nvars_;
    std::vector<ExponentVector> points_;
};

SupportSet support_of(const LaurentPolynomial& p);
SupportSet support_union(const std::vector<LaurentPolynomial>& system);

/// A = psi(d * simplex_l ∩ Z^l) ∪ W with psi(p) = v0 + sum_m p_m v_m.
struct DenseDecomposition {
    long d = 1;
    std::size_t ell = 1;
    IntegerMatrix psi_linear;      // n x l, column m is v_m
    ExponentVector psi_offset;     // v0
    std::vector<ExponentVector> W; // n points

    std::size_t nvars() const { return psi_offset.size(); }
    ExponentVector v(std::size_t m) const;
    ExponentVector psi(const ExponentVector& lambda) const;
};

DenseDecomposition make_decomposition(long d, const ExponentVector& v0, const std::vector<ExponentVector>& v,
                                      const std::vector<ExponentVector>& W);

/// Nonnegative integer vectors of length l with coordinate sum at most d,
/// ordered by total degree, then reverse-lexicographically.
std::vector<ExponentVector> simplex_lattice_points(long d, std::size_t ell);

struct DecompositionCheck {
    bool ok = false;
    std::vector<ExponentVector> missing; // in A but not produced
    std::vector<ExponentVector> extra;   // produced but not in A
    std::vector<std::string> problems;   // other failures, human readable
};

bool affinely_independent(const std::vector<ExponentVector>& points);

/// Also requires psi to be injective on the simplex points and disjoint from W,
/// so that |A| = binom(d + l, l) + n.
DecompositionCheck verify_decomposition(const SupportSet& a, const DenseDecomposition& dec);

struct SearchOptions {
    std::uint64_t budget = 1'000'000; // (W, v0) candidate pairs
};

/// First decomposition in candidate order, or nullopt. Throws BudgetExceeded.
std::optional<DenseDecomposition> search_decomposition(const SupportSet& a, long d, std::size_t ell,
                                                       const SearchOptions& options = {});

struct Point2 {
    Rational x;
    Rational y;
    friend bool operator==(const Point2&, const Point2&) = default;
};

/// Counterclockwise strictly convex vertex list.
struct Polytope2D {
    std::vector<Point2> vertices;
};

Polytope2D convex_hull(const std::vector<Point2>& points);
Polytope2D convex_hull(const SupportSet& a);
/// Twice the Euclidean area.
Rational doubled_area(const Polytope2D& p);

/// 2! * area(conv A) for planar A.
Integer normalized_volume(const SupportSet& a);

/// Mixed area normalized so that two standard triangles give 1.
Integer mixed_volume_2d(const SupportSet& p, const SupportSet& q);

} // namespace fewnomial
