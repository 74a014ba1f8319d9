#pragma once

// Integer linear algebra: Smith normal form, integer kernels, saturation and
// sublattice indices.

#include "fewnomial/laurent.hpp"
#include "fewnomial/rational.hpp"

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

namespace fewnomial {

class IntegerMatrix {
public:
    IntegerMatrix() = default;
    IntegerMatrix(std::size_t rows, std::size_t cols);
    static IntegerMatrix identity(std::size_t n);
    /// Rows must all have the same length.
    static IntegerMatrix from_rows(const std::vector<std::vector<Integer>>& rows);
    static IntegerMatrix from_rows(const std::vector<ExponentVector>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Integer& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const Integer& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

    std::vector<Integer> row(std::size_t r) const;
    IntegerMatrix transpose() const;

    void swap_rows(std::size_t a, std::size_t b);
    void swap_cols(std::size_t a, std::size_t b);
    /// row[target] += factor * row[source]
    void add_row_multiple(std::size_t target, std::size_t source, const Integer& factor);
    void add_col_multiple(std::size_t target, std::size_t source, const Integer& factor);
    void negate_row(std::size_t r);
    void negate_col(std::size_t c);

    friend IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b);
    friend bool operator==(const IntegerMatrix&, const IntegerMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Integer> entries_;
};

std::string to_string(const IntegerMatrix& m);

Integer determinant(const IntegerMatrix& m);
std::size_t rank(const IntegerMatrix& m);

struct SmithForm {
    IntegerMatrix U;
    IntegerMatrix D;
    IntegerMatrix V;

    /// Nonzero diagonal entries of D, in order.
    std::vector<Integer> elementary_divisors() const;
    std::size_t rank() const { return elementary_divisors().size(); }
};

/// U * A * V = D with U, V unimodular and d_1 | d_2 | ... on the diagonal.
SmithForm smith_normal_form(const IntegerMatrix& a);

/// A lattice given by generator rows in Z^ambient_rank; the rows are linearly
/// independent over Q.
struct Sublattice {
    std::size_t ambient_rank = 0;
    IntegerMatrix basis;

    std::size_t rank() const { return basis.rows(); }
};

/// Rejects dependent rows (InvalidInput).
Sublattice make_sublattice(std::size_t ambient_rank, const IntegerMatrix& rows);

/// Basis of { v in Z^rows : v * A = 0 }, always saturated.
Sublattice kernel_basis(const IntegerMatrix& a);

/// Integer points of the rational span of L.
Sublattice saturation(const Sublattice& lattice);

struct InfiniteIndex {
    friend bool operator==(InfiniteIndex, InfiniteIndex) { return true; }
};
using LatticeIndex = std::variant<Integer, InfiniteIndex>;

inline bool is_infinite(const LatticeIndex& i) { return std::holds_alternative<InfiniteIndex>(i); }
std::string to_string(const LatticeIndex& i);

/// [super : sub]. Throws InvalidInput if sub is not inside the rational span of super.
LatticeIndex lattice_index(const Sublattice& sub, const Sublattice& super);

/// Index in Z^n of the lattice generated by differences of points of A.
LatticeIndex affine_span_index(const std::vector<ExponentVector>& points);

/// True when v lies in the lattice (integer combination of the basis rows).
bool contains(const Sublattice& lattice, const std::vector<Integer>& v);

} // namespace fewnomial
