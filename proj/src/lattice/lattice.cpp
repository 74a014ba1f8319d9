#include "fewnomial/lattice.hpp"

#include "fewnomial/errors.hpp"
#include "fewnomial/resultant.hpp"

#include <optional>
#include <sstream>

namespace fewnomial {

IntegerMatrix::IntegerMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}

IntegerMatrix IntegerMatrix::identity(std::size_t n)
{
    IntegerMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntegerMatrix IntegerMatrix::from_rows(const std::vector<std::vector<Integer>>& rows)
{
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    IntegerMatrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) throw InvalidInput("ragged matrix rows");
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
    }
    return m;
}

IntegerMatrix IntegerMatrix::from_rows(const std::vector<ExponentVector>& rows)
{
    std::vector<std::vector<Integer>> converted;
    for (const auto& row : rows) {
        std::vector<Integer> r;
        for (long v : row) r.emplace_back(v);
        converted.push_back(std::move(r));
    }
    return from_rows(converted);
}

std::vector<Integer> IntegerMatrix::row(std::size_t r) const
{
    return {entries_.begin() + static_cast<long>(r * cols_), entries_.begin() + static_cast<long>((r + 1) * cols_)};
}

IntegerMatrix IntegerMatrix::transpose() const
{
    IntegerMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

void IntegerMatrix::swap_rows(std::size_t a, std::size_t b)
{
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

void IntegerMatrix::swap_cols(std::size_t a, std::size_t b)
{
    if (a == b) return;
    for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
}

void IntegerMatrix::add_row_multiple(std::size_t target, std::size_t source, const Integer& factor)
{
    for (std::size_t c = 0; c < cols_; ++c) (*this)(target, c) += factor * (*this)(source, c);
}

void IntegerMatrix::add_col_multiple(std::size_t target, std::size_t source, const Integer& factor)
{
    for (std::size_t r = 0; r < rows_; ++r) (*this)(r, target) += factor * (*this)(r, source);
}

void IntegerMatrix::negate_row(std::size_t r)
{
    for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) = -(*this)(r, c);
}

void IntegerMatrix::negate_col(std::size_t c)
{
    for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = -(*this)(r, c);
}

IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b)
{
    if (a.cols_ != b.rows_) throw InvalidInput("matrix product dimension mismatch");
    IntegerMatrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Integer& v = a(i, k);
            if (v == 0) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += v * b(k, j);
        }
    return out;
}

std::string to_string(const IntegerMatrix& m)
{
    std::ostringstream out;
    out << "[";
    for (std::size_t r = 0; r < m.rows(); ++r) {
        out << (r ? ", [" : "[");
        for (std::size_t c = 0; c < m.cols(); ++c) out << (c ? ", " : "") << m(r, c).get_str();
        out << "]";
    }
    out << "]";
    return out.str();
}

Integer determinant(const IntegerMatrix& m)
{
    if (m.rows() != m.cols()) throw InvalidInput("determinant of a non-square matrix");
    IntegerMatrixRows rows;
    for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(m.row(r));
    return bareiss_determinant(std::move(rows));
}

namespace {

using RationalRows = std::vector<std::vector<Rational>>;

RationalRows to_rational_rows(const IntegerMatrix& m)
{
    RationalRows out(m.rows(), std::vector<Rational>(m.cols()));
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) out[r][c] = m(r, c);
    return out;
}

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> row_reduce(RationalRows& m, std::size_t cols)
{
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t c = 0; c < cols && row < m.size(); ++c) {
        std::size_t p = row;
        while (p < m.size() && m[p][c] == 0) ++p;
        if (p == m.size()) continue;
        std::swap(m[row], m[p]);
        const Rational inv = 1 / m[row][c];
        for (auto& v : m[row]) v *= inv;
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == row || m[r][c] == 0) continue;
            const Rational f = m[r][c];
            for (std::size_t k = 0; k < m[r].size(); ++k) m[r][k] -= f * m[row][k];
        }
        pivots.push_back(c);
        ++row;
    }
    return pivots;
}

// Coordinates c with c * basis = v, if v is in the rational row span.
std::optional<std::vector<Rational>> coordinates(const IntegerMatrix& basis, const std::vector<Integer>& v)
{
    // Solve basis^T c^T = v^T: columns of the augmented system are basis rows.
    const std::size_t r = basis.rows();
    const std::size_t n = basis.cols();
    RationalRows aug(n, std::vector<Rational>(r + 1));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < r; ++j) aug[i][j] = basis(j, i);
        aug[i][r] = v[i];
    }
    auto pivots = row_reduce(aug, r + 1);
    if (!pivots.empty() && pivots.back() == r) return std::nullopt;
    std::vector<Rational> c(r);
    for (std::size_t k = 0; k < pivots.size(); ++k) c[pivots[k]] = aug[k][r];
    return c;
}

Sublattice from_matrix_rows(std::size_t ambient, IntegerMatrix rows)
{
    Sublattice s;
    s.ambient_rank = ambient;
    s.basis = std::move(rows);
    if (s.basis.cols() != ambient) s.basis = IntegerMatrix(0, ambient);
    return s;
}

} // namespace

std::size_t rank(const IntegerMatrix& m)
{
    auto rows = to_rational_rows(m);
    return row_reduce(rows, m.cols()).size();
}

std::vector<Integer> SmithForm::elementary_divisors() const
{
    std::vector<Integer> out;
    for (std::size_t i = 0; i < std::min(D.rows(), D.cols()); ++i)
        if (D(i, i) != 0) out.push_back(D(i, i));
    return out;
}

SmithForm smith_normal_form(const IntegerMatrix& a)
{
    const std::size_t m = a.rows();
    const std::size_t n = a.cols();
    SmithForm f{IntegerMatrix::identity(m), a, IntegerMatrix::identity(n)};
    IntegerMatrix& D = f.D;

    for (std::size_t t = 0; t < std::min(m, n); ++t) {
        while (true) {
            // Pivot: nonzero entry of least absolute value in the trailing block.
            std::size_t pr = m, pc = n;
            for (std::size_t i = t; i < m; ++i)
                for (std::size_t j = t; j < n; ++j)
                    if (D(i, j) != 0 && (pr == m || abs(D(i, j)) < abs(D(pr, pc)))) {
                        pr = i;
                        pc = j;
                    }
            if (pr == m) return f;
            D.swap_rows(t, pr);
            f.U.swap_rows(t, pr);
            D.swap_cols(t, pc);
            f.V.swap_cols(t, pc);

            bool clean = true;
            for (std::size_t i = t + 1; i < m; ++i) {
                Integer q = D(i, t) / D(t, t);
                if (q != 0) {
                    D.add_row_multiple(i, t, -q);
                    f.U.add_row_multiple(i, t, -q);
                }
                if (D(i, t) != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                Integer q = D(t, j) / D(t, t);
                if (q != 0) {
                    D.add_col_multiple(j, t, -q);
                    f.V.add_col_multiple(j, t, -q);
                }
                if (D(t, j) != 0) clean = false;
            }
            if (!clean) continue;

            // Divisibility: fold an offending row into the pivot row and repeat.
            std::size_t bad = m;
            for (std::size_t i = t + 1; i < m && bad == m; ++i)
                for (std::size_t j = t + 1; j < n; ++j)
                    if (D(i, j) % D(t, t) != 0) {
                        bad = i;
                        break;
                    }
            if (bad == m) break;
            D.add_row_multiple(t, bad, 1);
            f.U.add_row_multiple(t, bad, 1);
        }
        if (D(t, t) < 0) {
            D.negate_row(t);
            f.U.negate_row(t);
        }
    }
    return f;
}

Sublattice make_sublattice(std::size_t ambient_rank, const IntegerMatrix& rows)
{
    if (rows.rows() > 0 && rows.cols() != ambient_rank) throw InvalidInput("sublattice generators have the wrong length");
    if (rank(rows) != rows.rows()) throw InvalidInput("sublattice generators are linearly dependent");
    return from_matrix_rows(ambient_rank, rows);
}

Sublattice kernel_basis(const IntegerMatrix& a)
{
    const std::size_t m = a.rows();
    if (a.cols() == 0) return from_matrix_rows(m, IntegerMatrix::identity(m));
    SmithForm f = smith_normal_form(a);
    const std::size_t r = f.rank();
    IntegerMatrix k(m - r, m);
    for (std::size_t i = r; i < m; ++i)
        for (std::size_t c = 0; c < m; ++c) k(i - r, c) = f.U(i, c);
    return from_matrix_rows(m, std::move(k));
}

Sublattice saturation(const Sublattice& lattice)
{
    const std::size_t n = lattice.ambient_rank;
    if (lattice.rank() == 0) return from_matrix_rows(n, IntegerMatrix(0, n));
    // Vectors orthogonal to the span, then the integer vectors orthogonal to those.
    Sublattice normals = kernel_basis(lattice.basis.transpose());
    if (normals.rank() == 0) return from_matrix_rows(n, IntegerMatrix::identity(n));
    return kernel_basis(normals.basis.transpose());
}

std::string to_string(const LatticeIndex& i)
{
    if (is_infinite(i)) return "INFINITE";
    return std::get<Integer>(i).get_str();
}

LatticeIndex lattice_index(const Sublattice& sub, const Sublattice& super)
{
    if (sub.ambient_rank != super.ambient_rank) throw InvalidInput("lattices live in different ambient spaces");
    const std::size_t r = super.rank();
    IntegerMatrix coords(sub.rank(), r);
    for (std::size_t i = 0; i < sub.rank(); ++i) {
        auto c = coordinates(super.basis, sub.basis.row(i));
        if (!c) throw InvalidInput("sublattice is not contained in the rational span of the superlattice");
        for (std::size_t j = 0; j < r; ++j) {
            if ((*c)[j].get_den() != 1) throw InvalidInput("sublattice is not contained in the superlattice");
            coords(i, j) = (*c)[j].get_num();
        }
    }
    if (sub.rank() != r) return InfiniteIndex{};
    if (r == 0) return Integer(1);
    Integer index = 1;
    for (const auto& d : smith_normal_form(coords).elementary_divisors()) index *= d;
    return index;
}

LatticeIndex affine_span_index(const std::vector<ExponentVector>& points)
{
    if (points.size() < 2) throw InvalidInput("affine span index needs at least two points");
    const std::size_t n = points.front().size();
    std::vector<ExponentVector> diffs;
    for (std::size_t i = 1; i < points.size(); ++i) {
        if (points[i].size() != n) throw InvalidInput("points of different dimension");
        diffs.push_back(points[i] - points.front());
    }
    SmithForm f = smith_normal_form(IntegerMatrix::from_rows(diffs));
    auto divisors = f.elementary_divisors();
    if (divisors.size() < n) return InfiniteIndex{};
    Integer index = 1;
    for (const auto& d : divisors) index *= d;
    return index;
}

bool contains(const Sublattice& lattice, const std::vector<Integer>& v)
{
    if (v.size() != lattice.ambient_rank) throw InvalidInput("vector has the wrong length");
    auto c = coordinates(lattice.basis, v);
    if (!c) return false;
    for (const auto& x : *c)
        if (x.get_den() != 1) return false;
    return true;
}

} // namespace fewnomial
