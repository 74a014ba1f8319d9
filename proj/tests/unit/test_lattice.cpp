#include "generators.hpp"
#include "oracles.hpp"

#include "fewnomial/errors.hpp"
#include "fewnomial/lattice.hpp"

#include <doctest.h>

#include <functional>

using namespace fewnomial;

namespace {

oracle::RationalMatrix to_rational(const IntegerMatrix& m)
{
    oracle::RationalMatrix q(m.rows(), std::vector<Rational>(m.cols()));
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) q[r][c] = m(r, c);
    return q;
}

Integer det(const IntegerMatrix& m)
{
    const Rational d = oracle::determinant(to_rational(m));
    REQUIRE(d.get_den() == 1);
    return d.get_num();
}

// gcd of all k x k minors, by brute force over row and column subsets.
Integer determinantal_divisor(const IntegerMatrix& a, std::size_t k)
{
    Integer g = 0;
    std::vector<std::size_t> rows(k), cols(k);
    std::function<void(std::size_t, std::size_t)> pick_cols;
    std::function<void(std::size_t, std::size_t)> pick_rows = [&](std::size_t start, std::size_t depth) {
        if (depth == k) {
            pick_cols(0, 0);
            return;
        }
        for (std::size_t r = start; r < a.rows(); ++r) {
            rows[depth] = r;
            pick_rows(r + 1, depth + 1);
        }
    };
    pick_cols = [&](std::size_t start, std::size_t depth) {
        if (depth == k) {
            IntegerMatrix sub(k, k);
            for (std::size_t i = 0; i < k; ++i)
                for (std::size_t j = 0; j < k; ++j) sub(i, j) = a(rows[i], cols[j]);
            Integer m = det(sub);
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), m.get_mpz_t());
            return;
        }
        for (std::size_t c = start; c < a.cols(); ++c) {
            cols[depth] = c;
            pick_cols(c + 1, depth + 1);
        }
    };
    pick_rows(0, 0);
    return g;
}

bool is_diagonal_chain(const IntegerMatrix& d)
{
    for (std::size_t r = 0; r < d.rows(); ++r)
        for (std::size_t c = 0; c < d.cols(); ++c)
            if (r != c && d(r, c) != 0) return false;
    const std::size_t k = std::min(d.rows(), d.cols());
    for (std::size_t i = 0; i < k; ++i) {
        if (d(i, i) < 0) return false;
        if (i + 1 < k) {
            if (d(i, i) == 0 && d(i + 1, i + 1) != 0) return false;
            if (d(i, i) != 0 && d(i + 1, i + 1) % d(i, i) != 0) return false;
        }
    }
    return true;
}

Sublattice lattice_of(const IntegerMatrix& rows) { return make_sublattice(rows.cols(), rows); }

std::vector<Integer> times(const std::vector<Integer>& v, const IntegerMatrix& a)
{
    std::vector<Integer> out(a.cols(), 0);
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c) out[c] += v[r] * a(r, c);
    return out;
}

} // namespace

TEST_CASE("Smith form examples")
{
    CHECK(smith_normal_form(IntegerMatrix::identity(3)).D == IntegerMatrix::identity(3));
    const auto twos = IntegerMatrix::from_rows(std::vector<ExponentVector>{{2, 0}, {0, 2}});
    CHECK(smith_normal_form(twos).D == twos);
    const auto a = IntegerMatrix::from_rows(std::vector<ExponentVector>{{2, 4}, {6, 8}});
    CHECK(smith_normal_form(a).elementary_divisors() == std::vector<Integer>{2, 4});
}

TEST_CASE("Smith form properties with determinantal-divisor oracle")
{
    Rng rng(11);
    for (int trial = 0; trial < 120; ++trial) {
        const std::size_t rows = static_cast<std::size_t>(rng.uniform(1, 4));
        const std::size_t cols = static_cast<std::size_t>(rng.uniform(1, 4));
        const std::size_t rk = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(std::min(rows, cols))));
        IntegerMatrix a = rng.uniform(0, 1) ? testgen::integer_matrix(rng, rows, cols, 12)
                                            : testgen::matrix_of_rank(rng, rows, cols, rk, 6);
        const SmithForm s = smith_normal_form(a);
        CHECK(s.U * a * s.V == s.D);
        CHECK(abs(det(s.U)) == 1);
        CHECK(abs(det(s.V)) == 1);
        CHECK(is_diagonal_chain(s.D));
        const auto divisors = s.elementary_divisors();
        CHECK(divisors.size() == oracle::rank(to_rational(a)));
        Integer product = 1;
        for (std::size_t k = 1; k <= divisors.size(); ++k) {
            product *= divisors[k - 1];
            CHECK(product == determinantal_divisor(a, k));
        }
    }
}

TEST_CASE("kernel examples")
{
    const auto vw = IntegerMatrix::from_rows(std::vector<ExponentVector>{{2, 1}, {2, -1}, {-5, 0}, {1, 0}});
    const Sublattice k = kernel_basis(vw);
    CHECK(k.rank() == 2);
    CHECK(contains(k, {1, 1, 1, 1}));
    CHECK(contains(k, {2, 2, 1, -3}));
    CHECK(kernel_basis(IntegerMatrix::identity(3)).rank() == 0);
    const auto equal = IntegerMatrix::from_rows(std::vector<ExponentVector>{{3, 5}, {3, 5}});
    CHECK(contains(kernel_basis(equal), {1, -1}));
}

TEST_CASE("kernel properties")
{
    Rng rng(12);
    for (int trial = 0; trial < 120; ++trial) {
        const std::size_t rows = static_cast<std::size_t>(rng.uniform(1, 6));
        const std::size_t cols = static_cast<std::size_t>(rng.uniform(1, 5));
        const std::size_t rk = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(std::min(rows, cols))));
        const IntegerMatrix a = testgen::matrix_of_rank(rng, rows, cols, rk, 5);
        const Sublattice k = kernel_basis(a);
        CHECK(k.rank() == rows - oracle::rank(to_rational(a)));
        for (std::size_t r = 0; r < k.rank(); ++r)
            for (const auto& x : times(k.basis.row(r), a)) CHECK(x == 0);
        if (k.rank() > 0) {
            CHECK(lattice_index(k, saturation(k)) == LatticeIndex(Integer(1)));
            auto v = k.basis.row(0);
            for (auto& x : v) x *= 2;
            CHECK(contains(k, v));
        }
    }
}

TEST_CASE("saturation")
{
    const Sublattice l = lattice_of(IntegerMatrix::from_rows(std::vector<ExponentVector>{{2, 0}}));
    const Sublattice s = saturation(l);
    CHECK(contains(s, {1, 0}));
    CHECK(!contains(l, {1, 0}));
    CHECK(lattice_index(l, s) == LatticeIndex(Integer(2)));

    const Sublattice z2 = lattice_of(IntegerMatrix::identity(2));
    const Sublattice z2s = saturation(z2);
    CHECK(contains(z2s, {1, 0}));
    CHECK(contains(z2s, {0, 1}));
    CHECK(lattice_index(z2, z2s) == LatticeIndex(Integer(1)));

    // Index of the worked example's relations in their saturation: the gcd of
    // the 2 x 2 minors of the basis.
    const auto rel = IntegerMatrix::from_rows(std::vector<ExponentVector>{{2, 2, 1, -3}, {1, 1, 1, 1}});
    CHECK(lattice_index(lattice_of(rel), saturation(lattice_of(rel))) == LatticeIndex(determinantal_divisor(rel, 2)));

    Rng rng(13);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = static_cast<std::size_t>(rng.uniform(2, 5));
        const std::size_t k = static_cast<std::size_t>(rng.uniform(1, static_cast<long>(n)));
        const IntegerMatrix b = testgen::integer_matrix(rng, k, n, 6);
        if (oracle::rank(to_rational(b)) < k) continue;
        const Sublattice l = lattice_of(b);
        const Sublattice s = saturation(l);
        CHECK(s.rank() == k);
        CHECK(lattice_index(saturation(s), s) == LatticeIndex(Integer(1)));
        CHECK(lattice_index(l, s) == LatticeIndex(determinantal_divisor(b, k)));
        for (std::size_t r = 0; r < k; ++r) CHECK(contains(s, b.row(r)));
    }
}

TEST_CASE("lattice index")
{
    const Sublattice z2 = lattice_of(IntegerMatrix::identity(2));
    const Sublattice two = lattice_of(IntegerMatrix::from_rows(std::vector<ExponentVector>{{2, 0}, {0, 2}}));
    CHECK(lattice_index(two, z2) == LatticeIndex(Integer(4)));
    CHECK(lattice_index(two, two) == LatticeIndex(Integer(1)));
    const Sublattice line = lattice_of(IntegerMatrix::from_rows(std::vector<ExponentVector>{{1, 0}}));
    CHECK(is_infinite(lattice_index(line, z2)));
    const Sublattice other = lattice_of(IntegerMatrix::from_rows(std::vector<ExponentVector>{{0, 1}}));
    CHECK_THROWS_AS(lattice_index(other, line), InvalidInput);
}

TEST_CASE("lattice index is multiplicative along chains")
{
    Rng rng(14);
    for (int trial = 0; trial < 80; ++trial) {
        const std::size_t n = static_cast<std::size_t>(rng.uniform(1, 4));
        const IntegerMatrix b2 = testgen::integer_matrix(rng, n, n, 5);
        const IntegerMatrix m = testgen::integer_matrix(rng, n, n, 4);
        const Integer d2 = det(b2), dm = det(m);
        if (d2 == 0 || dm == 0) continue;
        const Sublattice l3 = lattice_of(IntegerMatrix::identity(n));
        const Sublattice l2 = lattice_of(b2);
        const Sublattice l1 = lattice_of(m * b2);
        CHECK(lattice_index(l2, l3) == LatticeIndex(Integer(abs(d2))));
        CHECK(lattice_index(l1, l2) == LatticeIndex(Integer(abs(dm))));
        CHECK(lattice_index(l1, l3) == LatticeIndex(Integer(abs(d2 * dm))));
    }
}

TEST_CASE("affine span index")
{
    CHECK(affine_span_index({{0, 0}, {1, 0}, {0, 1}}) == LatticeIndex(Integer(1)));
    CHECK(affine_span_index({{0, 0}, {2, 0}, {0, 2}}) == LatticeIndex(Integer(4)));
    const std::vector<ExponentVector> worked{{-5, 0}, {0, 0}, {2, 1}, {2, -1}, {4, 2}, {4, 0}, {4, -2}, {1, 0}};
    CHECK(affine_span_index(worked) == LatticeIndex(Integer(1)));
    CHECK(is_infinite(affine_span_index({{0, 0}, {1, 1}, {2, 2}})));
    CHECK_THROWS_AS(affine_span_index({{0, 0}}), InvalidInput);

    Rng rng(15);
    for (int trial = 0; trial < 60; ++trial) {
        std::vector<ExponentVector> pts;
        const long k = rng.uniform(2, 6);
        for (long i = 0; i < k; ++i) pts.push_back(testgen::exponent(rng, 2, -6, 6));
        const LatticeIndex base = affine_span_index(pts);
        const ExponentVector shift = testgen::exponent(rng, 2, -10, 10);
        std::vector<ExponentVector> moved;
        for (const auto& p : pts) moved.push_back(p + shift);
        CHECK(affine_span_index(moved) == base);
        std::rotate(pts.begin(), pts.begin() + 1, pts.end());
        CHECK(affine_span_index(pts) == base);
    }
}
