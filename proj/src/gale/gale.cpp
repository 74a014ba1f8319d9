#include "fewnomial/gale.hpp"

#include "fewnomial/errors.hpp"
#include "fewnomial/random.hpp"
#include "fewnomial/resultant.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace fewnomial {

namespace {

using RationalRows = std::vector<std::vector<Rational>>;

// Gauss-Jordan on [m | rhs]. Returns the rank of m; rhs holds m^-1 rhs when
// the rank is full.
std::size_t solve_in_place(RationalRows m, RationalRows& rhs)
{
    const std::size_t n = m.size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < n && r < n; ++c) {
        std::size_t piv = r;
        while (piv < n && m[piv][c] == 0) ++piv;
        if (piv == n) continue;
        std::swap(m[piv], m[r]);
        std::swap(rhs[piv], rhs[r]);
        const Rational inv = 1 / m[r][c];
        for (auto& v : m[r]) v *= inv;
        for (auto& v : rhs[r]) v *= inv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == r || m[i][c] == 0) continue;
            const Rational f = m[i][c];
            for (std::size_t k = 0; k < n; ++k) m[i][k] -= f * m[r][k];
            for (std::size_t k = 0; k < rhs[i].size(); ++k) rhs[i][k] -= f * rhs[r][k];
        }
        ++r;
    }
    return r;
}

std::size_t column_of(const SupportSet& support, const ExponentVector& p)
{
    const auto& pts = support.points();
    auto it = std::lower_bound(pts.begin(), pts.end(), p);
    if (it == pts.end() || *it != p) throw InternalError("exponent missing from the declared support");
    return static_cast<std::size_t>(it - pts.begin());
}

ExponentVector positive_part(const ExponentVector& a)
{
    ExponentVector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = std::max(a[i], 0L);
    return out;
}

ExponentVector negative_part(const ExponentVector& a)
{
    ExponentVector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = std::max(-a[i], 0L);
    return out;
}

// y^beta * prod h_i^gamma_i for nonnegative exponents.
LaurentPolynomial monomial_in_h(const std::vector<LaurentPolynomial>& h, std::size_t ell, const ExponentVector& beta,
                                const ExponentVector& gamma)
{
    LaurentPolynomial out = LaurentPolynomial::monomial(beta);
    for (std::size_t i = 0; i < gamma.size(); ++i)
        if (gamma[i] > 0) out *= pow(h[i], static_cast<unsigned long>(gamma[i]));
    if (out.nvars() != ell) throw InternalError("relation arity mismatch");
    return out;
}

LaurentPolynomial signed_split(const GaleSystem& gs, std::size_t j, long factor)
{
    if (j < 1 || j > gs.relations.size()) throw InvalidInput("relation index out of range");
    const GaleRelation& r = gs.relations[j - 1];
    ExponentVector bp = scaled(positive_part(r.beta), factor), bm = scaled(negative_part(r.beta), factor);
    ExponentVector gp = scaled(positive_part(r.gamma), factor), gm = scaled(negative_part(r.gamma), factor);
    return monomial_in_h(gs.h, gs.ell, bp, gp) - monomial_in_h(gs.h, gs.ell, bm, gm);
}

bool is_relation(const IntegerMatrix& source, const std::vector<Integer>& row)
{
    for (std::size_t c = 0; c < source.cols(); ++c) {
        Integer s = 0;
        for (std::size_t r = 0; r < source.rows(); ++r) s += row[r] * source(r, c);
        if (s != 0) return false;
    }
    return true;
}

LaurentPolynomial product(const std::vector<LaurentPolynomial>& ps, std::size_t nvars, std::size_t skip)
{
    LaurentPolynomial out = LaurentPolynomial::constant(nvars, 1);
    for (std::size_t i = 0; i < ps.size(); ++i)
        if (i != skip) out *= ps[i];
    return out;
}

// Leibniz expansion; the matrices here are at most a few rows.
LaurentPolynomial polynomial_determinant(const std::vector<std::vector<LaurentPolynomial>>& m, std::size_t nvars)
{
    const std::size_t n = m.size();
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    LaurentPolynomial det(nvars);
    do {
        std::size_t inversions = 0;
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = a + 1; b < n; ++b)
                if (perm[a] > perm[b]) ++inversions;
        LaurentPolynomial term = LaurentPolynomial::constant(nvars, inversions % 2 ? -1 : 1);
        for (std::size_t r = 0; r < n && !term.is_zero(); ++r) term *= m[r][perm[r]];
        det += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return det;
}

} // namespace

FewnomialSystem FewnomialSystem::from_polynomials(const std::vector<LaurentPolynomial>& polys)
{
    if (polys.empty()) throw InvalidInput("empty system");
    FewnomialSystem sys;
    sys.nvars = polys.front().nvars();
    if (polys.size() != sys.nvars) throw InvalidInput("a fewnomial system needs as many equations as variables");
    sys.support = support_union(polys);
    for (const auto& f : polys) {
        std::vector<Rational> row(sys.support.size());
        for (const auto& [e, c] : f.terms()) row[column_of(sys.support, e)] = c;
        sys.coefficients.push_back(std::move(row));
    }
    return sys;
}

std::vector<LaurentPolynomial> FewnomialSystem::polynomials() const
{
    std::vector<LaurentPolynomial> out;
    for (const auto& row : coefficients) {
        if (row.size() != support.size()) throw InvalidInput("coefficient row does not match the support");
        LaurentPolynomial f(nvars);
        for (std::size_t c = 0; c < row.size(); ++c) f.add_term(support.points()[c], row[c]);
        out.push_back(std::move(f));
    }
    return out;
}

DiagonalizedSystem diagonalize(const FewnomialSystem& sys, const DenseDecomposition& dec)
{
    const std::size_t n = sys.nvars;
    if (sys.coefficients.size() != n) throw InvalidInput("system must have n equations");
    if (dec.nvars() != n) throw InvalidInput("decomposition and system have different dimensions");
    DecompositionCheck check = verify_decomposition(sys.support, dec);
    if (!check.ok) {
        std::string why = check.problems.empty() ? "support does not match the decomposition" : check.problems.front();
        throw AlgebraicPreconditionError("decomposition rejected: " + why);
    }

    const auto simplex = simplex_lattice_points(dec.d, dec.ell);
    RationalRows cw(n, std::vector<Rational>(n));
    RationalRows rhs(n, std::vector<Rational>(simplex.size()));
    for (std::size_t i = 0; i < n; ++i) {
        const auto& row = sys.coefficients[i];
        for (std::size_t k = 0; k < n; ++k) cw[i][k] = row[column_of(sys.support, dec.W[k])];
        for (std::size_t p = 0; p < simplex.size(); ++p) rhs[i][p] = -row[column_of(sys.support, dec.psi(simplex[p]))];
    }
    const std::size_t r = solve_in_place(cw, rhs);
    if (r < n)
        throw AlgebraicPreconditionError("coefficient block on W is singular (rank " + std::to_string(r) + " of " +
                                         std::to_string(n) + ")");

    DiagonalizedSystem out;
    out.decomposition = dec;
    for (std::size_t k = 0; k < n; ++k) {
        LaurentPolynomial h(dec.ell);
        for (std::size_t p = 0; p < simplex.size(); ++p) h.add_term(simplex[p], rhs[k][p]);
        out.h.push_back(std::move(h));
    }
    return out;
}

FewnomialSystem reconstruct_system(const DiagonalizedSystem& diag)
{
    const DenseDecomposition& dec = diag.decomposition;
    const std::size_t n = dec.nvars();
    std::vector<ExponentVector> pts = dec.W;
    const auto simplex = simplex_lattice_points(dec.d, dec.ell);
    for (const auto& p : simplex) pts.push_back(dec.psi(p));
    FewnomialSystem sys;
    sys.nvars = n;
    sys.support = SupportSet(n, pts);
    for (std::size_t k = 0; k < n; ++k) {
        std::vector<Rational> row(sys.support.size());
        row[column_of(sys.support, dec.W[k])] = 1;
        for (const auto& p : simplex) row[column_of(sys.support, dec.psi(p))] = -diag.h[k].coefficient(p);
        sys.coefficients.push_back(std::move(row));
    }
    return sys;
}

IntegerMatrix relation_source_matrix(const DenseDecomposition& dec)
{
    std::vector<ExponentVector> rows;
    for (std::size_t m = 0; m < dec.ell; ++m) rows.push_back(dec.v(m));
    for (const auto& w : dec.W) rows.push_back(w - dec.psi_offset);
    return IntegerMatrix::from_rows(rows);
}

Sublattice default_relations(const DenseDecomposition& dec)
{
    return kernel_basis(relation_source_matrix(dec));
}

GaleSystem build_gale_system(const DiagonalizedSystem& diag, const Sublattice& relations)
{
    const DenseDecomposition& dec = diag.decomposition;
    const std::size_t ell = dec.ell;
    const std::size_t n = dec.nvars();
    if (relations.ambient_rank != ell + n || relations.basis.cols() != ell + n)
        throw InvalidInput("relations must live in Z^(l + n)");
    if (relations.basis.rows() != ell || rank(relations.basis) != ell)
        throw AlgebraicPreconditionError("relation basis must have rank l = " + std::to_string(ell));
    const IntegerMatrix source = relation_source_matrix(dec);

    GaleSystem gs;
    gs.d = dec.d;
    gs.ell = ell;
    gs.n = n;
    gs.h = diag.h;
    for (std::size_t r = 0; r < ell; ++r) {
        const auto row = relations.basis.row(r);
        if (!is_relation(source, row))
            throw AlgebraicPreconditionError("row " + std::to_string(r + 1) + " is not a linear relation among V and W");
        GaleRelation rel;
        for (std::size_t c = 0; c < ell; ++c) rel.beta.push_back(row[c].get_si());
        for (std::size_t c = 0; c < n; ++c) rel.gamma.push_back(row[ell + c].get_si());
        gs.relations.push_back(std::move(rel));
    }
    return gs;
}

LaurentPolynomial gale_equation_as_polynomial(const GaleSystem& gs, std::size_t j) { return signed_split(gs, j, 1); }

LaurentPolynomial build_gk(const GaleSystem& gs, std::size_t k) { return signed_split(gs, k, 2); }

GaleHypotheses check_hypotheses(const SupportSet& a, const Sublattice& relations, const DenseDecomposition& dec)
{
    const std::size_t n = dec.nvars();
    if (a.nvars() != n || relations.ambient_rank != dec.ell + n)
        throw InvalidInput("hypothesis check received inconsistent dimensions");
    const IntegerMatrix source = relation_source_matrix(dec);
    for (std::size_t r = 0; r < relations.rank(); ++r)
        if (!is_relation(source, relations.basis.row(r)))
            throw AlgebraicPreconditionError("row " + std::to_string(r + 1) + " is not a linear relation among V and W");

    GaleHypotheses hyp;
    hyp.span_index = affine_span_index(a.points());
    hyp.span_odd = !is_infinite(hyp.span_index) && mpz_odd_p(std::get<Integer>(hyp.span_index).get_mpz_t());

    const std::size_t module_rank = dec.ell + n - rank(source);
    hyp.relations_full_rank = relations.rank() == module_rank && rank(relations.basis) == module_rank;
    LatticeIndex rel_index = lattice_index(relations, saturation(relations));
    hyp.relation_index_in_saturation = std::get<Integer>(rel_index);
    hyp.relation_odd = mpz_odd_p(hyp.relation_index_in_saturation.get_mpz_t());

    hyp.positive_case_ok = !is_infinite(hyp.span_index) && hyp.relations_full_rank;
    hyp.real_case_ok = hyp.positive_case_ok && hyp.span_odd && hyp.relation_odd;
    return hyp;
}

HomogenizedRelationRow homogenize(const GaleRelation& r, long d)
{
    HomogenizedRelationRow row{0, r.beta, r.gamma};
    row.b = coordinate_sum(r.beta) + d * coordinate_sum(r.gamma);
    return row;
}

GenericityCheck check_genericity_minors(const std::vector<HomogenizedRelationRow>& rows, MinorScope scope)
{
    GenericityCheck result;
    if (rows.empty()) return result;
    const std::size_t width = 1 + rows.front().beta.size() + rows.front().gamma.size();
    IntegerMatrixRows m;
    for (const auto& r : rows) {
        if (1 + r.beta.size() + r.gamma.size() != width) throw InvalidInput("homogenized rows of different widths");
        std::vector<Integer> row{-r.b};
        for (long v : r.beta) row.emplace_back(v);
        for (long v : r.gamma) row.emplace_back(v);
        m.push_back(std::move(row));
    }
    const std::size_t top = std::min(rows.size(), width);
    const std::size_t first = scope == MinorScope::AllOrders ? 1 : top;

    // k-subsets in lexicographic order.
    auto subsets = [](std::size_t n, std::size_t k) {
        std::vector<std::vector<std::size_t>> out;
        std::vector<std::size_t> idx(k);
        std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t pos, std::size_t start) {
            if (pos == k) {
                out.push_back(idx);
                return;
            }
            for (std::size_t v = start; v + (k - pos) <= n; ++v) {
                idx[pos] = v;
                rec(pos + 1, v + 1);
            }
        };
        rec(0, 0);
        return out;
    };

    for (std::size_t k = first; k <= top; ++k)
        for (const auto& rs : subsets(rows.size(), k))
            for (const auto& cs : subsets(width, k)) {
                IntegerMatrixRows sub;
                for (auto r : rs) {
                    std::vector<Integer> row;
                    for (auto c : cs) row.push_back(m[r][c]);
                    sub.push_back(std::move(row));
                }
                if (bareiss_determinant(sub) == 0) return {false, rs, cs};
            }
    return result;
}

JacobianWitness jacobian_witness(const std::vector<LaurentPolynomial>& h, const std::vector<GaleRelation>& relations,
                                 const std::vector<LaurentPolynomial>& G, std::size_t j)
{
    if (h.empty()) throw InvalidInput("jacobian witness needs at least one h_i");
    const std::size_t ell = h.front().nvars();
    const std::size_t n = h.size();
    if (j < 1 || j > ell) throw InvalidInput("stage index j must satisfy 1 <= j <= l");
    if (relations.size() < j) throw InvalidInput("need at least j relations");
    if (G.size() != ell - j) throw InvalidInput("need exactly l - j polynomials G_{j+1}..G_l");
    long d = 0;
    for (const auto& hi : h) {
        if (hi.nvars() != ell || !hi.is_polynomial()) throw InvalidInput("h_i must be polynomials in l variables");
        d = std::max(d, hi.total_degree());
    }
    for (std::size_t k = 0; k < j; ++k)
        if (relations[k].beta.size() != ell || relations[k].gamma.size() != n)
            throw InvalidInput("relation has the wrong shape");
    for (std::size_t t = 0; t < G.size(); ++t) {
        const std::size_t i = j + 1 + t;
        const long want = (1L << (ell - i)) * static_cast<long>(n) * d;
        if (G[t].nvars() != ell || G[t].total_degree() != want)
            throw InvalidInput("G_" + std::to_string(i) + " must have degree " + std::to_string(want));
    }

    // Common denominator H = prod h_i; row k <= j of the toric Jacobian is N_k / H.
    const LaurentPolynomial H = product(h, ell, n);
    std::vector<LaurentPolynomial> cofactor;
    for (std::size_t i = 0; i < n; ++i) cofactor.push_back(product(h, ell, i));

    std::vector<std::vector<LaurentPolynomial>> rows;
    for (std::size_t k = 0; k < j; ++k) {
        std::vector<LaurentPolynomial> row;
        for (std::size_t m = 0; m < ell; ++m) {
            LaurentPolynomial entry = scale(H, Rational(relations[k].beta[m]));
            for (std::size_t i = 0; i < n; ++i)
                if (relations[k].gamma[i] != 0)
                    entry += Rational(relations[k].gamma[i]) * (toric_derivative(h[i], m) * cofactor[i]);
            row.push_back(std::move(entry));
        }
        rows.push_back(std::move(row));
    }
    for (const auto& g : G) {
        std::vector<LaurentPolynomial> row;
        for (std::size_t m = 0; m < ell; ++m) row.push_back(toric_derivative(g, m));
        rows.push_back(std::move(row));
    }

    // Upsilon * J = H * det(toric Jacobian) = det(rows) / H^(j-1).
    LaurentPolynomial value = polynomial_determinant(rows, ell);
    for (std::size_t t = 1; t < j && !value.is_zero(); ++t) {
        auto q = divide_exact(value, H);
        if (!q) throw InternalError("denominators of the Jacobian did not cancel");
        value = std::move(*q);
    }

    JacobianWitness w;
    w.j = j;
    w.expected_degree = (1L << (ell - j)) * static_cast<long>(n) * d;
    w.actual_degree = value.total_degree();
    w.is_polynomial = value.is_polynomial();
    w.upsilon_times_J = std::move(value);
    return w;
}

LaurentPolynomial random_generic_polynomial(long degree, std::size_t nvars, std::uint64_t seed)
{
    if (degree < 0) throw InvalidInput("degree must be nonnegative");
    if (nvars == 0) throw InvalidInput("need at least one variable");
    Rng rng(seed);
    LaurentPolynomial p(nvars);
    for (const auto& e : simplex_lattice_points(degree, nvars)) {
        const long num = rng.uniform_nonzero(-20, 20);
        const long den = rng.uniform(1, 4);
        p.add_term(e, make_rational(num, den));
    }
    return p;
}

} // namespace fewnomial
