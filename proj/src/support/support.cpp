#include "fewnomial/support.hpp"

#include "fewnomial/errors.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace fewnomial {

SupportSet::SupportSet(std::size_t nvars, std::vector<ExponentVector> points) : nvars_(nvars), points_(std::move(points))
{
    for (const auto& p : points_)
        if (p.size() != nvars_) throw InvalidInput("support point has the wrong dimension");
    std::sort(points_.begin(), points_.end());
    points_.erase(std::unique(points_.begin(), points_.end()), points_.end());
}

bool SupportSet::contains(const ExponentVector& p) const
{
    return std::binary_search(points_.begin(), points_.end(), p);
}

SupportSet support_of(const LaurentPolynomial& p)
{
    std::vector<ExponentVector> pts;
    for (const auto& [e, c] : p.terms()) pts.push_back(e);
    return SupportSet(p.nvars(), std::move(pts));
}

SupportSet support_union(const std::vector<LaurentPolynomial>& system)
{
    if (system.empty()) throw InvalidInput("empty system");
    std::vector<ExponentVector> pts;
    for (const auto& f : system)
        for (const auto& [e, c] : f.terms()) pts.push_back(e);
    return SupportSet(system.front().nvars(), std::move(pts));
}

ExponentVector DenseDecomposition::v(std::size_t m) const
{
    ExponentVector out(psi_linear.rows());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = psi_linear(i, m).get_si();
    return out;
}

ExponentVector DenseDecomposition::psi(const ExponentVector& lambda) const
{
    ExponentVector out = psi_offset;
    for (std::size_t m = 0; m < ell; ++m)
        for (std::size_t i = 0; i < out.size(); ++i) out[i] += lambda[m] * psi_linear(i, m).get_si();
    return out;
}

DenseDecomposition make_decomposition(long d, const ExponentVector& v0, const std::vector<ExponentVector>& v,
                                      const std::vector<ExponentVector>& W)
{
    if (d < 1) throw InvalidInput("d must be positive");
    if (v.empty()) throw InvalidInput("l must be positive");
    const std::size_t n = v0.size();
    DenseDecomposition dec;
    dec.d = d;
    dec.ell = v.size();
    dec.psi_offset = v0;
    dec.W = W;
    dec.psi_linear = IntegerMatrix(n, v.size());
    for (std::size_t m = 0; m < v.size(); ++m) {
        if (v[m].size() != n) throw InvalidInput("psi image has the wrong dimension");
        for (std::size_t i = 0; i < n; ++i) dec.psi_linear(i, m) = v[m][i];
    }
    if (W.size() != n) throw InvalidInput("W must contain exactly n points");
    for (const auto& w : W)
        if (w.size() != n) throw InvalidInput("W point has the wrong dimension");
    return dec;
}

std::vector<ExponentVector> simplex_lattice_points(long d, std::size_t ell)
{
    if (d < 0 || ell == 0) throw InvalidInput("simplex_lattice_points needs d >= 0 and l >= 1");
    std::vector<ExponentVector> out;
    ExponentVector cur(ell);
    std::function<void(std::size_t, long)> fill = [&](std::size_t pos, long remaining) {
        if (pos + 1 == ell) {
            cur[pos] = remaining;
            out.push_back(cur);
            return;
        }
        for (long v = remaining; v >= 0; --v) {
            cur[pos] = v;
            fill(pos + 1, remaining - v);
        }
    };
    for (long t = 0; t <= d; ++t) fill(0, t);
    return out;
}

bool affinely_independent(const std::vector<ExponentVector>& points)
{
    if (points.size() <= 1) return true;
    std::vector<ExponentVector> diffs;
    for (std::size_t i = 1; i < points.size(); ++i) diffs.push_back(points[i] - points.front());
    return rank(IntegerMatrix::from_rows(diffs)) == diffs.size();
}

DecompositionCheck verify_decomposition(const SupportSet& a, const DenseDecomposition& dec)
{
    DecompositionCheck check;
    const std::size_t n = a.nvars();
    if (dec.nvars() != n || dec.psi_linear.rows() != n || dec.psi_linear.cols() != dec.ell) {
        check.problems.push_back("decomposition dimensions do not match the support");
        return check;
    }
    if (dec.W.size() != n) check.problems.push_back("W must contain exactly n points");
    if (!affinely_independent(dec.W)) check.problems.push_back("W is not affinely independent");

    std::set<ExponentVector> produced;
    for (const auto& lambda : simplex_lattice_points(dec.d, dec.ell)) {
        ExponentVector image = dec.psi(lambda);
        if (!produced.insert(image).second) {
            check.problems.push_back("psi is not injective on the simplex points");
        }
    }
    for (const auto& w : dec.W)
        if (produced.count(w)) check.problems.push_back("a point of W is also a psi-image");
    for (const auto& w : dec.W) produced.insert(w);

    for (const auto& p : a.points())
        if (!produced.count(p)) check.missing.push_back(p);
    for (const auto& p : produced)
        if (!a.contains(p)) check.extra.push_back(p);

    // Deduplicate repeated messages.
    std::sort(check.problems.begin(), check.problems.end());
    check.problems.erase(std::unique(check.problems.begin(), check.problems.end()), check.problems.end());
    check.ok = check.problems.empty() && check.missing.empty() && check.extra.empty();
    return check;
}

namespace {

// Calls visit on each k-subset of {0..n-1} in lexicographic order; stops when visit returns true.
bool for_each_subset(std::size_t n, std::size_t k, const std::function<bool(const std::vector<std::size_t>&)>& visit)
{
    if (k > n) return false;
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        if (visit(idx)) return true;
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
        if (i == 0) return false;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

} // namespace

std::optional<DenseDecomposition> search_decomposition(const SupportSet& a, long d, std::size_t ell,
                                                       const SearchOptions& options)
{
    if (d < 1 || ell < 1) throw InvalidInput("search needs d >= 1 and l >= 1");
    const std::size_t n = a.nvars();
    const auto& pts = a.points();
    const Integer simplex_count = binomial(static_cast<unsigned long>(d) + ell, ell);
    if (Integer(pts.size()) != simplex_count + n) return std::nullopt;

    std::uint64_t candidates = 0;
    std::optional<DenseDecomposition> found;
    for_each_subset(pts.size(), n, [&](const std::vector<std::size_t>& w_idx) {
        std::vector<ExponentVector> W;
        for (auto i : w_idx) W.push_back(pts[i]);
        if (!affinely_independent(W)) return false;
        std::vector<ExponentVector> rest;
        for (std::size_t i = 0; i < pts.size(); ++i)
            if (std::find(w_idx.begin(), w_idx.end(), i) == w_idx.end()) rest.push_back(pts[i]);

        for (std::size_t a0 = 0; a0 < rest.size(); ++a0) {
            if (++candidates > options.budget) throw BudgetExceeded("decomposition search exceeded its candidate budget");
            const ExponentVector& v0 = rest[a0];
            std::vector<ExponentVector> others;
            for (std::size_t i = 0; i < rest.size(); ++i)
                if (i != a0) others.push_back(rest[i]);
            // v0 + v_m must be support points; pick them as an ell-subset.
            bool hit = for_each_subset(others.size(), ell, [&](const std::vector<std::size_t>& v_idx) {
                std::vector<ExponentVector> v;
                for (auto i : v_idx) v.push_back(others[i] - v0);
                DenseDecomposition dec = make_decomposition(d, v0, v, W);
                if (!verify_decomposition(a, dec).ok) return false;
                found = std::move(dec);
                return true;
            });
            if (hit) return true;
        }
        return false;
    });
    return found;
}

// ---------------------------------------------------------------------------

namespace {

Rational cross(const Point2& o, const Point2& a, const Point2& b)
{
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

} // namespace

Polytope2D convex_hull(const std::vector<Point2>& input)
{
    std::vector<Point2> pts = input;
    std::sort(pts.begin(), pts.end(), [](const Point2& a, const Point2& b) {
        return a.x < b.x || (a.x == b.x && a.y < b.y);
    });
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() <= 2) return {pts};

    // Andrew's monotone chain, dropping collinear points.
    std::vector<Point2> hull(2 * pts.size());
    std::size_t k = 0;
    for (const auto& p : pts) {
        while (k >= 2 && cross(hull[k - 2], hull[k - 1], p) <= 0) --k;
        hull[k++] = p;
    }
    for (std::size_t i = pts.size() - 1, lower = k + 1; i-- > 0;) {
        const auto& p = pts[i];
        while (k >= lower && cross(hull[k - 2], hull[k - 1], p) <= 0) --k;
        hull[k++] = p;
    }
    hull.resize(k - 1);
    return {hull};
}

Polytope2D convex_hull(const SupportSet& a)
{
    if (a.nvars() != 2) throw InvalidInput("planar hull needs a support in two variables");
    std::vector<Point2> pts;
    for (const auto& p : a.points()) pts.push_back({Rational(p[0]), Rational(p[1])});
    return convex_hull(pts);
}

Rational doubled_area(const Polytope2D& p)
{
    const auto& v = p.vertices;
    if (v.size() < 3) return 0;
    Rational twice = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const auto& a = v[i];
        const auto& b = v[(i + 1) % v.size()];
        twice += a.x * b.y - a.y * b.x;
    }
    return abs(twice);
}

Integer normalized_volume(const SupportSet& a)
{
    Rational twice = doubled_area(convex_hull(a));
    return twice.get_num();
}

Integer mixed_volume_2d(const SupportSet& p, const SupportSet& q)
{
    if (p.nvars() != 2 || q.nvars() != 2) throw InvalidInput("planar mixed volume needs supports in two variables");
    if (p.size() == 0 || q.size() == 0) throw InvalidInput("mixed volume of an empty support");
    Polytope2D hp = convex_hull(p);
    Polytope2D hq = convex_hull(q);
    std::vector<Point2> sums;
    for (const auto& a : hp.vertices)
        for (const auto& b : hq.vertices) sums.push_back({a.x + b.x, a.y + b.y});
    // MV = area(P + Q) - area(P) - area(Q); the doubled areas halve at the end.
    Rational twice = doubled_area(convex_hull(sums)) - doubled_area(hp) - doubled_area(hq);
    Rational mv = twice / 2;
    if (mv.get_den() != 1) throw InternalError("mixed volume of lattice polygons must be an integer");
    return mv.get_num();
}

} // namespace fewnomial
