#include "fewnomial/counting.hpp"

#include "fewnomial/errors.hpp"
#include "fewnomial/random.hpp"
#include "fewnomial/resultant.hpp"

#include <algorithm>

namespace fewnomial {

namespace {

const std::size_t kY = 1;

// Polynomial with integer coefficients, no negative exponents and no monomial factor.
LaurentPolynomial prepare(const LaurentPolynomial& p)
{
    if (p.nvars() != 2) throw InvalidInput("bivariate counting needs polynomials in two variables");
    if (p.is_zero()) throw CountingDegeneracy("the zero polynomial has infinitely many solutions");
    LaurentPolynomial cleared = clear_denominators(p).polynomial;
    return scale(cleared, Rational(denominator_lcm(cleared)));
}

LaurentPolynomial shear(const LaurentPolynomial& p, long lambda)
{
    // x -> s - lambda * y, y -> y, in the variables (s, y).
    LaurentPolynomial x_image = LaurentPolynomial::variable(2, 0) - scale(LaurentPolynomial::variable(2, 1), lambda);
    std::vector<LaurentPolynomial> images{x_image, LaurentPolynomial::variable(2, 1)};
    return substitute(p, images);
}

bool constant_leading_coefficient(const LaurentPolynomial& p)
{
    return coefficient_in(p, kY, p.degree_in(kY)).degree() == 0;
}

// A polynomial map num(t) / den with den > 0.
struct ScaledMap {
    IntegerPolynomial num;
    Integer den;
};

ScaledMap scaled_of(const UnivariatePolynomial& p)
{
    Integer den = 1;
    for (const auto& c : p.coefficients()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
    ScaledMap m{{}, den};
    for (const auto& c : p.coefficients()) m.num.push_back(Integer(c * den));
    return m;
}

void trim(IntegerPolynomial& p)
{
    while (!p.empty() && p.back() == 0) p.pop_back();
}

// a * b mod rt, for a monic integer rt.
IntegerPolynomial mul_mod(const IntegerPolynomial& a, const IntegerPolynomial& b, const IntegerPolynomial& rt)
{
    if (a.empty() || b.empty()) return {};
    IntegerPolynomial c(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    const std::size_t d = rt.size() - 1;
    for (std::size_t i = c.size(); i-- > d;) {
        if (c[i] == 0) continue;
        const Integer f = c[i];
        for (std::size_t j = 0; j <= d; ++j) c[i - d + j] -= f * rt[j];
    }
    trim(c);
    return c;
}

// Evaluates integer polynomials at the point (X / dx, Y / dy) modulo the monic
// rt. eval(f, ex, ey) returns dx^ex dy^ey f(x, y) mod rt; the positive factor
// keeps both the sign at every real root and the zero test.
class FiberEvaluator {
public:
    FiberEvaluator(IntegerPolynomial rt, ScaledMap x, ScaledMap y) : rt_(std::move(rt)), x_(std::move(x)), y_(std::move(y))
    {
    }

    IntegerPolynomial eval(const LaurentPolynomial& f) { return eval(f, f.degree_in(0), f.degree_in(1)); }

    IntegerPolynomial eval(const LaurentPolynomial& f, long ex, long ey)
    {
        if (!f.is_polynomial()) throw InternalError("fiber evaluation needs a true polynomial");
        if (f.is_zero()) return {};
        if (f.degree_in(0) > ex || f.degree_in(1) > ey) throw InternalError("scaling exponents below the degree");
        extend(ex, ey);
        // A_j = sum_i c_ij dx^(ex - i) X^i, then Horner in y.
        std::vector<IntegerPolynomial> a(static_cast<std::size_t>(ey) + 1);
        for (const auto& [e, c] : f.terms()) {
            if (c.get_den() != 1) throw InternalError("fiber evaluation needs integer coefficients");
            const auto i = static_cast<std::size_t>(e[0]);
            const IntegerPolynomial& xi = xp_[i];
            const Integer factor = c.get_num() * xd_[static_cast<std::size_t>(ex) - i];
            auto& aj = a[static_cast<std::size_t>(e[1])];
            if (aj.size() < xi.size()) aj.resize(xi.size());
            for (std::size_t k = 0; k < xi.size(); ++k) aj[k] += factor * xi[k];
        }
        IntegerPolynomial acc = a.back();
        for (long j = ey - 1; j >= 0; --j) {
            acc = mul_mod(acc, y_.num, rt_);
            const auto& aj = a[static_cast<std::size_t>(j)];
            const Integer& scale_j = yd_[static_cast<std::size_t>(ey - j)];
            if (acc.size() < aj.size()) acc.resize(aj.size());
            for (std::size_t k = 0; k < aj.size(); ++k) acc[k] += scale_j * aj[k];
        }
        trim(acc);
        return acc;
    }

    IntegerPolynomial mul(const IntegerPolynomial& a, const IntegerPolynomial& b) const { return mul_mod(a, b, rt_); }

private:
    void extend(long ex, long ey)
    {
        if (xp_.empty()) {
            xp_.push_back({1});
            xd_.push_back(1);
            yd_.push_back(1);
        }
        while (static_cast<long>(xp_.size()) <= ex) {
            xp_.push_back(mul_mod(xp_.back(), x_.num, rt_));
            xd_.push_back(xd_.back() * x_.den);
        }
        while (static_cast<long>(yd_.size()) <= ey) yd_.push_back(yd_.back() * y_.den);
    }

    IntegerPolynomial rt_;
    ScaledMap x_;
    ScaledMap y_;
    std::vector<IntegerPolynomial> xp_;
    std::vector<Integer> xd_;
    std::vector<Integer> yd_;
};

IntegerPolynomial subtract(IntegerPolynomial a, const IntegerPolynomial& b)
{
    if (a.size() < b.size()) a.resize(b.size());
    for (std::size_t k = 0; k < b.size(); ++k) a[k] -= b[k];
    trim(a);
    return a;
}

// Positive multiple of det d(P, Q)/d(x, y) at the point.
IntegerPolynomial jacobian_at(FiberEvaluator& ev, const LaurentPolynomial& P, const LaurentPolynomial& Q)
{
    const long px = P.degree_in(0), py = P.degree_in(1), qx = Q.degree_in(0), qy = Q.degree_in(1);
    auto dp = [&](std::size_t v) { return ev.eval(partial_derivative(P, v), px, py); };
    auto dq = [&](std::size_t v) { return ev.eval(partial_derivative(Q, v), qx, qy); };
    return subtract(ev.mul(dp(0), dq(1)), ev.mul(dp(1), dq(0)));
}

// 3-decimal rendering of m at the root, refining until the rounding is decided.
std::string preview(const ScaledMap& m, RealRoot& root, Rational& approx)
{
    const Rational floor_width = make_rational(1, ipow(Integer(10), 40));
    Rational width = make_rational(1, 1000000);
    for (int i = 0;; ++i) {
        if (i > 10000) throw InternalError("preview refinement cap exceeded");
        Interval e = root.is_exact() ? Interval{Rational(0), Rational(0)} : evaluate_on(m.num, root.interval());
        if (root.is_exact()) e.lo = e.hi = to_rational(m.num)(root.value());
        e.lo /= m.den;
        e.hi /= m.den;
        if (e.width() >= width && !root.is_exact()) {
            root.bisect();
            continue;
        }
        approx = e.midpoint();
        if (to_decimal(e.lo, 3) == to_decimal(e.hi, 3) || width < floor_width) return to_decimal(approx, 3);
        width /= 1000000;
    }
}

struct Fiber {
    int k = 0;
    UnivariatePolynomial factor;
};

// Retry signal for a shear that is not separating.
struct BadShear {};

struct Attempt {
    std::vector<AlgebraicPoint2D> points;
    long on_axes = 0;
};

Attempt solve_with_shear(const LaurentPolynomial& P, const LaurentPolynomial& Q, long lambda)
{
    const LaurentPolynomial Ps = shear(P, lambda);
    const LaurentPolynomial Qs = shear(Q, lambda);
    if (!constant_leading_coefficient(Ps) || !constant_leading_coefficient(Qs)) throw BadShear{};
    const int m = static_cast<int>(Ps.degree_in(kY));
    const int n = static_cast<int>(Qs.degree_in(kY));
    const int top = std::min(m, n);

    std::vector<std::pair<int, int>> requests{{0, 0}};
    for (int k = 1; k < top; ++k) requests.push_back({k, k});
    const auto psc = subresultant_coefficients(Ps, Qs, kY, requests);
    if (psc[0].is_zero()) throw CountingDegeneracy("the polynomials share a common factor");
    if (psc[0].degree() == 0) return {};

    // r = r_1 r_2 ... where the common factor in y over a root of r_k has degree k.
    std::vector<Fiber> fibers;
    UnivariatePolynomial rest = squarefree_part(psc[0]);
    for (int k = 1; k < top && rest.degree() > 0; ++k) {
        UnivariatePolynomial g = gcd(rest, psc[static_cast<std::size_t>(k)]);
        UnivariatePolynomial rk = divide_exact(rest, g);
        if (rk.degree() > 0) fibers.push_back({k, monic(rk)});
        rest = g;
    }
    if (rest.degree() > 0) fibers.push_back({top, rest});

    // Coefficient j of the k-th subresultant, as a polynomial in s.
    const LaurentPolynomial& lower = m < n ? Ps : Qs;
    auto subresultant_row = [&](int k) {
        std::vector<UnivariatePolynomial> row;
        if (k == top) {
            for (int j = 0; j <= k; ++j) row.push_back(coefficient_in(lower, kY, j));
            return row;
        }
        std::vector<std::pair<int, int>> req;
        for (int j = 0; j <= k; ++j) req.push_back({k, j});
        return subresultant_coefficients(Ps, Qs, kY, req);
    };

    Attempt out;
    for (const Fiber& fiber : fibers) {
        const UnivariatePolynomial& r = fiber.factor;
        // t = lc * s turns the monic rational factor into a monic integer one.
        const IntegerPolynomial rint = primitive_integer(r);
        const Integer lc = rint.back();
        const std::size_t deg = rint.size() - 1;
        IntegerPolynomial rt(deg + 1);
        for (std::size_t i = 0; i < deg; ++i) rt[i] = rint[i] * ipow(lc, deg - 1 - i);
        rt[deg] = 1;
        // Isolate in s, where coefficients are small, then scale the intervals.
        std::vector<RealRoot> roots;
        for (const RealRoot& rs : isolate_real_roots(rint).roots) {
            if (rs.is_exact()) roots.emplace_back(rt, Rational(rs.value() * lc));
            else roots.emplace_back(rt, Interval{rs.lower() * lc, rs.upper() * lc});
        }
        if (roots.empty()) continue;
        const int k = fiber.k;
        const auto row = subresultant_row(k);

        // Over a separating fiber the common factor is c (y - y0)^k.
        auto inv = inverse_mod(remainder(row[static_cast<std::size_t>(k)] * Rational(k), r), r);
        if (!inv) throw InternalError("principal subresultant vanishes on its own fiber");
        const UnivariatePolynomial y_s = remainder(-(row[static_cast<std::size_t>(k - 1)] * *inv), r);
        for (int j = 0; j + 1 < k; ++j) {
            UnivariatePolynomial power = UnivariatePolynomial::constant(1);
            for (int t = 0; t < k - j; ++t) power = remainder(power * -y_s, r);
            UnivariatePolynomial expected = row[static_cast<std::size_t>(k)] * power *
                                            Rational(binomial(static_cast<unsigned long>(k), static_cast<unsigned long>(j)));
            if (!remainder(row[static_cast<std::size_t>(j)] - expected, r).is_zero()) throw BadShear{};
        }

        const UnivariatePolynomial s_of_t = UnivariatePolynomial::x() * make_rational(1, lc);
        const UnivariatePolynomial y_map = compose(y_s, s_of_t);
        const UnivariatePolynomial x_map = s_of_t - y_map * Rational(lambda);
        const ScaledMap X = scaled_of(x_map), Y = scaled_of(y_map);
        FiberEvaluator ev(rt, X, Y);
        if (!ev.eval(P).empty() || !ev.eval(Q).empty()) throw BadShear{};

        const IntegerPolynomial jac = jacobian_at(ev, P, Q);
        const UnivariatePolynomial defining = to_rational(rt);
        for (const RealRoot& root : roots) {
            AlgebraicPoint2D pt{defining, root, x_map, y_map, 0, 0, false, {}, {}, 0, 0};
            pt.x_sign = sign_at_root(X.num, pt.root);
            pt.y_sign = sign_at_root(Y.num, pt.root);
            if (pt.x_sign == 0 || pt.y_sign == 0) {
                ++out.on_axes;
                continue;
            }
            pt.nondegenerate = sign_at_root(jac, pt.root) != 0;
            pt.x_preview = preview(X, pt.root, pt.x_approx);
            pt.y_preview = preview(Y, pt.root, pt.y_approx);
            out.points.push_back(std::move(pt));
        }
    }
    std::sort(out.points.begin(), out.points.end(), [](const AlgebraicPoint2D& a, const AlgebraicPoint2D& b) {
        return a.x_approx < b.x_approx || (a.x_approx == b.x_approx && a.y_approx < b.y_approx);
    });
    return out;
}

} // namespace

CountReport count_real_solutions_2d(const LaurentPolynomial& p, const LaurentPolynomial& q, const CountOptions& options)
{
    const LaurentPolynomial P = prepare(p);
    const LaurentPolynomial Q = prepare(q);
    CountReport report;
    report.per_region = {{"real", 0}, {"positive", 0}, {"positive_nondegenerate", 0}};
    if (P.is_constant() || Q.is_constant()) return report;

    Rng rng(options.seed);
    long range = options.initial_shear_range;
    for (int attempt = 1; attempt <= options.max_attempts; ++attempt, range *= 2) {
        const long lambda = rng.uniform(-range, range);
        Attempt found;
        try {
            found = solve_with_shear(P, Q, lambda);
        } catch (const BadShear&) {
            continue;
        }
        report.shear = lambda;
        report.attempts = attempt;
        report.on_axes = found.on_axes;
        report.points = std::move(found.points);
        report.total_real = static_cast<long>(report.points.size());
        for (const auto& pt : report.points) {
            if (pt.nondegenerate) ++report.nondegenerate_real;
            if (pt.x_sign > 0 && pt.y_sign > 0) {
                ++report.per_region["positive"];
                if (pt.nondegenerate) ++report.per_region["positive_nondegenerate"];
            }
        }
        report.per_region["real"] = report.total_real;
        return report;
    }
    throw CountingDegeneracy("no separating shear found in " + std::to_string(options.max_attempts) + " attempts");
}

int sign_at_point(const LaurentPolynomial& f, const AlgebraicPoint2D& point)
{
    if (f.nvars() != 2) throw InvalidInput("sign_at_point needs a bivariate polynomial");
    if (f.is_zero()) return 0;
    ClearedPolynomial c = clear_denominators(f);
    RealRoot root = point.root;
    const LaurentPolynomial integral = scale(c.polynomial, Rational(denominator_lcm(c.polynomial)));
    FiberEvaluator ev(primitive_integer(point.defining), scaled_of(point.x_map), scaled_of(point.y_map));
    const IntegerPolynomial value = ev.eval(integral);
    int s = sign_at_root(value, root);
    // f = cleared * x^-shift, and the coordinates are nonzero.
    if (point.x_sign < 0 && c.shift[0] % 2 != 0) s = -s;
    if (point.y_sign < 0 && c.shift[1] % 2 != 0) s = -s;
    return s;
}

Classification classify(const CountReport& report, const RegionSpec& region)
{
    Classification out;
    for (const auto& pt : report.points) {
        const int coords[2] = {pt.x_sign, pt.y_sign};
        bool inside = true;
        for (std::size_t i = 0; i < region.coordinate_signs.size() && i < 2; ++i)
            if (region.coordinate_signs[i] == SignRequirement::Positive && coords[i] <= 0) inside = false;
        bool on_boundary = false;
        for (const auto& [h, req] : region.h_constraints) {
            if (req == SignRequirement::Any) continue;
            const int s = sign_at_point(h, pt);
            if (s == 0) on_boundary = true;
            else if (req == SignRequirement::Positive && s < 0) inside = false;
        }
        if (on_boundary) ++out.boundary;
        else if (inside) ++out.count;
    }
    return out;
}

RegionSpec positive_orthant()
{
    return {{SignRequirement::Positive, SignRequirement::Positive}, {}};
}

RegionSpec gale_real_region(const std::vector<LaurentPolynomial>& h)
{
    RegionSpec r{{SignRequirement::Nonzero, SignRequirement::Nonzero}, {}};
    for (const auto& hi : h) r.h_constraints.push_back({hi, SignRequirement::Nonzero});
    return r;
}

RegionSpec gale_delta_region(const std::vector<LaurentPolynomial>& h)
{
    RegionSpec r{{SignRequirement::Positive, SignRequirement::Positive}, {}};
    for (const auto& hi : h) r.h_constraints.push_back({hi, SignRequirement::Positive});
    return r;
}

CountReport count_gale(const GaleSystem& gs, const CountOptions& options)
{
    if (gs.ell != 2) throw InvalidInput("Gale counting is implemented for l = 2 only");
    CountReport report =
        count_real_solutions_2d(gale_equation_as_polynomial(gs, 1), gale_equation_as_polynomial(gs, 2), options);

    long m_real = 0, delta = 0, m_real_nd = 0, delta_nd = 0, boundary = 0;
    for (const auto& pt : report.points) {
        bool on_boundary = false, positive = pt.x_sign > 0 && pt.y_sign > 0;
        for (const auto& h : gs.h) {
            const int s = sign_at_point(h, pt);
            if (s == 0) on_boundary = true;
            if (s <= 0) positive = false;
        }
        if (on_boundary) {
            ++boundary;
            continue;
        }
        ++m_real;
        if (pt.nondegenerate) ++m_real_nd;
        if (positive) {
            ++delta;
            if (pt.nondegenerate) ++delta_nd;
        }
    }
    report.boundary = boundary;
    report.per_region["m_real"] = m_real;
    report.per_region["m_real_nondegenerate"] = m_real_nd;
    report.per_region["delta"] = delta;
    report.per_region["delta_nondegenerate"] = delta_nd;
    return report;
}

CorrespondenceVerdict verify_correspondence(const FewnomialSystem& sys, const DenseDecomposition& dec,
                                            const std::optional<Sublattice>& relations, const CountOptions& options)
{
    if (sys.nvars != 2 || dec.ell != 2) throw InvalidInput("correspondence check needs n = l = 2");
    const DiagonalizedSystem diag = diagonalize(sys, dec);
    const Sublattice rel = relations ? *relations : default_relations(dec);
    const GaleSystem gs = build_gale_system(diag, rel);

    const auto polys = sys.polynomials();
    return compare_counts(check_hypotheses(sys.support, rel, dec), count_real_solutions_2d(polys[0], polys[1], options),
                          count_gale(gs, options));
}

CorrespondenceVerdict compare_counts(const GaleHypotheses& hypotheses, const CountReport& original,
                                     const CountReport& gale)
{
    CorrespondenceVerdict v;
    v.hypotheses = hypotheses;
    v.original_positive = original.per_region.at("positive");
    v.original_positive_nondegenerate = original.per_region.at("positive_nondegenerate");
    v.gale_delta = gale.per_region.at("delta");
    v.gale_delta_nondegenerate = gale.per_region.at("delta_nondegenerate");
    v.positive_equal = v.original_positive == v.gale_delta &&
                       v.original_positive_nondegenerate == v.gale_delta_nondegenerate;
    v.real_checked = v.hypotheses.real_case_ok;
    v.original_real = original.total_real;
    v.gale_m_real = gale.per_region.at("m_real");
    v.real_equal = v.original_real == v.gale_m_real;
    return v;
}

bool check_bound_compliance(long count, const BoundReport& bound)
{
    return Integer(count) <= bound.max_count;
}

} // namespace fewnomial
