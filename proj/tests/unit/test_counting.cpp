#include "fewnomial/counting.hpp"
#include "fewnomial/errors.hpp"
#include "fewnomial/io.hpp"
#include "fewnomial/resultant.hpp"

#include "../common/generators.hpp"

#include <doctest.h>

#include <optional>
#include <string>

using namespace fewnomial;

namespace {

LaurentPolynomial poly2(std::initializer_list<std::pair<ExponentVector, Rational>> terms)
{
    LaurentPolynomial p(2);
    for (const auto& [e, c] : terms) p.add_term(e, c);
    return p;
}

SystemFile worked_system()
{
    return system_file_from_json(read_json_file(std::string(FEWNOMIAL_DATA_DIR) + "/worked_example.json"));
}

LaurentPolynomial swap_variables(const LaurentPolynomial& p)
{
    LaurentPolynomial out(2);
    for (const auto& [e, c] : p.terms()) out.add_term({e[1], e[0]}, c);
    return out;
}

std::vector<std::pair<std::string, std::string>> previews(const CountReport& r)
{
    std::vector<std::pair<std::string, std::string>> out;
    for (const auto& p : r.points) out.emplace_back(p.x_preview, p.y_preview);
    std::sort(out.begin(), out.end());
    return out;
}

// Independent back-substitution: every term as a product of the coordinate
// maps, reduced modulo the defining factor by plain polynomial division.
bool vanishes_on_point(const LaurentPolynomial& p, const AlgebraicPoint2D& pt)
{
    const auto cleared = clear_denominators(p).polynomial;
    auto powers = [&](const UnivariatePolynomial& m, long top) {
        std::vector<UnivariatePolynomial> out{UnivariatePolynomial::constant(1)};
        for (long k = 1; k <= top; ++k) out.push_back(remainder(out.back() * m, pt.defining));
        return out;
    };
    const auto xs = powers(pt.x_map, cleared.degree_in(0));
    const auto ys = powers(pt.y_map, cleared.degree_in(1));
    UnivariatePolynomial sum;
    for (const auto& [e, c] : cleared.terms()) sum += remainder(xs[e[0]] * ys[e[1]], pt.defining) * c;
    return sum.is_zero();
}

std::optional<CountReport> try_count(const LaurentPolynomial& p, const LaurentPolynomial& q, std::uint64_t seed = 1)
{
    try {
        return count_real_solutions_2d(p, q, CountOptions{seed});
    } catch (const CountingDegeneracy&) {
        return std::nullopt;
    }
}

} // namespace

TEST_CASE("small systems")
{
    const auto x = LaurentPolynomial::variable(2, 0);
    const auto y = LaurentPolynomial::variable(2, 1);
    const auto one = LaurentPolynomial::constant(2, 1);

    const auto lin = count_real_solutions_2d(x - one, y - one);
    CHECK(lin.total_real == 1);
    CHECK(lin.per_region.at("positive") == 1);
    CHECK(lin.nondegenerate_real == 1);
    CHECK(lin.points.at(0).x_preview == "1.000");

    const auto circle = count_real_solutions_2d(x * x + y * y - scale(one, 2), x - y);
    CHECK(circle.total_real == 2);
    CHECK(circle.per_region.at("real") == 2);
    CHECK(circle.per_region.at("positive") == 1);
    CHECK(previews(circle) == std::vector<std::pair<std::string, std::string>>{{"-1.000", "-1.000"}, {"1.000", "1.000"}});

    // (0, 1) sits on an axis and is excluded.
    const auto axes = count_real_solutions_2d(x + y - one, x - y + one);
    CHECK(axes.total_real == 0);
    CHECK(axes.on_axes == 1);
    // x y is a unit on the torus, so it has no zeros there at all.
    CHECK(count_real_solutions_2d(x + y - one, x * y).on_axes == 0);

    // Any region with no constraints counts everything.
    CHECK(classify(circle, RegionSpec{{SignRequirement::Any, SignRequirement::Any}, {}}).count == circle.total_real);

    // No real solutions.
    CHECK(count_real_solutions_2d(x * x + y * y + one, x - y).total_real == 0);
}

TEST_CASE("tangency is degenerate")
{
    const auto x = LaurentPolynomial::variable(2, 0);
    const auto y = LaurentPolynomial::variable(2, 1);
    const auto one = LaurentPolynomial::constant(2, 1);
    const auto r = count_real_solutions_2d(y - x * x, y - scale(x, 2) + one);
    CHECK(r.total_real == 1);
    CHECK(r.nondegenerate_real == 0);
    CHECK_FALSE(r.points.at(0).nondegenerate);
    const auto c = count_real_solutions_2d(x * x + y * y - scale(one, 2), x + y - scale(one, 2));
    CHECK(c.total_real == 1);
    CHECK(c.nondegenerate_real == 0);
}

TEST_CASE("common factors are reported")
{
    const auto x = LaurentPolynomial::variable(2, 0);
    const auto y = LaurentPolynomial::variable(2, 1);
    const auto one = LaurentPolynomial::constant(2, 1);
    const auto f = x + y - scale(one, 3);
    CHECK_THROWS_AS(count_real_solutions_2d(f * (x - one), f * (y - scale(one, 2))), CountingDegeneracy);
    CHECK_THROWS_AS(count_real_solutions_2d(f, scale(f, 5)), CountingDegeneracy);
}

TEST_CASE("worked example counts")
{
    const auto sys = worked_system();
    const auto r = count_real_solutions_2d(sys.polynomials[0], sys.polynomials[1]);
    CHECK(r.total_real == 10);
    CHECK(r.per_region.at("positive") == 8);
    CHECK(r.nondegenerate_real == 10);
    // The substitution does not depend on which root of the factor is taken.
    std::vector<const AlgebraicPoint2D*> distinct;
    for (const auto& p : r.points) {
        bool seen = false;
        for (const auto* q : distinct)
            seen |= q->defining == p.defining && q->x_map == p.x_map && q->y_map == p.y_map;
        if (!seen) distinct.push_back(&p);
    }
    for (const auto* p : distinct) {
        CHECK(vanishes_on_point(sys.polynomials[0], *p));
        CHECK(vanishes_on_point(sys.polynomials[1], *p));
    }
    CHECK(classify(r, positive_orthant()).count == 8);
    CHECK(check_bound_compliance(8, dense_positive_bound(2, 2, 2)));
    CHECK(check_bound_compliance(10, dense_real_bound(2, 2, 2)));
    CHECK(check_bound_compliance(0, khovanskii_bound(0, 1)));
    CHECK(r.total_real <= mixed_volume_2d(support_of(clear_denominators(sys.polynomials[0]).polynomial),
                                          support_of(clear_denominators(sys.polynomials[1]).polynomial)));
}

TEST_CASE("Gale counts of the worked example")
{
    const Json j = read_json_file(std::string(FEWNOMIAL_DATA_DIR) + "/worked_example.json");
    const auto sys = system_file_from_json(j);
    const auto dec = decomposition_from_json(j["decomposition"]);
    const auto diag = diagonalize(FewnomialSystem::from_polynomials(sys.polynomials), dec);
    const auto gs = build_gale_system(diag, relations_from_json(j["relations"], 4));
    const auto g = count_gale(gs);
    CHECK(g.per_region.at("m_real") == 10);
    CHECK(g.per_region.at("delta") == 8);
    CHECK(g.boundary == 0);

    // On each Delta solution the unsquared and squared equations vanish and h_i > 0.
    const auto region = gale_delta_region(gs.h);
    for (const auto& p : g.points) {
        const int h1 = sign_at_point(gs.h[0], p);
        const int h2 = sign_at_point(gs.h[1], p);
        CHECK(h1 != 0);
        CHECK(h2 != 0);
        for (std::size_t k = 1; k <= 2; ++k) CHECK(sign_at_point(gale_equation_as_polynomial(gs, k), p) == 0);
    }
    REQUIRE_FALSE(g.points.empty());
    CHECK(sign_at_point(build_gk(gs, 1), g.points.front()) == 0);
    CHECK(classify(g, region).count == 8);

    const auto verdict = verify_correspondence(FewnomialSystem::from_polynomials(sys.polynomials), dec,
                                               relations_from_json(j["relations"], 4));
    CHECK(verdict.original_positive == 8);
    CHECK(verdict.gale_delta == 8);
    CHECK(verdict.positive_equal);
    CHECK(verdict.real_checked);
    CHECK(verdict.original_real == 10);
    CHECK(verdict.gale_m_real == 10);
    CHECK(verdict.ok());
}

TEST_CASE("trivial Gale system")
{
    // t^2 = 1 - t + u, u^2 = 2 + 2t + u has one real solution, near (1.512, 2.796).
    const auto x = LaurentPolynomial::variable(2, 0);
    const auto y = LaurentPolynomial::variable(2, 1);
    const auto one = LaurentPolynomial::constant(2, 1);
    const auto sys = FewnomialSystem::from_polynomials({x * x - one + x - y, y * y - scale(one, 2) - scale(x, 2) - y});
    const auto dec = make_decomposition(1, {0, 0}, {{1, 0}, {0, 1}}, {{2, 0}, {0, 2}});
    const auto orig = count_real_solutions_2d(sys.polynomials()[0], sys.polynomials()[1]);
    CHECK(orig.total_real == 1);
    CHECK(previews(orig) == std::vector<std::pair<std::string, std::string>>{{"1.512", "2.796"}});
    const auto v = verify_correspondence(sys, dec);
    CHECK(v.original_positive == 1);
    CHECK(v.gale_delta == 1);
    CHECK(v.ok());
}

TEST_CASE("count invariances")
{
    Rng rng(31337);
    int checked = 0;
    for (int trial = 0; trial < 80; ++trial) {
        const auto p = testgen::laurent(rng, 2, 4, -2, 2);
        const auto q = testgen::laurent(rng, 2, 4, -2, 2);
        if (p.size() < 2 || q.size() < 2) continue;
        const auto base = try_count(p, q);
        if (!base) continue;
        ++checked;
        const auto pos = base->per_region.at("positive");
        for (const auto& pt : base->points) {
            CHECK(vanishes_on_point(p, pt));
            CHECK(vanishes_on_point(q, pt));
        }

        const auto swapped = count_real_solutions_2d(q, p);
        CHECK(swapped.total_real == base->total_real);
        CHECK(swapped.per_region.at("positive") == pos);
        CHECK(previews(swapped) == previews(*base));

        const auto vars = count_real_solutions_2d(swap_variables(p), swap_variables(q));
        CHECK(vars.total_real == base->total_real);
        CHECK(vars.per_region.at("positive") == pos);
        auto flipped = previews(*base);
        for (auto& [a, b] : flipped) std::swap(a, b);
        std::sort(flipped.begin(), flipped.end());
        CHECK(previews(vars) == flipped);

        const auto scaled = count_real_solutions_2d(scale(p, Rational(-7, 3)), scale(q, 5));
        CHECK(previews(scaled) == previews(*base));

        const auto shifted = count_real_solutions_2d(monomial_shift(p, {3, -2}), monomial_shift(q, {-1, 4}));
        CHECK(shifted.total_real == base->total_real);
        CHECK(previews(shifted) == previews(*base));

        const auto reseeded = count_real_solutions_2d(p, q, CountOptions{99 + static_cast<std::uint64_t>(trial)});
        CHECK(reseeded.total_real == base->total_real);
        CHECK(reseeded.nondegenerate_real == base->nondegenerate_real);
        CHECK(previews(reseeded) == previews(*base));
    }
    CHECK(checked >= 20);
}

TEST_CASE("nondegeneracy agrees with resultant multiplicity")
{
    // For points with distinct x-coordinates, a point is nondegenerate exactly
    // when its x is a simple root of res_y(p, q).
    Rng rng(8080);
    int compared = 0;
    for (int trial = 0; trial < 60; ++trial) {
        auto p = testgen::polynomial(rng, 2, 4, 2);
        auto q = testgen::polynomial(rng, 2, 4, 2);
        if (trial % 3 == 0) {
            // Force a tangency at (1, 1): q = p + (y - 1)^2 ... shared tangent line.
            const auto x = LaurentPolynomial::variable(2, 0);
            const auto y = LaurentPolynomial::variable(2, 1);
            const auto one = LaurentPolynomial::constant(2, 1);
            p = y - x * x;
            q = y - scale(x, 2) + one + scale(pow(x - one, 2) * (x + y), testgen::small_rational(rng));
        }
        if (p.degree_in(1) < 1 || q.degree_in(1) < 1) continue;
        const auto r = try_count(p, q);
        if (!r || r->points.empty()) continue;
        bool distinct_x = true;
        for (std::size_t i = 0; i + 1 < r->points.size(); ++i)
            for (std::size_t k = i + 1; k < r->points.size(); ++k)
                distinct_x &= r->points[i].x_preview != r->points[k].x_preview;
        if (!distinct_x) continue;
        const auto res = resultant(p, q, 1);
        if (res.is_zero()) continue;
        const auto repeated = gcd(res, derivative(res));
        const auto iso = isolate_real_roots(repeated);
        for (const auto& pt : r->points) {
            bool multiple = false;
            for (const auto& root : iso.roots) {
                const Rational mid = root.interval().midpoint();
                const Rational gap = mid - pt.x_approx;
                multiple |= abs(gap) < Rational(1, 1000);
            }
            CHECK(pt.nondegenerate == !multiple);
            ++compared;
        }
    }
    CHECK(compared >= 10);
}
