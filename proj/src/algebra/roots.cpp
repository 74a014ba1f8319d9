#include "fewnomial/roots.hpp"

#include "fewnomial/errors.hpp"

#include <algorithm>

namespace fewnomial {

namespace {

constexpr int kRefinementCap = 10000;
constexpr int kFilterSteps = 64;

int variations_at(const std::vector<IntegerPolynomial>& seq, const std::optional<Rational>& at, bool negative_infinity)
{
    int count = 0;
    int last = 0;
    for (const auto& p : seq) {
        int s = at ? sign_at(p, *at) : sign_at_infinity(p, negative_infinity);
        if (s == 0) continue;
        if (last != 0 && s != last) ++count;
        last = s;
    }
    return count;
}

// q(lo + (hi - lo) x) as a sign-preserving integer polynomial.
IntegerPolynomial rescaled(const IntegerPolynomial& q, const Interval& interval)
{
    UnivariatePolynomial affine({interval.lo, interval.width()});
    return primitive_integer(compose(to_rational(q), affine));
}

int unit_interval_variations(IntegerPolynomial q)
{
    // Roots in (0, 1) correspond to positive roots of (x + 1)^n q(1 / (x + 1)).
    std::reverse(q.begin(), q.end());
    taylor_shift_one(q);
    return sign_variations(q);
}

Integer root_bound_power_of_two(const IntegerPolynomial& p)
{
    // Cauchy: every root satisfies |z| < 1 + max |c_i / c_n|.
    Integer lead = abs(p.back());
    Integer m = 0;
    for (std::size_t i = 0; i + 1 < p.size(); ++i) m = std::max(m, Integer(abs(p[i])));
    Integer bound = 2 + m / lead;
    Integer b = 1;
    while (b < bound) b *= 2;
    return b;
}

// Rational with the smallest denominator in the open interval (lo, hi); a
// missing hi means +infinity.
Rational simplest_between(const Rational& lo, const std::optional<Rational>& hi)
{
    Rational f = floor_of(lo);
    if (!hi || f + 1 < *hi) return f + 1;
    const Rational a = lo - f;
    const Rational b = *hi - f;
    std::optional<Rational> upper;
    if (a != 0) upper = 1 / a;
    return f + 1 / simplest_between(1 / b, upper);
}

struct Node {
    IntegerPolynomial q; // p(a + w x), up to a positive factor
    Rational a;
    Rational w;
};

} // namespace

// ---------------------------------------------------------------------------

RealRoot::RealRoot(IntegerPolynomial defining, const Rational& exact)
    : defining_(std::move(defining)), interval_{exact, exact}, exact_(true)
{
}

RealRoot::RealRoot(IntegerPolynomial defining, Interval isolating)
    : defining_(std::move(defining)), interval_(std::move(isolating)), exact_(false)
{
    sign_lo_ = sign_at(defining_, interval_.lo);
    const int sign_hi = sign_at(defining_, interval_.hi);
    if (sign_lo_ == 0 || sign_hi == 0 || sign_lo_ == sign_hi)
        throw InternalError("isolating interval endpoints must be non-roots of opposite sign");
}

void RealRoot::bisect()
{
    if (exact_) return;
    Rational mid = interval_.midpoint();
    int s = sign_at(defining_, mid);
    if (s == 0) {
        interval_ = {mid, mid};
        exact_ = true;
    } else if (s == sign_lo_) {
        interval_.lo = mid;
    } else {
        interval_.hi = mid;
    }
}

void RealRoot::refine_to(const Rational& max_width)
{
    for (int i = 0; !exact_ && interval_.width() >= max_width; ++i) {
        if (i > kRefinementCap) throw InternalError("root refinement cap exceeded");
        bisect();
    }
}

// ---------------------------------------------------------------------------

std::vector<IntegerPolynomial> sturm_sequence(const UnivariatePolynomial& p)
{
    if (p.is_zero()) throw InvalidInput("Sturm sequence of the zero polynomial");
    std::vector<IntegerPolynomial> seq;
    seq.push_back(squarefree_integer(p));
    if (degree(seq[0]) <= 0) return seq;
    IntegerPolynomial d;
    for (int i = 1; i <= degree(seq[0]); ++i) d.push_back(seq[0][static_cast<std::size_t>(i)] * i);
    seq.push_back(remove_content(std::move(d)));
    while (degree(seq.back()) > 0) {
        IntegerPolynomial r = signed_prem(seq[seq.size() - 2], seq.back());
        if (r.empty()) break;
        for (auto& c : r) c = -c;
        seq.push_back(remove_content(std::move(r)));
    }
    return seq;
}

int sturm_count(const UnivariatePolynomial& p, const std::optional<Rational>& lo, const std::optional<Rational>& hi)
{
    if (p.is_zero()) throw InvalidInput("Sturm count of the zero polynomial");
    if (lo && hi && *hi <= *lo) return 0;
    auto seq = sturm_sequence(p);
    return variations_at(seq, lo, true) - variations_at(seq, hi, false);
}

int descartes_bound(const IntegerPolynomial& q, const Interval& interval)
{
    if (q.empty()) throw InvalidInput("Descartes bound of the zero polynomial");
    return unit_interval_variations(rescaled(q, interval));
}

RootIsolation isolate_real_roots(const UnivariatePolynomial& p)
{
    if (p.is_zero()) throw InvalidInput("root isolation of the zero polynomial");
    return isolate_real_roots(squarefree_integer(p));
}

RootIsolation isolate_real_roots(const IntegerPolynomial& p)
{
    if (p.empty()) throw InvalidInput("root isolation of the zero polynomial");
    RootIsolation out;
    if (degree(p) <= 0) return out;

    const Integer bound = root_bound_power_of_two(p);
    std::vector<Interval> leaves;
    std::vector<Node> stack;
    stack.push_back({rescaled(p, {Rational(-bound), Rational(bound)}), Rational(-bound), Rational(2 * bound)});

    while (!stack.empty()) {
        Node node = std::move(stack.back());
        stack.pop_back();
        const int v = unit_interval_variations(node.q);
        if (v == 0) continue;
        if (v == 1) {
            leaves.push_back({node.a, node.a + node.w});
            continue;
        }
        const int n = degree(node.q);
        IntegerPolynomial left = node.q;
        for (int i = 0; i <= n; ++i) left[static_cast<std::size_t>(i)] <<= static_cast<mp_bitcnt_t>(n - i);
        IntegerPolynomial right = left;
        taylor_shift_one(right);
        const Rational half = node.w / 2;
        if (right.front() == 0) {
            out.exact_roots.push_back(node.a + half);
            right.erase(right.begin());
        }
        stack.push_back({remove_content(std::move(right)), node.a + half, half});
        stack.push_back({remove_content(std::move(left)), node.a, half});
    }

    // Leaves may end at an exact root found at a bisection midpoint. Shrink
    // them until both endpoints are non-roots.
    for (auto& leaf : leaves) {
        while (sign_at(p, leaf.lo) == 0 || sign_at(p, leaf.hi) == 0) {
            Rational mid = leaf.midpoint();
            if (sign_at(p, mid) == 0) {
                // The leaf's single root is the midpoint itself.
                out.exact_roots.push_back(mid);
                leaf.hi = leaf.lo;
                break;
            }
            if (descartes_bound(p, {leaf.lo, mid}) % 2 == 1) leaf.hi = mid;
            else leaf.lo = mid;
        }
        if (leaf.hi == leaf.lo) continue;

        // Split at simple rationals so that rational roots come out exact. A
        // rational root has a denominator dividing the leading coefficient, so
        // once the simplest rational inside has a larger one there is none.
        const Integer lead = abs(p.back());
        const int sign_lo = sign_at(p, leaf.lo);
        bool exact = false;
        for (int step = 0; step < 32; ++step) {
            Rational c = simplest_between(leaf.lo, leaf.hi);
            if (c.get_den() > lead) break;
            int s = sign_at(p, c);
            if (s == 0) {
                out.exact_roots.push_back(c);
                exact = true;
                break;
            }
            if (s == sign_lo) leaf.lo = c;
            else leaf.hi = c;
        }
        if (!exact) out.intervals.push_back(leaf);
    }

    std::sort(out.exact_roots.begin(), out.exact_roots.end());
    std::sort(out.intervals.begin(), out.intervals.end(), [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
    for (const auto& r : out.exact_roots) out.roots.emplace_back(p, r);
    for (const auto& iv : out.intervals) out.roots.emplace_back(p, iv);
    std::sort(out.roots.begin(), out.roots.end(),
              [](const RealRoot& a, const RealRoot& b) { return a.lower() < b.lower(); });
    return out;
}

int sign_at_root(const UnivariatePolynomial& q, RealRoot& root)
{
    return sign_at_root(primitive_integer(q), root);
}

int sign_at_root(const IntegerPolynomial& q, RealRoot& root)
{
    if (q.empty()) return 0;
    if (root.is_exact()) return sign_at(q, root.value());

    // Cheap filter first: interval evaluation on a shrinking isolating interval.
    for (int i = 0; i < kFilterSteps && !root.is_exact(); ++i) {
        Interval e = evaluate_on(q, root.interval());
        if (e.lo > 0) return 1;
        if (e.hi < 0) return -1;
        root.bisect();
    }
    if (root.is_exact()) return sign_at(q, root.value());

    IntegerPolynomial g = gcd(root.defining(), q);
    if (degree(g) > 0) {
        // g divides the defining polynomial, so its only possible root inside
        // the isolating interval is this root.
        const int lo = sign_at(g, root.interval().lo);
        const int hi = sign_at(g, root.interval().hi);
        if (lo * hi < 0) return 0;
    }
    for (int i = 0; i < kRefinementCap; ++i) {
        if (root.is_exact()) return sign_at(q, root.value());
        if (descartes_bound(q, root.interval()) == 0) return sign_at(q, root.interval().midpoint());
        root.bisect();
    }
    throw InternalError("sign decision exceeded the refinement cap");
}

Interval evaluate_on(const IntegerPolynomial& q, const Interval& x)
{
    Interval acc{0, 0};
    for (std::size_t i = q.size(); i-- > 0;) {
        Rational p1 = acc.lo * x.lo, p2 = acc.lo * x.hi, p3 = acc.hi * x.lo, p4 = acc.hi * x.hi;
        acc = {std::min({p1, p2, p3, p4}) + q[i], std::max({p1, p2, p3, p4}) + q[i]};
    }
    return acc;
}

Interval evaluate_on(const UnivariatePolynomial& q, const Interval& x)
{
    Interval acc{0, 0};
    for (int i = q.degree(); i >= 0; --i) {
        Rational p1 = acc.lo * x.lo, p2 = acc.lo * x.hi, p3 = acc.hi * x.lo, p4 = acc.hi * x.hi;
        Rational lo = std::min({p1, p2, p3, p4});
        Rational hi = std::max({p1, p2, p3, p4});
        const Rational c = q.coefficient(i);
        acc = {lo + c, hi + c};
    }
    return acc;
}

Interval enclose_value(const UnivariatePolynomial& q, RealRoot& root, const Rational& max_width)
{
    for (int i = 0; i < kRefinementCap; ++i) {
        if (root.is_exact()) {
            Rational v = q(root.value());
            return {v, v};
        }
        Interval e = evaluate_on(q, root.interval());
        if (e.width() < max_width) return e;
        root.bisect();
    }
    throw InternalError("value enclosure exceeded the refinement cap");
}

} // namespace fewnomial
