#include "fewnomial/bounds.hpp"

#include "fewnomial/errors.hpp"

#include <array>
#include <utility>

namespace fewnomial {

namespace {

constexpr std::array<std::pair<BoundFormula, const char*>, 9> kIds{{
    {BoundFormula::Khovanskii, "khovanskii"},
    {BoundFormula::BsPositive, "bs-positive"},
    {BoundFormula::DensePositive, "dense-positive"},
    {BoundFormula::BbsReal, "bbs-real"},
    {BoundFormula::DenseReal, "dense-real"},
    {BoundFormula::NearCircuit, "near-circuit"},
    {BoundFormula::KhovanskiiBetti, "khovanskii-betti"},
    {BoundFormula::BsBetti, "bs-betti"},
    {BoundFormula::DenseBetti, "dense-betti"},
}};

unsigned long ul(long v) { return static_cast<unsigned long>(v); }

Integer pow2_binom2(long m) { return ipow(Integer(2), ul(m * (m - 1) / 2)); }

void require(bool ok, const char* what)
{
    if (!ok) throw InvalidInput(what);
}

// sum_{i=0}^n C(n,i) i^e with 0^0 = 1.
Integer binomial_power_sum(long n, long e)
{
    Integer s = 0;
    for (long i = 0; i <= n; ++i) s += binomial(ul(n), ul(i)) * ipow(Integer(i), ul(e));
    return s;
}

BoundReport exact_report(BoundFormula f, const Integer& value, bool strict)
{
    BoundReport r;
    r.formula = f;
    r.raw_lo = value;
    r.raw_hi = value;
    r.strict = strict;
    r.exact = true;
    r.max_count = strict ? Integer(value - 1) : value;
    if (r.max_count < 0) r.max_count = 0;
    return r;
}

Integer floor_int(const Rational& v) { return floor_of(v).get_num(); }

// (e^x + 3)/4 * multiplier, enclosed with `terms` series terms.
std::pair<Rational, Rational> scaled_enclosure(unsigned x, const Integer& multiplier, unsigned terms)
{
    TranscendentalEnclosure e = exp_enclosure(x, terms);
    Rational m(multiplier);
    return {(e.lo + 3) / 4 * m, (e.hi + 3) / 4 * m};
}

// Irrational bound: pick the series length until the enclosure has width < 1/4
// and contains no integer, so floor is decided. The value is never an integer
// (e is transcendental and multiplier > 0), so strict and non-strict agree.
BoundReport transcendental_report(BoundFormula f, unsigned x, const Integer& multiplier, bool strict)
{
    BoundReport r;
    r.formula = f;
    r.strict = strict;
    r.e_power = x;
    r.multiplier = multiplier;
    if (multiplier == 0) {
        r.raw_lo = r.raw_hi = 0;
        r.exact = true;
        r.max_count = 0;
        return r;
    }
    const Rational limit = make_rational(1, ipow(Integer(10), 50));
    for (unsigned terms = 8;; terms += 4) {
        auto [lo, hi] = scaled_enclosure(x, multiplier, terms);
        const bool narrow = hi - lo < Rational(1, 4);
        const bool decided = floor_int(lo) == floor_int(hi) && floor_of(hi) != hi;
        if ((narrow && decided) || hi - lo < limit) {
            r.raw_lo = lo;
            r.raw_hi = hi;
            r.max_count = floor_int(lo);
            if (!decided) r.alternative = floor_int(hi);
            return r;
        }
    }
}

} // namespace

std::string formula_id(BoundFormula f)
{
    for (const auto& [k, v] : kIds)
        if (k == f) return v;
    throw InternalError("unknown formula");
}

BoundFormula parse_formula_id(const std::string& id)
{
    for (const auto& [k, v] : kIds)
        if (id == v) return k;
    throw InvalidInput("unknown formula id '" + id + "'");
}

const std::vector<BoundFormula>& all_formulas()
{
    static const std::vector<BoundFormula> all = [] {
        std::vector<BoundFormula> v;
        for (const auto& [k, name] : kIds) v.push_back(k);
        return v;
    }();
    return all;
}

TranscendentalEnclosure exp_enclosure(unsigned x, unsigned terms)
{
    require(x > 0, "exp_enclosure needs a positive argument");
    require(terms > x, "exp_enclosure needs more terms than its argument");
    Rational sum = 0;
    Rational term = 1; // x^i / i!
    for (unsigned i = 0; i < terms; ++i) {
        sum += term;
        term *= make_rational(x, i + 1);
    }
    // term = x^N / N!; tail <= term * 1 / (1 - x / (N + 1)).
    Rational tail = term / (1 - make_rational(x, terms + 1));
    return {sum, sum + tail};
}

BoundReport khovanskii_bound(long k, long n)
{
    require(k >= 0 && n >= 1, "khovanskii bound needs k >= 0, n >= 1");
    Integer v = pow2_binom2(k + n) * ipow(Integer(n + 1), ul(k + n));
    return exact_report(BoundFormula::Khovanskii, v, true);
}

BoundReport bs_positive_bound(long k, long n)
{
    require(k >= 0 && n >= 1, "bs-positive bound needs k >= 0, n >= 1");
    return transcendental_report(BoundFormula::BsPositive, 2, pow2_binom2(k) * ipow(Integer(n), ul(k)), true);
}

BoundReport dense_positive_bound(long n, long ell, long d)
{
    require(n >= 1 && ell >= 1 && d >= 1, "dense-positive bound needs n, l, d >= 1");
    Integer m = pow2_binom2(ell) * ipow(Integer(n), ul(ell)) * ipow(Integer(d), ul(ell));
    return transcendental_report(BoundFormula::DensePositive, 2, m, true);
}

BoundReport bbs_real_bound(long k, long n)
{
    require(k >= 0 && n >= 1, "bbs-real bound needs k >= 0, n >= 1");
    return transcendental_report(BoundFormula::BbsReal, 4, pow2_binom2(k) * ipow(Integer(n), ul(k)), false);
}

BoundReport dense_real_bound(long n, long ell, long d)
{
    require(n >= 1 && ell >= 1 && d >= 1, "dense-real bound needs n, l, d >= 1");
    Integer m = pow2_binom2(ell) * ipow(Integer(n), ul(ell)) * ipow(Integer(d), ul(ell));
    return transcendental_report(BoundFormula::DenseReal, 4, m, true);
}

BoundReport near_circuit_real_bound(long n, long d)
{
    require(n >= 1 && d >= 1, "near-circuit bound needs n, d >= 1");
    return exact_report(BoundFormula::NearCircuit, Integer(2 * d * n + 1), false);
}

BoundReport khovanskii_betti_bound(long k, long n)
{
    require(k >= 0 && n >= 1, "khovanskii-betti bound needs k >= 0, n >= 1");
    Integer v = ipow(Integer(2 * n * n - n + 1), ul(k + n)) * ipow(Integer(2 * n), ul(n - 1)) * pow2_binom2(k + n);
    return exact_report(BoundFormula::KhovanskiiBetti, v, false);
}

BoundReport bs_betti_bound(long k, long n)
{
    require(k >= 0 && n >= 1, "bs-betti bound needs k >= 0, n >= 1");
    return transcendental_report(BoundFormula::BsBetti, 2, pow2_binom2(k) * binomial_power_sum(n, k), true);
}

BoundReport dense_betti_bound(long n, long ell, long d)
{
    require(n >= 1 && ell >= 1 && d >= 1, "dense-betti bound needs n, l, d >= 1");
    Integer m = pow2_binom2(ell) * ipow(Integer(d), ul(ell)) * binomial_power_sum(n, ell);
    return transcendental_report(BoundFormula::DenseBetti, 2, m, true);
}

BoundReport evaluate_bound(BoundFormula f, const BoundParams& p)
{
    switch (f) {
    case BoundFormula::Khovanskii: return khovanskii_bound(p.k, p.n);
    case BoundFormula::BsPositive: return bs_positive_bound(p.k, p.n);
    case BoundFormula::DensePositive: return dense_positive_bound(p.n, p.ell, p.d);
    case BoundFormula::BbsReal: return bbs_real_bound(p.k, p.n);
    case BoundFormula::DenseReal: return dense_real_bound(p.n, p.ell, p.d);
    case BoundFormula::NearCircuit: return near_circuit_real_bound(p.n, p.d);
    case BoundFormula::KhovanskiiBetti: return khovanskii_betti_bound(p.k, p.n);
    case BoundFormula::BsBetti: return bs_betti_bound(p.k, p.n);
    case BoundFormula::DenseBetti: return dense_betti_bound(p.n, p.ell, p.d);
    }
    throw InternalError("unknown formula");
}

BoundReport refine(const BoundReport& report, const Rational& max_width)
{
    if (report.exact || report.raw_hi - report.raw_lo < max_width) return report;
    BoundReport out = report;
    for (unsigned terms = 8;; terms += 4) {
        auto [lo, hi] = scaled_enclosure(report.e_power, report.multiplier, terms);
        if (hi - lo >= max_width) continue;
        out.raw_lo = lo;
        out.raw_hi = hi;
        if (!report.alternative && floor_int(lo) != report.max_count)
            throw InternalError("refinement changed a decided max count");
        return out;
    }
}

std::string family_id(EstimateFamily f) { return f == EstimateFamily::Stratum ? "stratum" : "lemma4"; }

namespace {

EstimateAudit finish(EstimateAudit a)
{
    a.holds = a.lhs <= a.rhs;
    a.equality = a.lhs == a.rhs;
    a.margin = a.rhs - a.lhs;
    return a;
}

} // namespace

EstimateAudit stratum_estimate(long ell, long j, long n, long d)
{
    require(ell >= 1 && j >= 1 && j <= ell, "stratum estimate needs 1 <= j <= l");
    require(n >= 1 && d >= 1, "stratum estimate needs n, d >= 1");
    EstimateAudit a{EstimateFamily::Stratum, ell, j, n, d, 0, 0, false, false, 0};
    const Integer common = pow2_binom2(ell - j) * ipow(Integer(n), ul(ell - j));
    Integer sum = 0;
    for (long q = 0; q <= j; ++q)
        sum += binomial(ul(ell + 1), ul(j - q)) * binomial(ul(n), ul(q)) * ipow(Integer(d), ul(q));
    a.lhs = common * ipow(Integer(d), ul(ell - j)) * sum;
    a.rhs = common * binomial(ul(1 + ell + n), ul(j)) * ipow(Integer(d), ul(ell));
    return finish(a);
}

EstimateAudit audit_lemma_estimates4(long ell, long j, long n)
{
    require(ell >= 1 && j >= 1 && j <= ell, "lemma audit needs 1 <= j <= l");
    require(n >= 1, "lemma audit needs n >= 1");
    EstimateAudit a{EstimateFamily::Lemma4, ell, j, n, 0, 0, 0, false, false, 0};
    a.lhs = pow2_binom2(ell - j) * ipow(Integer(n), ul(ell - j)) * binomial(ul(1 + ell + n), ul(j));
    Integer jfact;
    mpz_fac_ui(jfact.get_mpz_t(), ul(j));
    a.rhs = Rational(ipow(Integer(2), ul(j)), jfact) / 2 * Rational(pow2_binom2(ell) * ipow(Integer(n), ul(ell)));
    return finish(a);
}

std::vector<EstimateAudit> audit_grid(long max_ell, long max_n, long max_d)
{
    std::vector<EstimateAudit> out;
    for (long ell = 1; ell <= max_ell; ++ell)
        for (long j = 1; j <= ell; ++j)
            for (long n = 1; n <= max_n; ++n) {
                for (long d = 1; d <= max_d; ++d) out.push_back(stratum_estimate(ell, j, n, d));
                out.push_back(audit_lemma_estimates4(ell, j, n));
            }
    return out;
}

} // namespace fewnomial
