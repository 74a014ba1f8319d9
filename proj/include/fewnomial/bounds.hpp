#pragma once

// Closed-form real-solution and Betti-number bounds, evaluated with rigorous
// rational enclosures of e^2 and e^4, and the combinatorial estimate audits.

#include "fewnomial/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace fewnomial {

enum class BoundFormula {
    Khovanskii,      // 2^C(k+n,2) (n+1)^(k+n), positive solutions
    BsPositive,      // (e^2+3)/4 2^C(k,2) n^k
    DensePositive,   // (e^2+3)/4 2^C(l,2) n^l d^l
    BbsReal,         // (e^4+3)/4 2^C(k,2) n^k
    DenseReal,       // (e^4+3)/4 2^C(l,2) n^l d^l
    NearCircuit,     // 2dn + 1
    KhovanskiiBetti, // (2n^2-n+1)^(k+n) (2n)^(n-1) 2^C(k+n,2)
    BsBetti,         // (e^2+3)/4 2^C(k,2) sum_i C(n,i) i^k
    DenseBetti,      // (e^2+3)/4 2^C(l,2) d^l sum_i C(n,i) i^l
};

std::string formula_id(BoundFormula f);
/// Accepts the ids produced by formula_id; throws InvalidInput otherwise.
BoundFormula parse_formula_id(const std::string& id);
const std::vector<BoundFormula>& all_formulas();

struct TranscendentalEnclosure {
    Rational lo;
    Rational hi;
};

/// e^x for a small positive integer x, from `terms` series terms plus a tail bound.
TranscendentalEnclosure exp_enclosure(unsigned x, unsigned terms);

struct BoundReport {
    BoundFormula formula;
    Rational raw_lo;
    Rational raw_hi;
    bool strict = true;
    bool exact = false;        // integer formula, raw_lo == raw_hi
    unsigned e_power = 0;      // 2 or 4 for (e^x + 3)/4 * multiplier; 0 when exact
    Integer multiplier;        // integer factor of the irrational formulas
    Integer max_count;
    /// Set only when the enclosure could not separate two integer candidates.
    std::optional<Integer> alternative;
};

struct BoundParams {
    long n = 1;
    long ell = 1;
    long d = 1;
    long k = 0;
};

BoundReport khovanskii_bound(long k, long n);
BoundReport bs_positive_bound(long k, long n);
BoundReport dense_positive_bound(long n, long ell, long d);
BoundReport bbs_real_bound(long k, long n);
BoundReport dense_real_bound(long n, long ell, long d);
BoundReport near_circuit_real_bound(long n, long d);
BoundReport khovanskii_betti_bound(long k, long n);
BoundReport bs_betti_bound(long k, long n);
BoundReport dense_betti_bound(long n, long ell, long d);

/// Dispatches on the formula, using the parameters it needs.
BoundReport evaluate_bound(BoundFormula f, const BoundParams& p);

/// Narrows an irrational report's enclosure further; max_count never changes.
BoundReport refine(const BoundReport& report, const Rational& max_width);

enum class EstimateFamily { Stratum, Lemma4 };

struct EstimateAudit {
    EstimateFamily family;
    long ell = 0;
    long j = 0;
    long n = 0;
    long d = 0; // 0 for the lemma family, which has no d
    Rational lhs;
    Rational rhs;
    bool holds = false;    // lhs <= rhs
    bool equality = false; // lhs == rhs
    Rational margin;       // rhs - lhs
};

std::string family_id(EstimateFamily f);

/// Boundary-stratum count versus its claimed ceiling.
EstimateAudit stratum_estimate(long ell, long j, long n, long d);
/// lhs = 2^binom(l-j,2) n^(l-j) binom(1+l+n, j) against rhs = 2^j 2^binom(l,2) n^l / (2 j!).
EstimateAudit audit_lemma_estimates4(long ell, long j, long n);

/// For l = 1..max_ell, j = 1..l, n = 1..max_n: the stratum audits for
/// d = 1..max_d, followed by the single lemma audit for (l, j, n).
std::vector<EstimateAudit> audit_grid(long max_ell, long max_n, long max_d);

} // namespace fewnomial
