#include "fewnomial/cli.hpp"

#include "fewnomial/errors.hpp"
#include "fewnomial/random.hpp"

#include <CLI11.hpp>
#include <openssl/evp.h>

#include <iomanip>
#include <ostream>
#include <sstream>

namespace fewnomial::cli {

namespace {

std::string decimal_floor(const Rational& v, int digits)
{
    const Integer scale = ipow(Integer(10), static_cast<unsigned long>(digits));
    return to_decimal(floor_of(v * scale) / scale, digits);
}

std::string decimal_ceil(const Rational& v, int digits)
{
    const Integer scale = ipow(Integer(10), static_cast<unsigned long>(digits));
    return to_decimal(-floor_of(-v * scale) / scale, digits);
}

std::string render_bound(const BoundReport& b)
{
    std::ostringstream os;
    if (b.exact) {
        os << "raw = " << to_string(b.raw_lo) << (b.strict ? " (strict)" : " (attained)");
    } else {
        os << "raw ∈ (" << decimal_floor(b.raw_lo, 6) << ", " << decimal_ceil(b.raw_hi, 6) << ")";
    }
    os << ", max count " << to_string(b.max_count);
    if (b.alternative) os << " or " << to_string(*b.alternative) << " (undecided)";
    return os.str();
}

long require(const std::optional<long>& v, const char* name, BoundFormula f)
{
    if (!v) throw InvalidInput(formula_id(f) + " needs --" + name);
    return *v;
}

bool uses_k(BoundFormula f)
{
    switch (f) {
    case BoundFormula::Khovanskii:
    case BoundFormula::BsPositive:
    case BoundFormula::BbsReal:
    case BoundFormula::KhovanskiiBetti:
    case BoundFormula::BsBetti: return true;
    default: return false;
    }
}

bool uses_ell(BoundFormula f)
{
    return f == BoundFormula::DensePositive || f == BoundFormula::DenseReal || f == BoundFormula::DenseBetti;
}

BoundReport evaluate_with(BoundFormula f, const BoundsArgs& a)
{
    BoundParams p;
    p.n = require(a.n, "n", f);
    if (uses_k(f)) {
        p.k = require(a.k, "k", f);
    } else {
        p.d = require(a.d, "d", f);
        if (uses_ell(f)) p.ell = require(a.ell, "ell", f);
    }
    return refine(evaluate_bound(f, p), make_rational(1, 1000000));
}

std::vector<std::string> variable_names(std::size_t count, const std::string& stem)
{
    std::vector<std::string> names;
    for (std::size_t i = 1; i <= count; ++i) names.push_back(stem + std::to_string(i));
    return names;
}

std::string power(const std::string& base, long e)
{
    return e == 1 ? base : base + "^" + std::to_string(e);
}

// y^(beta+) h^(gamma+) - y^(beta-) h^(gamma-) with the factors named.
std::string relation_equation(const GaleRelation& r)
{
    auto side = [&](int s) {
        std::string out;
        auto put = [&](const std::string& base, long e) {
            if (e * s <= 0) return;
            if (!out.empty()) out += " ";
            out += power(base, e * s);
        };
        for (std::size_t m = 0; m < r.beta.size(); ++m) put("y" + std::to_string(m + 1), r.beta[m]);
        for (std::size_t i = 0; i < r.gamma.size(); ++i) put("h" + std::to_string(i + 1), r.gamma[i]);
        return out.empty() ? std::string("1") : out;
    };
    return side(1) + " - " + side(-1);
}

FewnomialSystem system_of(const SystemFile& s)
{
    if (s.polynomials.size() != s.variables.size())
        throw InvalidInput("a square system needs as many polynomials as variables");
    return FewnomialSystem::from_polynomials(s.polynomials);
}

DenseDecomposition decomposition_for(const Json& file, const FewnomialSystem& sys, std::optional<long> d,
                                     std::optional<long> ell)
{
    if (file.contains("decomposition") && !d && !ell) {
        DenseDecomposition dec = decomposition_from_json(file.at("decomposition"));
        const DecompositionCheck check = verify_decomposition(sys.support, dec);
        if (!check.ok) throw AlgebraicPreconditionError("the given decomposition does not match the support");
        return dec;
    }
    if (!d || !ell) throw InvalidInput("give --d and --ell or a 'decomposition' in the file");
    if (*d < 1 || *ell < 1) throw InvalidInput("d and ell must be positive");
    auto found = search_decomposition(sys.support, *d, static_cast<std::size_t>(*ell));
    if (!found) throw AlgebraicPreconditionError("support is not (" + std::to_string(*d) + ", " + std::to_string(*ell) +
                                                 ")-dense");
    return *found;
}

Sublattice relations_for(const Json& file, const DenseDecomposition& dec)
{
    if (file.contains("relations")) return relations_from_json(file.at("relations"), dec.ell + dec.nvars());
    return default_relations(dec);
}

std::string render_points(const CountReport& r)
{
    std::ostringstream os;
    for (const auto& p : r.points)
        os << "  (" << p.x_preview << ", " << p.y_preview << ")" << (p.nondegenerate ? "" : "  degenerate") << "\n";
    return os.str();
}

bool is_gale_file(const Json& j)
{
    return j.is_object() && j.contains("h") && j.contains("relations") && j.contains("ell") && !j.contains("polynomials");
}

struct Assertion {
    std::string name;
    std::string expected;
    std::string actual;
    bool pass = false;
};

Assertion check_equal(std::string name, long expected, long actual)
{
    return {std::move(name), std::to_string(expected), std::to_string(actual), expected == actual};
}

Json previews(const CountReport& r)
{
    Json out = Json::array();
    for (const auto& p : r.points) out.push_back(Json::array({p.x_preview, p.y_preview}));
    return out;
}

} // namespace

std::string sha256_hex(std::string_view bytes)
{
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int length = 0;
    if (EVP_Digest(bytes.data(), bytes.size(), digest, &length, EVP_sha256(), nullptr) != 1)
        throw InternalError("SHA-256 failed");
    std::ostringstream os;
    for (unsigned int i = 0; i < length; ++i) os << std::hex << std::setw(2) << std::setfill('0') << int(digest[i]);
    return os.str();
}

Json make_envelope(const std::string& command, const Json& inputs, const Json& result,
                   std::optional<std::uint64_t> seed)
{
    Json env{{"command", command},
             {"inputs_digest", "sha256:" + sha256_hex(inputs.dump())},
             {"result", result},
             {"tool_version", kToolVersion}};
    if (seed) env["seed"] = *seed;
    return env;
}

Outcome cmd_bounds(const BoundsArgs& args)
{
    Outcome o;
    if (!args.formula.empty() && args.formula != "all") {
        const BoundFormula f = parse_formula_id(args.formula);
        const BoundReport b = evaluate_with(f, args);
        o.result = to_json(b);
        o.text = formula_id(f) + ": " + render_bound(b) + "\n";
        return o;
    }
    // Comparison table: a (d, l)-dense support seen as a fewnomial has
    // binom(d + l, l) + n monomials, so k = binom(d + l, l) - 1 by default.
    if (!args.n || !args.ell || !args.d) throw InvalidInput("the comparison table needs --n, --ell and --d");
    if (*args.ell < 1 || *args.d < 1) throw InvalidInput("ell and d must be positive");
    BoundsArgs a = args;
    if (!a.k) a.k = binomial(static_cast<unsigned long>(*a.d + *a.ell), static_cast<unsigned long>(*a.ell)).get_si() - 1;
    Json rows = Json::array();
    std::ostringstream os;
    os << "n = " << *a.n << ", ell = " << *a.ell << ", d = " << *a.d << ", k = " << *a.k << "\n";
    for (BoundFormula f : all_formulas()) {
        const BoundReport b = evaluate_with(f, a);
        rows.push_back(to_json(b));
        os << std::left << std::setw(18) << formula_id(f) << render_bound(b) << "\n";
    }
    o.result = Json{{"n", *a.n}, {"ell", *a.ell}, {"d", *a.d}, {"k", *a.k}, {"table", rows}};
    o.text = os.str();
    return o;
}

Outcome cmd_analyze(const Json& support_file, long d, long ell, std::uint64_t budget)
{
    if (d < 1 || ell < 1) throw InvalidInput("d and ell must be positive");
    const SupportSet a = support_from_json(support_file);
    Outcome o;
    const auto found = search_decomposition(a, d, static_cast<std::size_t>(ell), SearchOptions{budget});
    const LatticeIndex index = affine_span_index(a.points());
    const bool odd = !is_infinite(index) && std::get<Integer>(index) % 2 != 0;
    std::ostringstream os;
    o.result = Json{{"status", found ? "FOUND" : "NOT_FOUND"}};
    if (found) {
        o.result["decomposition"] = to_json(*found);
        Json dj = to_json(*found);
        os << "FOUND d = " << d << ", ell = " << ell << ", v0 = " << dj["v0"].dump() << ", v = " << dj["v"].dump()
           << ", W = " << dj["W"].dump() << "\n";
    } else {
        os << "NOT_FOUND\n";
    }
    o.result["affine_span_index"] = to_string(index);
    o.result["span_index_odd"] = odd;
    os << "affine span index " << to_string(index) << (odd ? " (odd)" : is_infinite(index) ? "" : " (even)") << "\n";
    if (a.nvars() == 2 && a.size() > 0) {
        const Integer vol = normalized_volume(a);
        o.result["normalized_volume"] = to_string(vol);
        os << "normalized volume " << to_string(vol) << "\n";
    }
    o.text = os.str();
    return o;
}

Outcome cmd_dualize(const Json& system_file, std::optional<long> d, std::optional<long> ell)
{
    const SystemFile s = system_file_from_json(system_file);
    const FewnomialSystem sys = system_of(s);
    const DenseDecomposition dec = decomposition_for(system_file, sys, d, ell);
    const GaleSystem gs = build_gale_system(diagonalize(sys, dec), relations_for(system_file, dec));
    const auto names = variable_names(gs.ell, "y");

    Outcome o;
    o.result = to_json(gs);
    o.result["decomposition"] = to_json(dec);
    Json eqs = Json::array();
    std::ostringstream os;
    for (std::size_t i = 0; i < gs.h.size(); ++i) os << "h" << i + 1 << " = " << to_string(gs.h[i], names) << "\n";
    for (std::size_t j = 0; j < gs.relations.size(); ++j) {
        const std::string eq = relation_equation(gs.relations[j]);
        eqs.push_back(eq);
        os << eq << " = 0\n";
    }
    o.result["equations"] = eqs;
    o.text = os.str();
    return o;
}

Outcome cmd_count(const Json& file, const std::string& region, std::uint64_t seed, bool certificates)
{
    CountOptions options;
    options.seed = seed;
    CountReport report;
    std::vector<std::string> regions;
    if (is_gale_file(file)) {
        const GaleSystem gs = gale_system_from_json(file);
        if (gs.ell != 2) throw InvalidInput("counting needs a Gale system in two variables");
        report = count_gale(gs, options);
        regions = {"m_real", "delta"};
    } else {
        const SystemFile s = system_file_from_json(file);
        if (s.variables.size() != 2 || s.polynomials.size() != 2)
            throw InvalidInput("counting needs two polynomials in two variables");
        report = count_real_solutions_2d(s.polynomials[0], s.polynomials[1], options);
        regions = {"real", "positive"};
    }

    Outcome o;
    o.result = Json{{"region", region}};
    std::ostringstream os;
    if (region == "all") {
        os << "total real " << report.total_real << " (nondegenerate " << report.nondegenerate_real << ")\n";
        for (const auto& r : regions) os << r << " " << report.per_region.at(r) << "\n";
    } else {
        if (std::find(regions.begin(), regions.end(), region) == regions.end())
            throw InvalidInput("unknown region '" + region + "' for this input");
        o.result["count"] = report.per_region.at(region);
        os << region << " " << report.per_region.at(region) << "\n";
    }
    if (report.on_axes > 0) os << "on coordinate axes (excluded) " << report.on_axes << "\n";
    if (report.boundary > 0) os << "on some h_i = 0 (excluded) " << report.boundary << "\n";
    os << render_points(report);
    o.result["report"] = to_json(report, certificates);
    o.text = os.str();
    return o;
}

Outcome cmd_verify(const Json& system_file, std::optional<long> d, std::optional<long> ell, std::uint64_t seed)
{
    const SystemFile s = system_file_from_json(system_file);
    const FewnomialSystem sys = system_of(s);
    if (sys.nvars != 2) throw InvalidInput("verification needs a system in two variables");
    const DenseDecomposition dec = decomposition_for(system_file, sys, d, ell);
    if (dec.ell != 2) throw InvalidInput("verification needs ell = 2");
    CountOptions options;
    options.seed = seed;
    const CorrespondenceVerdict v = verify_correspondence(sys, dec, relations_for(system_file, dec), options);

    Outcome o;
    o.result = to_json(v);
    std::ostringstream os;
    os << "positive: original " << v.original_positive << ", Gale " << v.gale_delta << ", "
       << (v.positive_equal ? "equal" : "DIFFERENT") << "\n";
    if (v.real_checked)
        os << "real: original " << v.original_real << ", Gale " << v.gale_m_real << ", "
           << (v.real_equal ? "equal" : "DIFFERENT") << "\n";
    else
        os << "real: not checked (odd-index hypotheses fail)\n";
    os << (v.ok() ? "verdict ok" : "verdict FAILED") << "\n";
    o.text = os.str();
    o.exit_code = v.ok() ? kOk : kAssertionFailed;
    return o;
}

Outcome cmd_verify_example(std::uint64_t seed, const std::optional<Corruption>& corruption)
{
    const Json fixture = Json::parse(embedded_worked_example());
    SystemFile s = system_file_from_json(fixture);
    if (corruption) {
        const ExponentVector zero(s.variables.size(), 0);
        LaurentPolynomial& f = s.polynomials[0];
        f.add_term(zero, corruption->constant_term - f.coefficient(zero));
    }
    const Json& expected = fixture.at("expected");
    const FewnomialSystem sys = system_of(s);
    std::vector<Assertion> checks;

    const DenseDecomposition dec = decomposition_from_json(fixture.at("decomposition"));
    const bool searched = search_decomposition(sys.support, dec.d, dec.ell).has_value();
    const bool given_ok = verify_decomposition(sys.support, dec).ok;
    checks.push_back({"decomposition found", "true", searched && given_ok ? "true" : "false", searched && given_ok});

    const DiagonalizedSystem diag = diagonalize(sys, dec);
    bool h_equal = diag.h.size() == fixture.at("h").size();
    for (std::size_t i = 0; h_equal && i < diag.h.size(); ++i)
        h_equal = diag.h[i] == polynomial_from_json(fixture.at("h")[i], dec.ell);
    checks.push_back({"h equals the solved system", "true", h_equal ? "true" : "false", h_equal});

    const long mv = mixed_volume_2d(support_of(s.polynomials[0]), support_of(s.polynomials[1])).get_si();
    checks.push_back(check_equal("mixed volume", expected.at("mixed_volume").get<long>(), mv));

    CountOptions options;
    options.seed = seed;
    const CountReport original = count_real_solutions_2d(s.polynomials[0], s.polynomials[1], options);
    checks.push_back(check_equal("real solutions", expected.at("real").get<long>(), original.total_real));
    checks.push_back(
        check_equal("positive solutions", expected.at("positive").get<long>(), original.per_region.at("positive")));

    const Sublattice relations = relations_from_json(fixture.at("relations"), dec.ell + dec.nvars());
    const GaleSystem gs = build_gale_system(diag, relations);
    const CountReport gale = count_gale(gs, options);
    checks.push_back(
        check_equal("Gale solutions in M(R)", expected.at("gale_m_real").get<long>(), gale.per_region.at("m_real")));
    checks.push_back(
        check_equal("Gale solutions in Delta", expected.at("gale_delta").get<long>(), gale.per_region.at("delta")));

    const BoundReport bound = dense_positive_bound(2, 2, 2);
    const long bound_expected = expected.at("positive_bound").get<long>();
    checks.push_back({"positive bound respected",
                      "<= " + std::to_string(bound_expected) + " (bound " + to_string(bound.max_count) + ")",
                      std::to_string(original.per_region.at("positive")),
                      bound.max_count == bound_expected && check_bound_compliance(original.per_region.at("positive"), bound)});

    const CorrespondenceVerdict verdict = compare_counts(check_hypotheses(sys.support, relations, dec), original, gale);

    Outcome o;
    Json list = Json::array();
    std::ostringstream os;
    Json failures = Json::array();
    for (const auto& c : checks) {
        list.push_back(Json{{"name", c.name}, {"expected", c.expected}, {"actual", c.actual}, {"pass", c.pass}});
        os << (c.pass ? "PASS " : "FAIL ") << c.name << ": expected " << c.expected << ", got " << c.actual << "\n";
        if (!c.pass) failures.push_back(c.name + " (expected " + c.expected + ", got " + c.actual + ")");
    }
    o.result = Json{{"assertions", list},
                    {"all_pass", failures.empty()},
                    {"original_points", previews(original)},
                    {"gale_points", previews(gale)},
                    {"correspondence", to_json(verdict)}};
    if (!failures.empty()) {
        o.exit_code = kAssertionFailed;
        o.result["failures"] = failures;
    }
    o.text = os.str();
    return o;
}

Outcome cmd_audit(long max_ell, long max_n, long max_d)
{
    if (max_ell < 0 || max_n < 0 || max_d < 0) throw InvalidInput("audit caps must be nonnegative");
    const auto audits = audit_grid(max_ell, max_n, max_d);
    Outcome o;
    Json rows = Json::array();
    std::ostringstream os;
    for (const auto& a : audits) {
        rows.push_back(to_json(a));
        os << std::left << std::setw(8) << family_id(a.family) << "ell=" << a.ell << " j=" << a.j << " n=" << a.n;
        if (a.family == EstimateFamily::Stratum) os << " d=" << a.d;
        os << "  " << to_string(a.lhs) << " vs " << to_string(a.rhs) << "  "
           << (a.equality ? "EQUALITY" : a.holds ? "holds" : "VIOLATED") << "\n";
    }
    o.result = Json{{"max_ell", max_ell}, {"max_n", max_n}, {"max_d", max_d}, {"audits", rows}};
    o.text = os.str();
    return o;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Bounds, Gale duality and certified real solution counts for dense fewnomial systems", "fewnomial"};
    app.require_subcommand(1);
    app.fallthrough();
    bool json = false;
    std::optional<std::uint64_t> seed_arg;
    app.add_flag("--json", json, "print the report envelope as JSON");
    app.add_option("--seed", seed_arg, "seed for randomized choices (default: $FEWNOMIAL_SEED)");

    BoundsArgs bargs;
    auto* bounds = app.add_subcommand("bounds", "evaluate bound formulas");
    bounds->add_option("--n", bargs.n);
    bounds->add_option("--ell", bargs.ell);
    bounds->add_option("--d", bargs.d);
    bounds->add_option("--k", bargs.k);
    bounds->add_option("--formula", bargs.formula, "formula id, or 'all' for the comparison table");

    std::string path;
    long d = 0;
    long ell = 0;
    std::uint64_t budget = SearchOptions{}.budget;
    auto* analyze = app.add_subcommand("analyze", "search a support for a (d, l)-dense decomposition");
    analyze->add_option("support", path, "support or system JSON file")->required();
    analyze->add_option("--d", d)->required();
    analyze->add_option("--ell", ell)->required();
    analyze->add_option("--budget", budget, "candidate cap");

    std::optional<long> opt_d;
    std::optional<long> opt_ell;
    auto* dualize = app.add_subcommand("dualize", "print the Gale dual system");
    dualize->add_option("system", path)->required();
    dualize->add_option("--d", opt_d);
    dualize->add_option("--ell", opt_ell);

    std::string region = "all";
    bool certificates = false;
    auto* count = app.add_subcommand("count", "certified count of real solutions (two variables)");
    count->add_option("system", path, "system or Gale JSON file")->required();
    count->add_option("--region", region, "all, real, positive, m_real or delta");
    count->add_flag("--certificates", certificates, "include defining polynomials and coordinate maps");

    auto* verify = app.add_subcommand("verify", "check that original and Gale counts agree");
    verify->add_option("system", path)->required();
    verify->add_option("--d", opt_d);
    verify->add_option("--ell", opt_ell);

    std::optional<std::string> corrupt;
    auto* example = app.add_subcommand("verify-example", "run the full pipeline on the embedded worked example");
    example->add_option("--corrupt-coefficient", corrupt)->group("");

    long max_ell = 4;
    long max_n = 4;
    long max_d = 3;
    auto* audit = app.add_subcommand("audit", "audit the combinatorial estimates on a grid");
    audit->add_option("--max-ell", max_ell);
    audit->add_option("--max-n", max_n);
    audit->add_option("--max-d", max_d);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kInputError;
    }

    try {
        const std::uint64_t seed = seed_arg ? *seed_arg : default_seed();
        std::string command;
        Json inputs;
        std::optional<std::uint64_t> used_seed;
        Outcome o;
        auto load = [&] {
            Json file = read_json_file(path);
            inputs["file"] = file;
            return file;
        };
        auto put = [&](const char* key, const std::optional<long>& v) {
            if (v) inputs["arguments"][key] = *v;
        };

        if (*bounds) {
            command = "bounds";
            put("n", bargs.n);
            put("ell", bargs.ell);
            put("d", bargs.d);
            put("k", bargs.k);
            inputs["arguments"]["formula"] = bargs.formula;
            o = cmd_bounds(bargs);
        } else if (*analyze) {
            command = "analyze";
            inputs["arguments"] = Json{{"d", d}, {"ell", ell}, {"budget", budget}};
            o = cmd_analyze(load(), d, ell, budget);
        } else if (*dualize) {
            command = "dualize";
            put("d", opt_d);
            put("ell", opt_ell);
            o = cmd_dualize(load(), opt_d, opt_ell);
        } else if (*count) {
            command = "count";
            inputs["arguments"] = Json{{"region", region}, {"certificates", certificates}};
            used_seed = seed;
            o = cmd_count(load(), region, seed, certificates);
        } else if (*verify) {
            command = "verify";
            put("d", opt_d);
            put("ell", opt_ell);
            used_seed = seed;
            o = cmd_verify(load(), opt_d, opt_ell, seed);
        } else if (*example) {
            command = "verify-example";
            inputs["fixture"] = Json::parse(embedded_worked_example());
            std::optional<Corruption> c;
            if (corrupt) {
                c = Corruption{parse_rational(*corrupt)};
                inputs["arguments"]["corrupt_coefficient"] = *corrupt;
            }
            used_seed = seed;
            o = cmd_verify_example(seed, c);
        } else {
            command = "audit";
            inputs["arguments"] = Json{{"max_ell", max_ell}, {"max_n", max_n}, {"max_d", max_d}};
            o = cmd_audit(max_ell, max_n, max_d);
        }

        if (json)
            out << make_envelope(command, inputs, o.result, used_seed).dump(2) << "\n";
        else
            out << o.text;
        if (o.exit_code == kAssertionFailed && o.result.contains("failures"))
            for (const auto& f : o.result["failures"]) err << "assertion failed: " << f.get<std::string>() << "\n";
        return o.exit_code;
    } catch (const InvalidInput& e) {
        err << "input error: " << e.what() << "\n";
        return kInputError;
    } catch (const nlohmann::json::exception& e) {
        err << "input error: " << e.what() << "\n";
        return kInputError;
    } catch (const BudgetExceeded& e) {
        err << "budget exceeded: " << e.what() << "\n";
        return kBudgetExceeded;
    } catch (const AlgebraicPreconditionError& e) {
        err << "algebraic precondition failed: " << e.what() << "\n";
        return kPreconditionFailed;
    } catch (const CountingDegeneracy& e) {
        err << "counting degeneracy: " << e.what() << "\n";
        return kCountingDegeneracy;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return kAssertionFailed;
    }
}

} // namespace fewnomial::cli
