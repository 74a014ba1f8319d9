#include "fewnomial/io.hpp"

#include "fewnomial/errors.hpp"

#include <fstream>

namespace fewnomial {

namespace {

const Json& field(const Json& j, const char* key)
{
    if (!j.is_object() || !j.contains(key)) throw InvalidInput(std::string("missing field '") + key + "'");
    return j.at(key);
}

long integer_from_json(const Json& j)
{
    if (!j.is_number_integer()) throw InvalidInput("expected an integer, got " + j.dump());
    return j.get<long>();
}

Integer big_integer_from_json(const Json& j)
{
    if (j.is_number_integer()) return Integer(j.get<long>());
    if (!j.is_string()) throw InvalidInput("expected an integer string, got " + j.dump());
    const Rational r = parse_rational(j.get<std::string>());
    if (r.get_den() != 1) throw InvalidInput("expected an integer, got " + j.dump());
    return r.get_num();
}

ExponentVector exponents_from_json(const Json& j, std::size_t nvars)
{
    if (!j.is_array()) throw InvalidInput("exponent vector must be a list");
    ExponentVector e;
    for (const auto& x : j) e.push_back(integer_from_json(x));
    if (e.size() != nvars)
        throw InvalidInput("exponent vector " + j.dump() + " has length " + std::to_string(e.size()) + ", expected " +
                           std::to_string(nvars));
    return e;
}

std::vector<ExponentVector> points_from_json(const Json& j, std::size_t nvars)
{
    if (!j.is_array()) throw InvalidInput("expected a list of exponent vectors");
    std::vector<ExponentVector> out;
    for (const auto& p : j) out.push_back(exponents_from_json(p, nvars));
    return out;
}

std::size_t arity_of(const Json& points)
{
    if (!points.is_array() || points.empty() || !points.front().is_array())
        throw InvalidInput("cannot infer the number of variables from an empty point list");
    return points.front().size();
}

Json to_json(const Integer& v) { return to_string(v); }
Json to_json(const Rational& v) { return to_string(v); }

Json to_json(const UnivariatePolynomial& p)
{
    Json out = Json::array();
    for (const auto& c : p.coefficients()) out.push_back(to_string(c));
    return out;
}

Json integers_to_json(const IntegerPolynomial& p)
{
    Json out = Json::array();
    for (const auto& c : p) out.push_back(to_string(c));
    return out;
}

UnivariatePolynomial univariate_from_json(const Json& j)
{
    if (!j.is_array()) throw InvalidInput("univariate polynomial must be a coefficient list");
    std::vector<Rational> c;
    for (const auto& x : j) c.push_back(coefficient_from_json(x));
    return UnivariatePolynomial(std::move(c));
}

IntegerPolynomial integers_from_json(const Json& j)
{
    if (!j.is_array()) throw InvalidInput("integer polynomial must be a coefficient list");
    IntegerPolynomial p;
    for (const auto& x : j) p.push_back(big_integer_from_json(x));
    return p;
}

Json root_to_json(const RealRoot& r)
{
    return Json{{"defining", integers_to_json(r.defining())},
                {"exact", r.is_exact()},
                {"lo", to_json(r.lower())},
                {"hi", to_json(r.upper())}};
}

RealRoot root_from_json(const Json& j)
{
    IntegerPolynomial defining = integers_from_json(field(j, "defining"));
    const Rational lo = coefficient_from_json(field(j, "lo"));
    if (field(j, "exact").get<bool>()) return RealRoot(std::move(defining), lo);
    try {
        return RealRoot(std::move(defining), Interval{lo, coefficient_from_json(field(j, "hi"))});
    } catch (const InternalError&) {
        throw InvalidInput("root interval does not isolate a sign change");
    }
}

Json point_to_json(const AlgebraicPoint2D& p, bool certificates)
{
    Json out{{"x", p.x_preview},
             {"y", p.y_preview},
             {"x_sign", p.x_sign},
             {"y_sign", p.y_sign},
             {"nondegenerate", p.nondegenerate},
             {"x_approx", to_json(p.x_approx)},
             {"y_approx", to_json(p.y_approx)}};
    if (certificates) {
        out["defining"] = to_json(p.defining);
        out["root"] = root_to_json(p.root);
        out["x_map"] = to_json(p.x_map);
        out["y_map"] = to_json(p.y_map);
    }
    return out;
}

AlgebraicPoint2D point_from_json(const Json& j)
{
    if (!j.contains("root")) throw InvalidInput("count report points need certificates to be read back");
    AlgebraicPoint2D p{univariate_from_json(field(j, "defining")),
                       root_from_json(field(j, "root")),
                       univariate_from_json(field(j, "x_map")),
                       univariate_from_json(field(j, "y_map")),
                       static_cast<int>(integer_from_json(field(j, "x_sign"))),
                       static_cast<int>(integer_from_json(field(j, "y_sign"))),
                       field(j, "nondegenerate").get<bool>(),
                       field(j, "x").get<std::string>(),
                       field(j, "y").get<std::string>(),
                       coefficient_from_json(field(j, "x_approx")),
                       coefficient_from_json(field(j, "y_approx"))};
    return p;
}

Json index_to_json(const LatticeIndex& i) { return to_string(i); }

} // namespace

Rational coefficient_from_json(const Json& j)
{
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long>());
    if (j.is_number()) throw InvalidInput("non-integer coefficient " + j.dump() + " must be given as a string");
    throw InvalidInput("coefficient must be a string, got " + j.dump());
}

Json to_json(const LaurentPolynomial& p)
{
    Json terms = Json::array();
    for (const auto& [e, c] : p.terms()) terms.push_back(Json{{"coeff", to_string(c)}, {"exponents", e}});
    return Json{{"terms", terms}};
}

LaurentPolynomial polynomial_from_json(const Json& j, std::size_t nvars)
{
    LaurentPolynomial p(nvars);
    for (const auto& t : field(j, "terms"))
        p.add_term(exponents_from_json(field(t, "exponents"), nvars), coefficient_from_json(field(t, "coeff")));
    return p;
}

Json to_json(const SystemFile& s)
{
    Json polys = Json::array();
    for (const auto& p : s.polynomials) polys.push_back(to_json(p));
    return Json{{"variables", s.variables}, {"polynomials", polys}};
}

SystemFile system_file_from_json(const Json& j)
{
    SystemFile s;
    const Json& vars = field(j, "variables");
    if (!vars.is_array() || vars.empty()) throw InvalidInput("'variables' must be a nonempty list of names");
    for (const auto& v : vars) {
        if (!v.is_string()) throw InvalidInput("variable names must be strings");
        s.variables.push_back(v.get<std::string>());
    }
    const Json& polys = field(j, "polynomials");
    if (!polys.is_array()) throw InvalidInput("'polynomials' must be a list");
    for (const auto& p : polys) s.polynomials.push_back(polynomial_from_json(p, s.variables.size()));
    return s;
}

SupportSet support_from_json(const Json& j)
{
    if (j.is_object() && j.contains("points")) {
        const Json& pts = j.at("points");
        return SupportSet(arity_of(pts), points_from_json(pts, arity_of(pts)));
    }
    if (j.is_object() && j.contains("polynomials")) {
        const SystemFile s = system_file_from_json(j);
        if (s.polynomials.empty()) return SupportSet(s.variables.size());
        return support_union(s.polynomials);
    }
    throw InvalidInput("support file needs 'points' or 'polynomials'");
}

Json to_json(const SupportSet& a) { return Json{{"points", a.points()}}; }

Json to_json(const DenseDecomposition& dec)
{
    Json v = Json::array();
    for (std::size_t m = 0; m < dec.ell; ++m) v.push_back(dec.v(m));
    return Json{{"d", dec.d}, {"v0", dec.psi_offset}, {"v", v}, {"W", dec.W}};
}

DenseDecomposition decomposition_from_json(const Json& j)
{
    const long d = integer_from_json(field(j, "d"));
    const Json& v0 = field(j, "v0");
    const std::size_t n = v0.size();
    return make_decomposition(d, exponents_from_json(v0, n), points_from_json(field(j, "v"), n),
                              points_from_json(field(j, "W"), n));
}

Json to_json(const GaleSystem& gs)
{
    Json h = Json::array();
    for (const auto& p : gs.h) h.push_back(to_json(p));
    Json rel = Json::array();
    for (const auto& r : gs.relations) rel.push_back(Json{{"beta", r.beta}, {"gamma", r.gamma}});
    return Json{{"d", gs.d}, {"ell", gs.ell}, {"n", gs.n}, {"h", h}, {"relations", rel}};
}

GaleSystem gale_system_from_json(const Json& j)
{
    GaleSystem gs;
    gs.d = integer_from_json(field(j, "d"));
    const long ell = integer_from_json(field(j, "ell"));
    const long n = integer_from_json(field(j, "n"));
    if (ell < 1 || n < 1 || gs.d < 1) throw InvalidInput("d, ell and n must be positive");
    gs.ell = static_cast<std::size_t>(ell);
    gs.n = static_cast<std::size_t>(n);
    for (const auto& p : field(j, "h")) gs.h.push_back(polynomial_from_json(p, gs.ell));
    if (gs.h.size() != gs.n) throw InvalidInput("Gale system needs n polynomials h_i");
    for (const auto& r : field(j, "relations"))
        gs.relations.push_back({exponents_from_json(field(r, "beta"), gs.ell), exponents_from_json(field(r, "gamma"), gs.n)});
    if (gs.relations.size() != gs.ell) throw InvalidInput("Gale system needs ell relations");
    return gs;
}

Sublattice relations_from_json(const Json& j, std::size_t ambient_rank)
{
    return make_sublattice(ambient_rank, IntegerMatrix::from_rows(points_from_json(j, ambient_rank)));
}

Json to_json(const BoundReport& b)
{
    Json out{{"formula", formula_id(b.formula)},
             {"raw_lo", to_json(b.raw_lo)},
             {"raw_hi", to_json(b.raw_hi)},
             {"strict", b.strict},
             {"exact", b.exact},
             {"max_count", to_json(b.max_count)}};
    if (!b.exact) {
        out["e_power"] = b.e_power;
        out["multiplier"] = to_json(b.multiplier);
    }
    if (b.alternative) out["alternative"] = to_json(*b.alternative);
    return out;
}

Json to_json(const EstimateAudit& a)
{
    Json out{{"family", family_id(a.family)}, {"ell", a.ell}, {"j", a.j}, {"n", a.n}};
    if (a.family == EstimateFamily::Stratum) out["d"] = a.d;
    out["lhs"] = to_json(a.lhs);
    out["rhs"] = to_json(a.rhs);
    out["holds"] = a.holds;
    out["equality"] = a.equality;
    out["margin"] = to_json(a.margin);
    return out;
}

Json to_json(const GaleHypotheses& h)
{
    return Json{{"span_index", index_to_json(h.span_index)},
                {"span_odd", h.span_odd},
                {"relation_index_in_saturation", to_json(h.relation_index_in_saturation)},
                {"relation_odd", h.relation_odd},
                {"relations_full_rank", h.relations_full_rank},
                {"positive_case_ok", h.positive_case_ok},
                {"real_case_ok", h.real_case_ok}};
}

Json to_json(const CorrespondenceVerdict& v)
{
    return Json{{"hypotheses", to_json(v.hypotheses)},
                {"positive", {{"original", v.original_positive},
                              {"gale_delta", v.gale_delta},
                              {"original_nondegenerate", v.original_positive_nondegenerate},
                              {"gale_delta_nondegenerate", v.gale_delta_nondegenerate},
                              {"equal", v.positive_equal}}},
                {"real", {{"checked", v.real_checked},
                          {"original", v.original_real},
                          {"gale_m_real", v.gale_m_real},
                          {"equal", v.real_equal}}},
                {"ok", v.ok()}};
}

Json to_json(const CountReport& r, bool certificates)
{
    Json points = Json::array();
    for (const auto& p : r.points) points.push_back(point_to_json(p, certificates));
    Json regions = Json::object();
    for (const auto& [k, v] : r.per_region) regions[k] = v;
    return Json{{"total_real", r.total_real},
                {"nondegenerate_real", r.nondegenerate_real},
                {"on_axes", r.on_axes},
                {"per_region", regions},
                {"boundary", r.boundary},
                {"shear", r.shear},
                {"attempts", r.attempts},
                {"points", points}};
}

CountReport count_report_from_json(const Json& j)
{
    CountReport r;
    r.total_real = integer_from_json(field(j, "total_real"));
    r.nondegenerate_real = integer_from_json(field(j, "nondegenerate_real"));
    r.on_axes = integer_from_json(field(j, "on_axes"));
    for (const auto& [k, v] : field(j, "per_region").items()) r.per_region[k] = integer_from_json(v);
    r.boundary = integer_from_json(field(j, "boundary"));
    r.shear = integer_from_json(field(j, "shear"));
    r.attempts = static_cast<int>(integer_from_json(field(j, "attempts")));
    for (const auto& p : field(j, "points")) r.points.push_back(point_from_json(p));
    return r;
}

Json read_json_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot open '" + path + "'");
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw InvalidInput("'" + path + "' is not valid JSON: " + e.what());
    }
}

} // namespace fewnomial
