#pragma once

// JSON forms of systems, supports, Gale systems and reports. Rationals and
// big integers travel as strings ("27", "-5/12", "0.25").

#include "fewnomial/bounds.hpp"
#include "fewnomial/counting.hpp"
#include "fewnomial/gale.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace fewnomial {

using Json = nlohmann::ordered_json;

struct SystemFile {
    std::vector<std::string> variables;
    std::vector<LaurentPolynomial> polynomials;

    friend bool operator==(const SystemFile&, const SystemFile&) = default;
};

/// Accepts strings and integral JSON numbers; any other number is rejected.
Rational coefficient_from_json(const Json& j);

Json to_json(const LaurentPolynomial& p);
LaurentPolynomial polynomial_from_json(const Json& j, std::size_t nvars);

Json to_json(const SystemFile& s);
/// Unknown top-level keys are ignored, so richer fixtures parse as plain systems.
SystemFile system_file_from_json(const Json& j);

/// {"points": [[...], ...]}; a system file is also accepted and yields the
/// union of its polynomials' supports.
SupportSet support_from_json(const Json& j);
Json to_json(const SupportSet& a);

Json to_json(const DenseDecomposition& dec);
DenseDecomposition decomposition_from_json(const Json& j);

Json to_json(const GaleSystem& gs);
GaleSystem gale_system_from_json(const Json& j);

/// Relation rows (beta, gamma) as integer lists.
Sublattice relations_from_json(const Json& j, std::size_t ambient_rank);

Json to_json(const BoundReport& b);
Json to_json(const EstimateAudit& a);
Json to_json(const GaleHypotheses& h);
Json to_json(const CorrespondenceVerdict& v);

/// With certificates the points carry their defining polynomials, isolating
/// intervals and coordinate maps, and the result parses back exactly.
Json to_json(const CountReport& r, bool certificates = true);
CountReport count_report_from_json(const Json& j);

Json read_json_file(const std::string& path);

} // namespace fewnomial
