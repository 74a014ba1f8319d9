#pragma once

// Command implementations behind the `fewnomial` executable. Each command
// returns its JSON payload and a human rendering; run() adds argument parsing,
// the report envelope and the exit-code contract.

#include "fewnomial/io.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

namespace fewnomial::cli {

inline constexpr const char* kToolVersion = "0.1.0";

enum ExitCode : int {
    kOk = 0,
    kAssertionFailed = 1,
    kInputError = 2,
    kBudgetExceeded = 3,
    kPreconditionFailed = 4,
    kCountingDegeneracy = 5,
};

struct Outcome {
    int exit_code = kOk;
    Json result;
    std::string text;
};

/// Bytes of data/worked_example.json captured at configure time.
std::string_view embedded_worked_example();

std::string sha256_hex(std::string_view bytes);

/// {command, inputs_digest, result, tool_version[, seed]}; the digest is the
/// SHA-256 of inputs.dump().
Json make_envelope(const std::string& command, const Json& inputs, const Json& result,
                   std::optional<std::uint64_t> seed);

struct BoundsArgs {
    std::optional<long> n;
    std::optional<long> ell;
    std::optional<long> d;
    std::optional<long> k;
    /// Empty or "all" gives the comparison table.
    std::string formula;
};

Outcome cmd_bounds(const BoundsArgs& args);
Outcome cmd_analyze(const Json& support_file, long d, long ell, std::uint64_t budget);
/// Uses the file's "decomposition" and "relations" when present, else searches
/// with (d, ell) and takes the saturated relation module.
Outcome cmd_dualize(const Json& system_file, std::optional<long> d, std::optional<long> ell);
/// region: "all", "real", "positive"; for Gale files also "m_real", "delta".
Outcome cmd_count(const Json& file, const std::string& region, std::uint64_t seed, bool certificates);
Outcome cmd_verify(const Json& system_file, std::optional<long> d, std::optional<long> ell, std::uint64_t seed);

/// Test mode: replaces the constant term of the first polynomial.
struct Corruption {
    Rational constant_term;
};

Outcome cmd_verify_example(std::uint64_t seed, const std::optional<Corruption>& corruption = std::nullopt);
Outcome cmd_audit(long max_ell, long max_n, long max_d);

/// Full command line, argv[0] included. Returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace fewnomial::cli
