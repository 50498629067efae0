#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "hkt/hypercomplex.hpp"

namespace hkt {

using Json = nlohmann::ordered_json;

enum class Command { validate, cohomology, qd, hkt, full };

/// Maps "validate" | "cohomology" | "qd" | "hkt" | "full" to the enum.
std::optional<Command> parse_command(const std::string& name);

/// Raised when independently computed results contradict each other (for
/// example a certified HKT form together with a parity verdict of "no").
/// The CLI maps this to exit code 3.
struct ConsistencyError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Salamon-notation echo of the structure equations.
std::string salamon_string(const LieAlgebraSpec& spec);

/// Rational matrix as an array of arrays of "p/q" strings.
Json matrix_json(const Mat& m);

/// Deterministic JSON report for one instance. `t` is echoed verbatim when
/// the instance belongs to a parametrized family. All rationals are "p/q"
/// strings; no timings or other nondeterministic data are included.
Json build_report(const Instance& inst, Command cmd,
                  const std::optional<Rational>& t = std::nullopt);

}  // namespace hkt
