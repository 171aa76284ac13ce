#pragma once

// JSON forms. Key order is fixed by nlohmann::json's sorted objects and all
// arrays are emitted in canonical order, so equal values serialize to
// byte-identical text.
//
//   PhaseScalar  [{"k": int, "re": "p/q", "im": "p/q"}, ...] sorted by k
//   NcElement    [{"m": int, "n": int, "coeff": PhaseScalar}, ...] sorted by (m, n)
//   TraceTable   {"phi00": [c00, c01, c10, c11], ..., "permutation": str|null, "s3": str|null}

#include <optional>
#include <string>

#include "json.hpp"
#include "nctorus/nc_element.hpp"
#include "nctorus/oracle.hpp"
#include "nctorus/phase_ring.hpp"
#include "nctorus/pr_lab.hpp"
#include "nctorus/traces.hpp"

namespace nct {

using Json = nlohmann::json;

Json to_json(const PhaseScalar& s);
PhaseScalar phase_scalar_from_json(const Json& j);

Json to_json(const NcElement& x);
NcElement element_from_json(const Json& j);

Json to_json(const TraceTable& table, const std::optional<std::string>& s3 = std::nullopt);
TraceTable trace_table_from_json(const Json& j);

/// {"tau": PhaseScalar, "phi00": ..., ...} plus "numeric" values when theta is given.
Json to_json(const CharacterVector& v, std::optional<double> theta = std::nullopt);

Json to_json(const RepMatrix& rep);

Json to_json(const OracleReport& report);

/// {theta, theta_prime, grid_size, shift_power, residuals, character, half_integer_distances}
Json pr_report_json(const PRProjection& e, const ResidualReport& residuals, const NumericCharacter& character);

}  // namespace nct
