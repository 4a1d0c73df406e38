#pragma once

// Text formats: a rational is "p/q" ("p" when q = 1); a polynomial is a JSON
// array of rational strings in ascending degree; a series is the same in
// ascending powers of t.

#include <string>
#include <string_view>
#include <vector>

#include "norlund/framework.hpp"
#include "norlund/identities.hpp"
#include "norlund/rational.hpp"
#include "norlund/series.hpp"
#include "norlund/unipoly.hpp"

#include "json.hpp"

namespace norlund::io {

using Json = nlohmann::ordered_json;

Json to_json(const Rational& r);
Json to_json(const UniPoly& p);
Json to_json(const std::vector<Rational>& v);
Json to_json(const std::vector<UniPoly>& v);
Json to_json(const Series<Rational>& f);
Json to_json(const Series<UniPoly>& f);
/// elapsed_ms is only emitted when include_timing is set, so that repeated
/// runs produce identical bytes.
Json to_json(const IdentityReport& report, bool include_timing);

Rational rational_from_json(const Json& j);
UniPoly poly_from_json(const Json& j);

/// "1,-1/2,3" -> {1, -1/2, 3}. Throws DomainError on a malformed entry.
std::vector<Rational> parse_rational_list(std::string_view text);

/// {"Q1": [...], "Q2": [...], "G0": "p/q" | {"preset": "eulerian", "rho": ..., "alpha": ...}, "r": "p/q"}
/// or the whole-spec preset {"preset": "eulerian", "rho": ..., "alpha": ...}.
FrameworkSpec framework_spec_from_json(const Json& j);

}  // namespace norlund::io
