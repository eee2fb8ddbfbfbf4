#pragma once

#include "json.hpp"

#include "qfoulkes/configsearch.hpp"
#include "qfoulkes/foulkes.hpp"
#include "qfoulkes/suites.hpp"

namespace qfoulkes {

using Json = nlohmann::ordered_json;

/// Coefficients low degree first, each an exact rational as a string.
Json to_json(const QPoly& p);
QPoly qpoly_from_json(const Json& j);

Json to_json(const Partition& p);
Partition partition_from_json(const Json& j);

/// {"degree": n or null, "terms": [{"partition": [...], "coeff": [...]}]}
Json to_json(const SchurExpansion& e);
SchurExpansion schur_from_json(const Json& j);

/// {"kind", "params", "positive", "expansion", "witness", "ms"}.  Timing
/// and the expansion are omitted on request.
Json to_json(const FoulkesReport& r, bool with_expansion = true, bool with_timing = true);

Json to_json(const Configuration& c, bool with_certificate = false);
Json to_json(const Conjecture4Report& r);
Json to_json(const GuessVerdict& v);
Json to_json(const ThetaReport& r);
Json to_json(const CheckResult& r, bool with_timing = true);

}  // namespace qfoulkes
