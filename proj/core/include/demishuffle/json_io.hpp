#pragma once

#include <nlohmann/json.hpp>

#include "demishuffle/grouplike.hpp"

namespace demishuffle {

/// {"alphabet": m, "cutoff": null, "terms": [{"word": "XXY", "coeff": "p/q"}, ...]}
/// with terms in canonical word order.
nlohmann::json to_json(const Polynomial &p);
Polynomial polynomial_from_json(const nlohmann::json &j);

/// Same schema with "cutoff" set to the truncation degree.
nlohmann::json to_json(const TruncatedSeries &s);
TruncatedSeries series_from_json(const nlohmann::json &j);

/// {"cutoff": N, "factors": [{"letter": "X"|"Y"|"Yi", "scalar": "p/q"}, ...]}
nlohmann::json to_json(const GrouplikeSpec &spec);
GrouplikeSpec spec_from_json(const nlohmann::json &j);

/// {"checked": n, "mismatches": [{"index": "(...;...)", "direct": "p/q",
///  "reconstructed": "p/q"}, ...]}
nlohmann::json to_json(const ReconstructionReport &report, const Alphabet &alphabet);

} // namespace demishuffle
