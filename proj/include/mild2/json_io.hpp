#pragma once

#include <json.hpp>

#include "mild2/augment.hpp"
#include "mild2/linking.hpp"
#include "mild2/mildness.hpp"
#include "mild2/oracle.hpp"
#include "mild2/series.hpp"

namespace mild2 {

using Json = nlohmann::ordered_json;

// Generator indices in every JSON document are 1-based, as in the text rendering.

Json to_json(const LinkingData& data, const OrderedPrimeSet& primes);

/// {"primes", "a", "ell", "relators": [{"owner", "square", "comms"}], "product_relation"}
/// plus "d", and "eliminated" once a generator has been removed. Relators without an
/// owner list their squares under "squares".
Json to_json(const Presentation& p);
/// Accepts the same schema. With "primes" but no "relators" it builds the Koch
/// presentation. Throws InputError on malformed documents.
Presentation presentation_from_json(const Json& j);

Json to_json(const Partition& part);
Json to_json(const MildnessReport& report);
Json to_json(const RankProfile& profile);
Json to_json(const OracleComparison& cmp);
Json to_json(const DimensionSequence& dims);
Json series_to_json(const IntSeries& series, const std::string& kind);
Json to_json(const AugmentationResult& result);

// Integers that fit in 64 bits become JSON numbers, larger ones decimal strings.
Json big_to_json(const BigInt& v);

}  // namespace mild2
