#pragma once

#include <nlohmann/json.hpp>

#include "ntv/classify.hpp"
#include "ntv/core.hpp"
#include "ntv/floorseq.hpp"
#include "ntv/pset.hpp"
#include "ntv/theorem1.hpp"
#include "ntv/theorem2.hpp"

namespace ntv {

// Key order is insertion order so emitted documents are byte-stable.
using Json = nlohmann::ordered_json;

/// Number when it fits in 64 bits, decimal string otherwise.
Json to_json(const BigInt& v);
/// Accepts a JSON integer or a decimal string.
BigInt big_from_json(const Json& j);

/// "num/den".
Json to_json(const BigRational& q);
BigRational rational_from_json(const Json& j);

/// {"lo": "a/b", "hi": "c/d", "closed_open": true}
Json to_json(const RatInterval& interval);
RatInterval interval_from_json(const Json& j);

Json to_json(const Factorization& f);

/// {"r":…, "ell":…, "case":"I|II|III", "k":…, "witness":{…}}
Json to_json(const RFullCertificate& cert);
/// Throws std::invalid_argument on schema errors. Structural validity is
/// left to validate_certificate.
RFullCertificate certificate_from_json(const Json& j);

Json to_json(const CertificateCheck& check);
Json to_json(const NonRFullReport& report);
Json to_json(const GridCell& cell);

Json to_json(const SkipReport& report);
Json to_json(const SymbolicCheck& check);
Json to_json(const ScanHit& hit);
Json to_json(const IndexedInterval& hit);
Json to_json(const RatioReport& report);

Json to_json(const SeriesDigits& series);
Json to_json(const SquaresWitnessReport& report);

/// {"bound": N, "count": c, "runs": [[start, length], ...]}
Json pset_rle_json(const PSetBitmap& bitmap);
PSetBitmap pset_from_rle_json(const Json& j, const ResourceCaps& caps = {});

}  // namespace ntv
