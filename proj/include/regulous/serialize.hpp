#pragma once

#include <json.hpp>

#include "regulous/certify.hpp"
#include "regulous/classify.hpp"
#include "regulous/resolve.hpp"

namespace regulous {

using json = nlohmann::ordered_json;

/// Rationals inside reports: "n" or "n/d".
json to_json(const Rat& r);
json to_json(const Point& p);
json to_json(const Interval& I);

/// Structured polynomial: [[i, j, "num/den"], ...] in canonical term order.
json poly_to_json(const Poly2& p);
/// Accepts the structured form or an expression string. Throws FormatError.
Poly2 poly_from_json(const json& j);

json ratfunc_to_json(const RatFunc& f);
RatFunc ratfunc_from_json(const json& j);

/// {"scalar": "num/den", "terms": [poly, ...]}
json sos_to_json(const SosRep& r);
SosRep sos_from_json(const json& j);

json certificate_to_json(const RatSosCertificate& c);
/// Throws FormatError on malformed input.
RatSosCertificate certificate_from_json(const json& j);

json to_json(const Substitution& s);
json to_json(const Chart& c);
json to_json(const ResolutionWitness& w);
json to_json(const ResolutionNode& n);
json to_json(const DefinitenessVerdict& v);
json to_json(const Continuity& c);
json to_json(const ResolutionReport& r, bool with_tree);
json to_json(const ClassificationReport& r);
json to_json(const VerificationReport& r);

}  // namespace regulous
