#ifndef NHPOLY_JSON_IO_HPP
#define NHPOLY_JSON_IO_HPP

#include <nlohmann/json.hpp>

#include "nhpoly/analysis.hpp"

namespace nhpoly {

using Json = nlohmann::ordered_json;

// Canonical JSON encodings. Integer coefficients are emitted as JSON
// numbers when they fit in 64 bits and as decimal strings otherwise;
// rationals are "p/q" strings. All arrays follow the library's
// deterministic orderings.

Json to_json(const BigInt& v);
Json to_json(const Rational& v);
Json to_json(const EpsNumber& v);       // {"num":[...],"den":[...]}
Json to_json(const OrderingContext& c);  // {"mode":...}
Json to_json(const PolytopeContext& c);
Json to_json(const ExponentVector& e);  // {"i":[...],"k":...}
Json to_json(const NHPolytope& p);
Json to_json(const RationalityVerdict& v);
Json to_json(const TangentConeReport& r);
Json to_json(const PermissibilityReport& r);
Json to_json(const DistanceBoundReport& r);
Json to_json(const ContractionSearch& s);
Json to_json(const ContractionIteration& it);
Json to_json(const BinomialSegments& s);
Json to_json(const FaceSignature& sig);
Json to_json(const CorrespondenceReport& r);
Json to_json(const SweepReport& r);

// The full analysis report: equation echo, polytope for the requested
// context with per-face data, tangent-cone band, permissibility table for
// all coordinate ideals (m <= 4), sweep, and decimal display coordinates
// at sample_q.
Json analysis_report(const WeierstrassEquation& f, const PolytopeContext& ctx,
                     const Rational& q_max, std::optional<Rational> sample_q,
                     unsigned decimals);

}  // namespace nhpoly

#endif
