#pragma once

// JSON schemas for every report the library produces. Each top-level
// document carries "schema_version"; monomials and binomials are stored in
// their text form ("x12^2 - x11*x22"), which needs the ring to parse back.

#include <nlohmann/json.hpp>

#include "veronese/cohomology.hpp"
#include "veronese/combinatorics.hpp"
#include "veronese/geometry.hpp"
#include "veronese/gluing.hpp"
#include "veronese/sci.hpp"
#include "veronese/toric.hpp"

namespace veronese {

using Json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;

/// Throws std::invalid_argument on a missing or unknown schema_version.
void check_schema(const Json& j);

Json to_json(const VeroneseParams& params);
VeroneseParams params_from_json(const Json& j);

/// {params, T: [{tuple, exponent}], P: [names]}
Json listing_to_json(const VeroneseRing& ring);

Json binomials_to_json(const std::vector<Binomial>& bs, const VeroneseRing& ring);
std::vector<Binomial> binomials_from_json(const Json& j, const VeroneseRing& ring);

/// {n, q, blocks: [[i...]...], sigma: [1-based]}; accepts p, h instead of q.
Json to_json(const TypeStarBinomial& f, unsigned n);
TypeStarBinomial type_star_from_json(const Json& j, unsigned& n, unsigned& q);

Json to_json(const RewriteCertificate& cert, const VeroneseRing& ring);
RewriteCertificate rewrite_from_json(const Json& j, const VeroneseRing& ring);

Json to_json(const SciCertificate& cert);
SciCertificate certificate_from_json(const Json& j);

Json to_json(const CharPVerification& v, const VeroneseRing& ring);

Json to_json(const GluingTree& tree);
GluingTree gluing_tree_from_json(const Json& j);

/// {r, count_V, count_cert, witness?} plus image count and mode.
Json to_json(const PointSetReport& report);
PointSetReport point_report_from_json(const Json& j);

Json to_json(const JacobianReport& report);
JacobianReport jacobian_report_from_json(const Json& j);

Json to_json(const FiberReport& report);
FiberReport fiber_report_from_json(const Json& j);

/// {q, a, norm, difference, orders: {"0": ..., "1": ...}}
Json to_json(const CohomologyTable& table);
CohomologyTable cohomology_from_json(const Json& j);

}  // namespace veronese
