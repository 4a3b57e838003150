#pragma once

#include "ghc/eta.hpp"
#include "ghc/growth.hpp"
#include "ghc/identity_suite.hpp"
#include "ghc/norms.hpp"
#include "ghc/pairing.hpp"
#include "ghc/truncated.hpp"

#include "json.hpp"

#include <string>

namespace ghc {

using Json = nlohmann::json;

/// {"degree": n, "terms": [{"tuple": ["a", "e", "B"], "coef": "1/2"}, ...]}
Json chain_to_json(const Group& group, const Chain& x);
Chain chain_from_json(const Group& group, const Json& j);

/// {"terms": [{"element": "a b", "coef": "3"}, ...]}
Json algebra_to_json(const Group& group, const AlgebraElement& x);
AlgebraElement algebra_from_json(const Group& group, const Json& j);

/// {"exactness": "exact", "value": "p/q"} or
/// {"exactness": "enclosure", "lo": .., "hi": .., "width": ..}; both carry "approx".
Json interval_to_json(const Interval& v);

Json homology_to_json(const HomologyResult& r);
Json growth_to_json(const GrowthReport& r);
/// Columns lambda,radius,C_squared,C_lo,C_hi,exactness.
std::string growth_to_csv(const GrowthReport& r);
Json boundedness_to_json(const BoundednessReport& r);
Json certificate_to_json(const BoundCertificate& c);
Json identity_to_json(const IdentitySuiteReport& r);
Json unconditional_to_json(const UnconditionalReport& r);

/// One basis cell per line: "component<TAB>tuple".
std::string basis_to_text(const Group& group, const DegreeSpace& space);
/// Header "rows cols nnz", then "row col p/q" per entry.
std::string matrix_to_coo(const SparseMatrix& m);

std::string read_text(const std::string& path);
/// Writes to a temporary sibling and renames it over the target.
void write_atomic(const std::string& path, const std::string& content);

}  // namespace ghc
