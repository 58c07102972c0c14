#pragma once

// JSON forms of the library's values. Rationals travel as numerator and
// denominator strings so nothing is rounded; every to_json has an inverse.

#include "gramcalc/identities.hpp"
#include "gramcalc/permstat.hpp"
#include "gramcalc/series.hpp"
#include "gramcalc/trees.hpp"

#include "json.hpp"

namespace gramcalc {

using Json = nlohmann::ordered_json;

/// {"x": 2, "y": 1}; zero exponents are omitted.
Json to_json(const Monomial& m);
Monomial monomial_from_json(const Json& j);

/// [{"exp": {...}, "num": "3", "den": "2"}, ...] in ascending monomial order.
Json to_json(const LaurentPoly& p);
LaurentPoly poly_from_json(const Json& j);

/// {"p": poly, "q": poly} for p + q*rho.
Json to_json(const RhoElement& e);
RhoElement rho_from_json(const Json& j);

/// {"order": N, "coeffs": [{"n": 0, "p": ..., "q": ...}, ...]}.
Json to_json(const Series& s);
Series series_from_json(const Json& j);

/// {"stat": "updownrun", "n": 6, "rows": [{"n": 6, "k": 1, "count": 1}, ...]}.
/// Counts beyond 64 bits are written as strings.
Json to_json(const StatTriangle& t);
StatTriangle triangle_from_json(const Json& j);

Json to_json(const Permutation& sigma);
Permutation permutation_from_json(const Json& j);

/// {"n": 9, "parent": [0,1,0,2,3,3,6,2,2]}.
Json to_json(const IncreasingTree& t);
IncreasingTree tree_from_json(const Json& j);

Json to_json(const IdentityCheck& c);
IdentityCheck check_from_json(const Json& j);

}  // namespace gramcalc
