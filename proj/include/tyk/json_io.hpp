#ifndef TYK_JSON_IO_HPP
#define TYK_JSON_IO_HPP

#include <json.hpp>

#include "tyk/drinfeld.hpp"
#include "tyk/reflection.hpp"

namespace tyk::io {

using Json = nlohmann::ordered_json;

// Degree cap applied while parsing polynomial data (TYK_MAX_DEGREE, default 128).
int max_degree();

Json rational_json(const Rational& r);
Rational rational_from(const Json& j);

Json unipoly_json(const UniPoly& p);
UniPoly unipoly_from(const Json& j);

Json ratfunc_json(const RatFunc& f);
RatFunc ratfunc_from(const Json& j);

Json pair_json(const SymmetricPair& sp);
SymmetricPair pair_from(const Json& j);

Json sympoly_json(const SymPoly& p, bool pretty = false);
SymPoly sympoly_from(const Json& j);

Json tuple_json(const DrinfeldTuple& t, bool pretty = false);
DrinfeldTuple tuple_from(const Json& j);

Json weight_json(const HighestWeight& w);
HighestWeight weight_from(const Json& j);

Json mrf_json(const MultiRatFunc& f);
MultiRatFunc mrf_from(const Json& j);

Json matn_json(const MatN& m);
MatN matn_from(const SymmetricPair& sp, const Json& j);

Json report_json(const IdentityReport& r);
Json classification_json(const Classification& c, bool pretty = false);

} // namespace tyk::io

#endif
