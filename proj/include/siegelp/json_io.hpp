#pragma once

#include "siegelp/cuspmix.hpp"
#include "siegelp/localinv.hpp"
#include "siegelp/oracle.hpp"
#include "siegelp/sseries.hpp"

#include <json.hpp>

namespace siegelp {

using json = nlohmann::json;

/// {"<exp>": ["a", "b"], ...} with a + b sqrt(d) per coefficient.
json poly_to_json(const LaurentPoly& f);
LaurentPoly poly_from_json(const json& j, long d);

/// {"num": {...}, "den": {...}, "p": p, "d": d}.
json ratfunc_to_json(const RatFunc& f, long p, long d);
RatFunc ratfunc_from_json(const json& j);

json local_data_to_json(const LocalData& L);
json series_value_to_json(const SeriesValue& v, long p, long d);
json matrix_to_json(const RatMatrixFn& m, long p, long d);
json compare_to_json(const CompareReport& r, const OracleSeries& s);

/// JSON integer matrix for 2N.
HalfIntMatrix matrix_from_json(const json& j);

} // namespace siegelp
