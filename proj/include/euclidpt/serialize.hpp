#pragma once

#include "json.hpp"

#include "euclidpt/dyson_e2.hpp"
#include "euclidpt/e2_element.hpp"
#include "euclidpt/e3.hpp"
#include "euclidpt/sweep.hpp"

namespace euclidpt {

using Json = nlohmann::ordered_json;

// {"basis":"u,v,J-normal","coeffs":[[re,im] x 10]}
Json to_json(const E2Element& a);
E2Element e2_from_json(const Json& j);

Json to_json(const E3Element& a);
Json to_json(const DysonParamsE2& p);
Json to_json(const HermitizationResult& r);
Json to_json(const E3AdjointTable& t);
Json to_json(const ExceptionalPoint& ep);

}  // namespace euclidpt
