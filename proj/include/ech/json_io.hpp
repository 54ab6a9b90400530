#pragma once

#include <nlohmann/json.hpp>

#include "ech/geometry.hpp"
#include "ech/toric.hpp"
#include "ech/weights.hpp"

namespace ech {

using json = nlohmann::json;

// All rational and big-integer scalars travel as strings ("7" or "7/2") so
// that values survive round-trips without floating-point or overflow loss.

json rat_to_json(const Rat& r);
Rat rat_from_json(const json& j);  // accepts "n/d" strings and integral numbers

json polygon_to_json(const ConvexPolygon& P);
ConvexPolygon polygon_from_json(const json& j);

json domain_to_json(const ConvexDomain& d);
ConvexDomain domain_from_json(const json& j);

json weights_to_json(const WeightSequence& w);
WeightSequence weights_from_json(const json& j);

json divisor_to_json(const ToricDivisor& d);
ToricDivisor divisor_from_json(const json& j);

}  // namespace ech
