#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "ginlab/gin.hpp"
#include "ginlab/limit.hpp"

namespace ginlab {

using Json = nlohmann::ordered_json;

/// {config, m, alpha, lambdas, generators, colength, conjectural, evidence}; generators as
/// [x, y] pairs with descending x.
Json staircase_json(const MonomialStaircase& s);

Json shape_json(const ShapeReport& report);

/// Header plus one row per m: m,alpha,zeta,x_intercept,y_intercept,colength (rationals as num/den).
std::string shape_csv(const ShapeReport& report);

/// Scaled staircase outlines (one polyline per m, ascending m) over the predicted line.
std::string shape_svg(const ShapeReport& report);

} // namespace ginlab
