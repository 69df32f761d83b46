#pragma once

#include <nlohmann/json.hpp>

#include <optional>
#include <string>
#include <string_view>

#include "atoral/laurent_poly.hpp"
#include "atoral/summable_array.hpp"

namespace atoral {

using json = nlohmann::json;

/// {"d": d, "terms": [{"exp": [..], "coef": "<decimal>"}, ...]}, exponents in
/// lexicographic order, coefficients as strings to keep full precision.
json to_json(const IntLaurentPoly& p);
IntLaurentPoly int_poly_from_json(const json& j);

/// Same layout with real coefficients printed to 17 significant digits plus
/// a "tail_bound" string.
json to_json(const RealSummableArray& v);
RealSummableArray real_array_from_json(const json& j);

/// 17 significant digits; parses back to the identical double.
std::string format_real(double x);
double parse_real(const json& j);

/// Parses an inline expression such as "3+x+y+x^-1+y^-1" or "2*(1+x)^3".
/// Variables are x, y, z or x1..x8; the dimension is the largest variable
/// index used unless `dim` is given (it may only enlarge it).
IntLaurentPoly parse_polynomial(std::string_view text, std::optional<std::size_t> dim = {});

}  // namespace atoral
