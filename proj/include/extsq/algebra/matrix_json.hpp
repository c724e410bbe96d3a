#pragma once

#include <json.hpp>
#include <string>
#include <string_view>

#include "extsq/algebra/matrix.hpp"

namespace extsq::algebra {

// Parses "3/4", "-2", "0.5", "x11", or a rational expression in
// indeterminates such as "(g11*g22 - g12*g21)/g22".
RatFunc parse_ratfunc(std::string_view text);

// {"rows": n, "cols": m, "entries": [["1/2", "x11"], ...]}
nlohmann::json matrix_to_json(const Matrix<RatFunc>& m);
Matrix<RatFunc> matrix_from_json(const nlohmann::json& j);

}  // namespace extsq::algebra
