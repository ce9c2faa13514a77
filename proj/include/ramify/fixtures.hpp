#ifndef RAMIFY_FIXTURES_HPP
#define RAMIFY_FIXTURES_HPP

#include <optional>
#include <string>
#include <vector>

#include "ramify/extension.hpp"

namespace ramify {

// Built-in reproducible fixtures.
//
// "2adic-deg4": f(X) = X^4 + 6X^2 + 4X + 2 over Q_2, i.e. c_1 = 0, c_2 = 6,
// c_3 = -4, c_4 = 2. Indices (i_0, i_1, i_2) = (5, 2, 0).
//
// "3adic-deg9": degree 9 over K = Q_3(sqrt 3) (e_K = 2), with
// c_2 = pi_K^2, c_6 = pi_K^2, c_8 = pi_K^3, c_9 = pi_K and all other c_h
// zero. Only the coefficient valuations matter for the invariants this
// fixture pins down: v(c_2) = v(c_6) = 2, v(c_8) >= 3, v(c_9) = 1, the rest
// infinite. Indices (i_0, i_1, i_2) = (16, 12, 0).
EisensteinPoly fixture_2adic_deg4(int precision = 20);
EisensteinPoly fixture_3adic_deg9(int precision = 20);

std::optional<EisensteinPoly> fixture_by_name(const std::string& name, int precision = 20);
std::vector<std::string> fixture_names();

}  // namespace ramify

#endif
