#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "hedet/polynomial.hpp"

namespace hedet {

// Text form of a polynomial, one canonical way in and many forms accepted
// back. Grammar (whitespace free between tokens except around +/-):
//   poly   := [sign] term { sign term }
//   term   := coeff | coeff '*' factors | factors
//   factors:= factor { '*' factor }
//   factor := varname [ '^' nat ]
//   coeff  := nat [ '/' nat ]        (arbitrary precision)
//   varname:= e_i_j | f_i_j | x_i | y_i | z_i_j | xt_p_q_l | yt_p_q_l
// The zero polynomial prints and parses as "0".
std::string to_text(const Polynomial& p);
Polynomial parse_polynomial(std::string_view text); // throws ParseError

// One polynomial per line; blank lines and lines starting with '#' skipped.
std::vector<Polynomial> parse_polynomial_lines(std::string_view text);

} // namespace hedet
