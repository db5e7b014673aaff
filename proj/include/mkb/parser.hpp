#ifndef MKB_PARSER_HPP
#define MKB_PARSER_HPP

#include <string>
#include <vector>

#include "mkb/poly.hpp"

namespace mkb {

// Polynomial text grammar (used by every module and the CLI):
//   variables x0..x99; integer or rational coefficients like -3/2; '^' for
//   powers; '*' optional between factors; whitespace insignificant.
//   example: x7^2 - 4*x1*x4 - 2*x3^2 + x2*x3
// Identifiers other than x<k> are parameter symbols (tau, T, c1_8, ...).
PPoly parse_poly(const std::string& text, int nvars);

// strict variant: rejects parameter symbols
QPoly parse_rational_poly(const std::string& text, int nvars);

// comma- or newline-separated list of polynomials
std::vector<PPoly> parse_poly_list(const std::string& text, int nvars);
std::vector<QPoly> parse_rational_poly_list(const std::string& text, int nvars);

// single term, e.g. "x4*x1^2"
Term parse_term(const std::string& text, int nvars);

}  // namespace mkb

#endif
