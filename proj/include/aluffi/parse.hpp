#pragma once

#include <string_view>
#include <vector>

#include "aluffi/polynomial.hpp"
#include "aluffi/ring.hpp"

namespace aluffi {

/// Parses polynomial text such as "x^2*y^2 + 3/2 x z - (y+1)^2".
///
/// Identifiers must name ring variables. `*` between factors is optional,
/// `^` takes a non-negative integer exponent and `/` divides by a nonzero
/// constant. `line` and `column` locate the text inside a larger file for
/// ParseError diagnostics.
Polynomial parse_polynomial(const RingPtr& ring, std::string_view text, std::size_t line = 1,
                            std::size_t column = 1);

/// Comma-separated polynomial list; parentheses nest, so "(x+y)*z, y" has two
/// entries. An empty string yields an empty list.
std::vector<Polynomial> parse_polynomial_list(const RingPtr& ring, std::string_view text, std::size_t line = 1,
                                              std::size_t column = 1);

/// Parses "ring: x,y,z | params: u1,u2 | order: grevlex".
///
/// Ring variables form the "geom" block and parameters the "param" block
/// (appended after the ring variables). Accepted orders: lex, grevlex,
/// weighted(w1,...,wn). Default grevlex.
RingPtr parse_ring_header(std::string_view text, std::size_t line = 1);

/// Parses a monomial order name for an n-variable ring.
MonomialOrder parse_order(std::string_view text, std::size_t nvars);

}  // namespace aluffi
