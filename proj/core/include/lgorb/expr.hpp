#ifndef LGORB_EXPR_HPP
#define LGORB_EXPR_HPP

#include <string>

#include "lgorb/polyring.hpp"

namespace lgorb {

/// Parses an expression over the ring's variables (primed forms included),
/// its parameters, integer literals and the cyclotomic generator w, with
/// the usual precedence (^ over * and / over + and -). Exponents must be
/// non-negative integer literals; division is only allowed by
/// variable-free subexpressions. Throws ParseError with a position.
Polynomial parse_polynomial(const std::string& text, const PolyRingPtr& ring);

}  // namespace lgorb

#endif
