#ifndef LISOM_EXPR_HPP
#define LISOM_EXPR_HPP

#include <string_view>
#include <variant>

#include "lisom/obstruction.hpp"

namespace lisom {

// Grammar:
//   Expr   := Term (('+'|'-') Term)*
//   Term   := Factor ('*' Factor)*
//   Factor := Atom ('^' UInt)?
//   Atom   := Int | 'x' | 'Phi' '(' UInt ')' | '(' Expr ')'
// ParseError carries the byte offset of the failure.

/// Expand the expression to a plain polynomial.
IntPoly parse_intpoly(std::string_view text);

/// Read the expression as a product of powered symmetric factors. Atoms of
/// the product must be Phi(m) or parenthesized polynomials; each factor is
/// validated (monic, symmetric, even degree >= 2, squarefree, distinct).
/// Trust is Verified exactly when every atom is Phi(m).
FactoredCharPoly parse_charpoly(std::string_view text);

/// Product-shaped inputs (atoms Phi or parenthesized) become a
/// FactoredCharPoly, anything else an IntPoly.
std::variant<IntPoly, FactoredCharPoly> parse_poly_expr(std::string_view text);

} // namespace lisom

#endif
