#ifndef CRNID_POLY_TEXT_HPP
#define CRNID_POLY_TEXT_HPP

#include <string>
#include <string_view>

#include "crnid/polynomial.hpp"

namespace crnid {

// Plain-text polynomial syntax, e.g. "3/2*x1^2*p11 - k2". Variables go by
// catalog name, '^' marks powers, '*' separates factors and is optional
// between a coefficient and the monomial. print -> parse is the identity on
// canonical forms.
std::string to_string(const Polynomial& p);

// Throws ParseError (with line/column) on malformed input or names missing
// from the catalog. `line` seeds diagnostics when the text is embedded in a
// larger file.
Polynomial parse_polynomial(std::string_view text, CatalogPtr cat, TermOrder ord = {},
                            int line = 1);

}  // namespace crnid

#endif
