#ifndef CRNID_RATIONAL_HPP
#define CRNID_RATIONAL_HPP

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace crnid {

// Exact arbitrary-precision rational. All symbolic computation in this
// library is over Q; doubles appear only in the numeric solver channel.
using Rational = mpq_class;
using Integer = mpz_class;

// Parses "n", "-n", "n/d" (optional whitespace trimmed). Throws ParseError
// on malformed input or zero denominator; line/column are for diagnostics
// when parsing embedded in a larger text, defaulting to (1, 0).
Rational parse_rational(std::string_view text, int line = 1, int column = 0);

// Canonical "n" or "n/d" form.
std::string to_string(const Rational& q);

double to_double(const Rational& q);

// Best rational approximation with denominator <= max_denominator, via the
// continued-fraction expansion of x. Returns nullopt for non-finite x.
std::optional<Rational> rationalize(double x, unsigned long max_denominator);

}  // namespace crnid

#endif
