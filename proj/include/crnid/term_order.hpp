#ifndef CRNID_TERM_ORDER_HPP
#define CRNID_TERM_ORDER_HPP

#include <string>
#include <string_view>

#include "crnid/monomial.hpp"

namespace crnid {

enum class TermOrderKind { Lex, GrLex, GrevLex };

// A monomial order with 1 as the minimum, multiplicative, total. Ties are
// broken by catalog position: index 0 is the largest variable.
struct TermOrder {
    TermOrderKind kind = TermOrderKind::GrevLex;

    // > 0 when a comes after b in the order (a is larger), 0 when equal.
    int compare(const Monomial& a, const Monomial& b) const;
    bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }
    bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

    std::string name() const;
    // Accepts "lex", "grlex", "grevlex". Throws PreconditionError otherwise.
    static TermOrder from_name(std::string_view name);

    bool operator==(const TermOrder& o) const { return kind == o.kind; }
};

}  // namespace crnid

#endif
