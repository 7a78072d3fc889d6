#include "crnid/term_order.hpp"

#include "crnid/error.hpp"

namespace crnid {

namespace {

int cmp_lex(const Monomial& a, const Monomial& b) {
    int n = a.nvars();
    for (int i = 0; i < n; ++i) {
        int d = a.exponent(i) - b.exponent(i);
        if (d != 0) return d;
    }
    return 0;
}

// Graded reverse lex: compare degrees; on a tie the monomial with the
// *smaller* exponent at the last differing (least significant) position wins.
int cmp_grevlex_tail(const Monomial& a, const Monomial& b) {
    int n = a.nvars();
    for (int i = n - 1; i >= 0; --i) {
        int d = a.exponent(i) - b.exponent(i);
        if (d != 0) return -d;
    }
    return 0;
}

}  // namespace

int TermOrder::compare(const Monomial& a, const Monomial& b) const {
    switch (kind) {
        case TermOrderKind::Lex:
            return cmp_lex(a, b);
        case TermOrderKind::GrLex:
            if (a.degree() != b.degree()) return a.degree() - b.degree();
            return cmp_lex(a, b);
        case TermOrderKind::GrevLex:
            if (a.degree() != b.degree()) return a.degree() - b.degree();
            return cmp_grevlex_tail(a, b);
    }
    return 0;
}

std::string TermOrder::name() const {
    switch (kind) {
        case TermOrderKind::Lex: return "lex";
        case TermOrderKind::GrLex: return "grlex";
        case TermOrderKind::GrevLex: return "grevlex";
    }
    return "?";
}

TermOrder TermOrder::from_name(std::string_view name) {
    if (name == "lex") return {TermOrderKind::Lex};
    if (name == "grlex") return {TermOrderKind::GrLex};
    if (name == "grevlex") return {TermOrderKind::GrevLex};
    throw PreconditionError("unknown term order '" + std::string(name) +
                            "' (expected lex, grlex or grevlex)");
}

}  // namespace crnid
