#include "crnid/poly_text.hpp"

#include <cctype>

#include "crnid/error.hpp"

namespace crnid {

std::string to_string(const Polynomial& p) {
    if (p.is_zero()) return "0";
    const CatalogPtr& cat = p.catalog();
    std::string out;
    bool first = true;
    for (const Term& t : p.terms()) {
        Rational c = t.coeff;
        bool neg = c < 0;
        if (neg) c = -c;
        if (first) {
            if (neg) out += "-";
            first = false;
        } else {
            out += neg ? " - " : " + ";
        }
        std::string mono;
        for (int i = 0; i < t.mono.nvars(); ++i) {
            int e = t.mono.exponent(i);
            if (e == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += cat->name(i);
            if (e > 1) mono += "^" + std::to_string(e);
        }
        if (mono.empty()) {
            out += to_string(c);
        } else {
            if (c != 1) out += to_string(c) + "*";
            out += mono;
        }
    }
    return out;
}

namespace {

struct Cursor {
    std::string_view s;
    size_t pos = 0;
    int line;

    void skip_ws() {
        while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    int column() const { return static_cast<int>(pos) + 1; }
    [[noreturn]] void fail(const std::string& msg) { throw ParseError(line, column(), msg); }

    bool consume(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }

    // Unsigned integer digit run.
    std::string integer() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) fail("expected a number");
        return std::string(s.substr(start, pos - start));
    }

    std::string identifier() {
        skip_ws();
        size_t start = pos;
        if (pos >= s.size() ||
            !(std::isalpha(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
            fail("expected a variable name");
        ++pos;
        while (pos < s.size() &&
               (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
            ++pos;
        return std::string(s.substr(start, pos - start));
    }
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, CatalogPtr cat, TermOrder ord, int line) {
    Cursor c{text, 0, line};
    std::vector<Term> terms;

    bool expect_term = true;
    int sign = 1;
    if (c.consume('+')) {
    } else if (c.consume('-')) {
        sign = -1;
    }
    if (c.eof()) c.fail("empty polynomial");

    while (expect_term) {
        Rational coeff(sign);
        bool saw_coeff = false;
        bool star_after_coeff = false;
        if (std::isdigit(static_cast<unsigned char>(c.peek()))) {
            std::string num = c.integer();
            std::string lit = num;
            if (c.consume('/')) lit += "/" + c.integer();
            coeff = Rational(sign) * parse_rational(lit, c.line, c.column());
            saw_coeff = true;
            star_after_coeff = c.consume('*');  // optional between coefficient and monomial
        }

        Monomial mono(cat->size());
        bool saw_var = false;
        bool expect_factor = star_after_coeff || !saw_coeff ||
                             std::isalpha(static_cast<unsigned char>(c.peek())) ||
                             c.peek() == '_';
        while (expect_factor) {
            int col = c.column();
            std::string name = c.identifier();
            int idx = cat->find(name);
            if (idx < 0) throw ParseError(c.line, col, "unknown variable '" + name + "'");
            int e = 1;
            if (c.consume('^')) e = std::stoi(c.integer());
            mono.set_exponent(idx, mono.exponent(idx) + e);
            saw_var = true;
            expect_factor = c.consume('*');
        }
        if (!saw_coeff && !saw_var) c.fail("expected a term");
        terms.push_back({std::move(coeff), std::move(mono)});

        if (c.consume('+')) {
            sign = 1;
        } else if (c.consume('-')) {
            sign = -1;
        } else {
            expect_term = false;
        }
        if (expect_term && c.eof()) c.fail("dangling sign at end of polynomial");
    }
    if (!c.eof()) c.fail("unexpected trailing input");
    return Polynomial::from_terms(std::move(cat), std::move(terms), ord);
}

}  // namespace crnid
