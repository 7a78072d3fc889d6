#include "crnid/rational.hpp"

#include <cctype>
#include <cmath>
#include <stdexcept>

#include "crnid/error.hpp"

namespace crnid {

Rational parse_rational(std::string_view text, int line, int column) {
    size_t b = 0, e = text.size();
    while (b < e && std::isspace(static_cast<unsigned char>(text[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(text[e - 1]))) --e;
    std::string s(text.substr(b, e - b));
    if (s.empty()) throw ParseError(line, column, "empty rational literal");

    auto digits_ok = [](const std::string& t, size_t from) {
        if (from >= t.size()) return false;
        for (size_t i = from; i < t.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
        return true;
    };

    std::string num = s, den = "1";
    if (auto slash = s.find('/'); slash != std::string::npos) {
        num = s.substr(0, slash);
        den = s.substr(slash + 1);
    }
    size_t num_start = (!num.empty() && (num[0] == '-' || num[0] == '+')) ? 1 : 0;
    if (!digits_ok(num, num_start) || !digits_ok(den, 0))
        throw ParseError(line, column, "malformed rational literal '" + s + "'");

    Rational q;
    if (mpq_set_str(q.get_mpq_t(), (num + "/" + den).c_str(), 10) != 0)
        throw ParseError(line, column, "malformed rational literal '" + s + "'");
    if (mpz_sgn(mpq_denref(q.get_mpq_t())) == 0)
        throw ParseError(line, column, "zero denominator in '" + s + "'");
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q) {
    std::string s = q.get_num().get_str();
    if (q.get_den() != 1) s += "/" + q.get_den().get_str();
    return s;
}

double to_double(const Rational& q) { return q.get_d(); }

std::optional<Rational> rationalize(double x, unsigned long max_denominator) {
    if (!std::isfinite(x)) return std::nullopt;
    if (max_denominator < 1) max_denominator = 1;

    bool neg = x < 0;
    double v = neg ? -x : x;

    // Continued-fraction convergents p/q of v; stop before q exceeds the cap.
    Integer p_prev = 1, q_prev = 0;
    Integer p = Integer(static_cast<unsigned long>(std::floor(v))), q = 1;
    double frac = v - std::floor(v);
    for (int iter = 0; iter < 64 && frac > 1e-15; ++iter) {
        double inv = 1.0 / frac;
        double a_floor = std::floor(inv);
        if (a_floor > 9e18) break;
        Integer a(static_cast<unsigned long>(a_floor));
        Integer p_next = a * p + p_prev;
        Integer q_next = a * q + q_prev;
        if (q_next > Integer(max_denominator)) break;
        p_prev = p;
        q_prev = q;
        p = p_next;
        q = q_next;
        frac = inv - a_floor;
    }
    Rational r(p, q);
    r.canonicalize();
    if (neg) r = -r;
    return r;
}

}  // namespace crnid
