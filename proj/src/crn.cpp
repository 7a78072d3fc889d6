#include "crnid/crn.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "crnid/error.hpp"
#include "crnid/poly_text.hpp"

namespace crnid {

std::vector<std::vector<int>> CrnModel::stoichiometry() const {
    std::vector<std::vector<int>> S(species.size(), std::vector<int>(reactions.size(), 0));
    for (size_t i = 0; i < reactions.size(); ++i)
        for (size_t j = 0; j < species.size(); ++j)
            S[j][i] = reactions[i].product[j] - reactions[i].reactant[j];
    return S;
}

int CrnModel::species_index(std::string_view name) const {
    for (size_t j = 0; j < species.size(); ++j)
        if (species[j] == name) return static_cast<int>(j);
    return -1;
}

int CrnModel::rate_index(std::string_view symbol) const {
    for (size_t i = 0; i < reactions.size(); ++i)
        if (reactions[i].rate_symbol == symbol) return static_cast<int>(i);
    return -1;
}

void CrnModel::validate() const {
    if (species.empty()) throw PreconditionError("model declares no species");
    if (reactions.empty()) throw PreconditionError("model declares no reactions");
    for (size_t j = 0; j < species.size(); ++j)
        for (size_t j2 = j + 1; j2 < species.size(); ++j2)
            if (species[j] == species[j2])
                throw PreconditionError("duplicate species '" + species[j] + "'");
    for (size_t i = 0; i < reactions.size(); ++i) {
        const Reaction& rx = reactions[i];
        if (rx.reactant.size() != species.size() || rx.product.size() != species.size())
            throw PreconditionError("stoichiometry width mismatch in reaction " +
                                    std::to_string(i + 1));
        for (size_t j = 0; j < species.size(); ++j)
            if (rx.reactant[j] < 0 || rx.product[j] < 0)
                throw PreconditionError("negative stoichiometry in reaction " +
                                        std::to_string(i + 1));
        if (rx.reactant == rx.product)
            throw PreconditionError("reaction '" + rx.rate_symbol +
                                    "' does not change any species");
        for (size_t i2 = i + 1; i2 < reactions.size(); ++i2)
            if (reactions[i2].rate_symbol == rx.rate_symbol)
                throw PreconditionError("duplicate rate symbol '" + rx.rate_symbol + "'");
    }
}

std::vector<Rational> ExtrinsicSpec::g_at(int c) const {
    RationalPoint pt;
    pt.reserve(points[size_t(c)].size());
    for (const Rational& v : points[size_t(c)]) pt.push_back(v);
    std::vector<Rational> out;
    out.reserve(g.size());
    for (const Polynomial& gi : g) out.push_back(gi.evaluate(pt));
    return out;
}

bool ExtrinsicSpec::g_strictly_positive() const {
    for (int c = 0; c < num_points(); ++c)
        for (const Rational& v : g_at(c))
            if (v <= 0) return false;
    return true;
}

void ExtrinsicSpec::validate(int num_rates) const {
    if (points.empty()) throw PreconditionError("extrinsic noise set U is empty");
    if (weights.size() != points.size())
        throw PreconditionError("extrinsic weights do not match U");
    Rational total(0);
    for (const Rational& w : weights) {
        if (w <= 0) throw PreconditionError("extrinsic weights must be positive");
        total += w;
    }
    if (total != 1) throw PreconditionError("extrinsic weights must sum to 1");
    for (size_t a = 0; a < points.size(); ++a) {
        if (static_cast<int>(points[a].size()) != dim)
            throw PreconditionError("extrinsic point of wrong dimension");
        for (size_t b = a + 1; b < points.size(); ++b)
            if (points[a] == points[b]) throw PreconditionError("duplicate extrinsic point");
    }
    if (static_cast<int>(g.size()) != num_rates)
        throw PreconditionError("g must list one entry per reaction");
    for (int c = 0; c < num_points(); ++c)
        for (const Rational& v : g_at(c))
            if (v < 0) throw PreconditionError("g(u) must be nonnegative on U");
    if (static_cast<int>(alpha.size()) != dim)
        throw PreconditionError("alpha must have one entry per extrinsic dimension");
    for (const Rational& a : alpha)
        if (a <= 0) throw PreconditionError("alpha must be positive");
    if (gamma <= 0) throw PreconditionError("gamma must be positive");
}

// ---------------------------------------------------------------------------
// Parser

namespace {

struct Line {
    std::string text;
    int number;
};

struct LineCursor {
    const std::string& s;
    int line;
    size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
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
    bool consume_str(std::string_view kw) {
        skip_ws();
        if (s.compare(pos, kw.size(), kw) == 0) {
            pos += kw.size();
            return true;
        }
        return false;
    }
    void expect(char c, const std::string& what) {
        if (!consume(c)) fail("expected '" + std::string(1, c) + "' " + what);
    }

    std::string identifier() {
        skip_ws();
        size_t start = pos;
        if (pos >= s.size() ||
            !(std::isalpha(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
            fail("expected an identifier");
        ++pos;
        while (pos < s.size() &&
               (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
            ++pos;
        return s.substr(start, pos - start);
    }

    long integer() {
        skip_ws();
        size_t start = pos;
        if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
        size_t digits = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == digits) fail("expected an integer");
        return std::stol(s.substr(start, pos - start));
    }

    Rational rational() {
        skip_ws();
        size_t start = pos;
        if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos < s.size() && s[pos] == '/') {
            ++pos;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        }
        if (pos == start) fail("expected a rational number");
        return parse_rational(s.substr(start, pos - start), line, static_cast<int>(start) + 1);
    }

    std::string rest() {
        skip_ws();
        return s.substr(pos);
    }
};

// One side of a reaction arrow: `0` or `+`-separated `c Species` terms with
// integer coefficient c >= 1.
std::vector<int> parse_complex(LineCursor& c, const std::vector<std::string>& species) {
    std::vector<int> counts(species.size(), 0);
    if (c.consume('0')) return counts;
    while (true) {
        long coeff = 1;
        c.skip_ws();
        if (c.pos < c.s.size() && (std::isdigit(static_cast<unsigned char>(c.s[c.pos])) ||
                                   c.s[c.pos] == '-')) {
            int col = c.column();
            coeff = c.integer();
            if (coeff < 1)
                throw ParseError(c.line, col, "stoichiometric coefficient must be >= 1");
        }
        int col = c.column();
        std::string name = c.identifier();
        auto it = std::find(species.begin(), species.end(), name);
        if (it == species.end())
            throw ParseError(c.line, col, "unknown species '" + name + "'");
        counts[size_t(it - species.begin())] += static_cast<int>(coeff);
        if (!c.consume('+')) break;
    }
    return counts;
}

std::vector<Rational> parse_tuple(LineCursor& c, int dim) {
    std::vector<Rational> out;
    bool parens = c.consume('(');
    if (!parens && dim != 1) c.fail("expected '(' opening a tuple");
    for (int i = 0; i < dim; ++i) {
        if (i > 0) c.expect(',', "between tuple entries");
        out.push_back(c.rational());
    }
    if (parens) c.expect(')', "closing the tuple");
    return out;
}

}  // namespace

ParsedCrn parse_crn(std::string_view text, std::string source_name) {
    std::vector<Line> lines;
    {
        int number = 0;
        std::string current;
        std::istringstream in{std::string(text)};
        while (std::getline(in, current)) {
            ++number;
            if (auto hash = current.find('#'); hash != std::string::npos)
                current.erase(hash);
            // Trim trailing whitespace; leading stays for the cursor.
            while (!current.empty() && std::isspace(static_cast<unsigned char>(current.back())))
                current.pop_back();
            bool blank = current.find_first_not_of(" \t") == std::string::npos;
            if (!blank) lines.push_back({current, number});
        }
    }

    ParsedCrn out;
    out.model.source = std::move(source_name);
    bool seen_species = false;
    bool in_extrinsic = false;
    std::vector<std::pair<std::string, int>> constraint_items;  // text, line
    struct RawExtrinsic {
        int dim = 0;
        int line = 0;
        std::optional<std::string> g_text;
        int g_line = 0;
        std::optional<std::string> u_text;
        int u_line = 0;
        std::optional<std::string> rep_text;
        int rep_line = 0;
    };
    std::optional<RawExtrinsic> raw_ext;

    for (const Line& ln : lines) {
        LineCursor c{ln.text, ln.number};
        if (c.consume_str("species:")) {
            if (seen_species) c.fail("duplicate species declaration");
            seen_species = true;
            in_extrinsic = false;
            while (!c.eof()) out.model.species.push_back(c.identifier());
            if (out.model.species.empty()) c.fail("species list is empty");
            continue;
        }
        if (c.consume_str("reaction")) {
            in_extrinsic = false;
            if (!seen_species) c.fail("reactions must follow the species declaration");
            Reaction rx;
            rx.rate_symbol = c.identifier();
            c.expect(':', "after the rate symbol");
            rx.reactant = parse_complex(c, out.model.species);
            if (!c.consume_str("->")) c.fail("expected '->' between complexes");
            rx.product = parse_complex(c, out.model.species);
            if (!c.eof()) c.fail("unexpected trailing input after reaction");
            if (rx.reactant == rx.product)
                throw ParseError(ln.number, 0, "reaction '" + rx.rate_symbol +
                                                   "' does not change any species");
            if (out.model.rate_index(rx.rate_symbol) >= 0)
                throw ParseError(ln.number, 0,
                                 "duplicate rate symbol '" + rx.rate_symbol + "'");
            out.model.reactions.push_back(std::move(rx));
            continue;
        }
        if (c.consume_str("constraints:")) {
            in_extrinsic = false;
            constraint_items.emplace_back(c.rest(), ln.number);
            continue;
        }
        if (c.consume_str("extrinsic:")) {
            if (raw_ext) c.fail("duplicate extrinsic block");
            RawExtrinsic re;
            re.line = ln.number;
            if (c.identifier() != "u") c.fail("extrinsic block must declare 'u dim <s>'");
            if (c.identifier() != "dim") c.fail("extrinsic block must declare 'u dim <s>'");
            re.dim = static_cast<int>(c.integer());
            if (re.dim < 1) c.fail("extrinsic dimension must be >= 1");
            if (!c.eof()) c.fail("unexpected trailing input after extrinsic header");
            raw_ext = std::move(re);
            in_extrinsic = true;
            continue;
        }
        if (in_extrinsic && raw_ext) {
            if (c.consume_str("g:")) {
                raw_ext->g_text = c.rest();
                raw_ext->g_line = ln.number;
                continue;
            }
            if (c.consume_str("U:")) {
                raw_ext->u_text = c.rest();
                raw_ext->u_line = ln.number;
                continue;
            }
            if (c.consume_str("reporters:")) {
                raw_ext->rep_text = c.rest();
                raw_ext->rep_line = ln.number;
                continue;
            }
        }
        c.fail("unrecognized directive");
    }

    if (!seen_species) throw ParseError(1, 0, "missing species declaration");
    if (out.model.reactions.empty()) throw ParseError(1, 0, "missing reaction declarations");
    out.model.validate();
    const int r = out.model.num_reactions();

    // Constraints: default all-positive; later mentions override per rate.
    out.constraints = KSpec::all_positive(r);
    for (auto& [text, line] : constraint_items) {
        LineCursor c{text, line};
        if (c.eof()) c.fail("empty constraints list");
        while (!c.eof()) {
            if (c.consume_str("exactly_one")) {
                c.expect('(', "after exactly_one");
                int col1 = c.column();
                std::string a = c.identifier();
                c.expect(',', "between exactly_one rates");
                int col2 = c.column();
                std::string b = c.identifier();
                c.expect(')', "closing exactly_one");
                int ia = out.model.rate_index(a);
                int ib = out.model.rate_index(b);
                if (ia < 0) throw ParseError(line, col1, "unknown rate symbol '" + a + "'");
                if (ib < 0) throw ParseError(line, col2, "unknown rate symbol '" + b + "'");
                if (ia == ib) throw ParseError(line, col1, "exactly_one needs two distinct rates");
                if (out.constraints.exactly_one) c.fail("multiple exactly_one constraints");
                out.constraints.exactly_one = {ia, ib};
                out.constraints.signs[size_t(ia)] = RateSign::NonNegative;
                out.constraints.signs[size_t(ib)] = RateSign::NonNegative;
            } else {
                int col = c.column();
                std::string sym = c.identifier();
                int idx = out.model.rate_index(sym);
                if (idx < 0) throw ParseError(line, col, "unknown rate symbol '" + sym + "'");
                if (c.consume_str(">=")) {
                    if (c.integer() != 0) c.fail("constraints compare against 0");
                    out.constraints.signs[size_t(idx)] = RateSign::NonNegative;
                } else if (c.consume('>')) {
                    if (c.integer() != 0) c.fail("constraints compare against 0");
                    out.constraints.signs[size_t(idx)] = RateSign::StrictPositive;
                } else {
                    c.fail("expected '>' or '>=' in constraint");
                }
            }
            if (!c.consume(',')) break;
        }
        if (!c.eof()) c.fail("unexpected trailing input in constraints");
    }

    if (raw_ext) {
        ExtrinsicSpec ext;
        ext.dim = raw_ext->dim;
        std::vector<VarInfo> uvars;
        for (int i = 1; i <= ext.dim; ++i)
            uvars.push_back({"u" + std::to_string(i), VarRole::State, static_cast<std::int16_t>(i)});
        ext.u_catalog = Catalog::make(std::move(uvars));

        if (!raw_ext->g_text) throw ParseError(raw_ext->line, 0, "extrinsic block lacks 'g:'");
        {
            LineCursor c{*raw_ext->g_text, raw_ext->g_line};
            c.expect('[', "opening the g vector");
            size_t entry_start;
            do {
                entry_start = c.pos;
                int depth = 0;
                std::string piece;
                while (c.pos < c.s.size()) {
                    char ch = c.s[c.pos];
                    if (ch == ',' && depth == 0) break;
                    if (ch == ']' && depth == 0) break;
                    if (ch == '(') ++depth;
                    if (ch == ')') --depth;
                    piece += ch;
                    ++c.pos;
                }
                if (piece.find_first_not_of(" \t") == std::string::npos)
                    throw ParseError(c.line, static_cast<int>(entry_start) + 1,
                                     "empty entry in g");
                ext.g.push_back(parse_polynomial(piece, ext.u_catalog, {}, c.line));
            } while (c.consume(','));
            c.expect(']', "closing the g vector");
            if (!c.eof()) c.fail("unexpected trailing input after g");
        }

        if (!raw_ext->u_text) throw ParseError(raw_ext->line, 0, "extrinsic block lacks 'U:'");
        {
            LineCursor c{*raw_ext->u_text, raw_ext->u_line};
            do {
                ext.points.push_back(parse_tuple(c, ext.dim));
                ext.weights.push_back(c.rational());
            } while (c.consume(';'));
            if (!c.eof()) c.fail("unexpected trailing input after U");
        }

        ext.alpha.assign(size_t(ext.dim), Rational(1));
        ext.gamma = 1;
        if (raw_ext->rep_text) {
            LineCursor c{*raw_ext->rep_text, raw_ext->rep_line};
            while (!c.eof()) {
                std::string key = c.identifier();
                c.expect('=', "after reporter parameter name");
                if (key == "alpha") {
                    ext.alpha = parse_tuple(c, ext.dim);
                } else if (key == "gamma") {
                    ext.gamma = c.rational();
                } else {
                    c.fail("unknown reporter parameter '" + key + "'");
                }
                if (!c.consume(',')) break;
            }
            if (!c.eof()) c.fail("unexpected trailing input after reporters");
        }

        ext.validate(r);
        out.extrinsic = std::move(ext);
    }

    return out;
}

namespace {

std::string complex_to_text(const std::vector<int>& counts,
                            const std::vector<std::string>& species) {
    std::string s;
    for (size_t j = 0; j < counts.size(); ++j) {
        if (counts[j] == 0) continue;
        if (!s.empty()) s += " + ";
        if (counts[j] > 1) s += std::to_string(counts[j]) + " ";
        s += species[j];
    }
    return s.empty() ? "0" : s;
}

}  // namespace

std::string to_text(const ParsedCrn& parsed) {
    const CrnModel& m = parsed.model;
    std::string out = "species:";
    for (const std::string& s : m.species) out += " " + s;
    out += "\n";
    for (const Reaction& rx : m.reactions)
        out += "reaction " + rx.rate_symbol + ": " + complex_to_text(rx.reactant, m.species) +
               " -> " + complex_to_text(rx.product, m.species) + "\n";

    bool default_k = !parsed.constraints.exactly_one;
    for (RateSign s : parsed.constraints.signs)
        if (s != RateSign::StrictPositive) default_k = false;
    if (!default_k) {
        out += "constraints:";
        bool first = true;
        for (size_t i = 0; i < parsed.constraints.signs.size(); ++i) {
            if (parsed.constraints.exactly_one) {
                auto [a, b] = *parsed.constraints.exactly_one;
                if (static_cast<int>(i) == a || static_cast<int>(i) == b) continue;
            }
            out += first ? " " : ", ";
            first = false;
            out += m.reactions[i].rate_symbol;
            out += parsed.constraints.signs[i] == RateSign::StrictPositive ? " > 0" : " >= 0";
        }
        if (parsed.constraints.exactly_one) {
            auto [a, b] = *parsed.constraints.exactly_one;
            out += first ? " " : ", ";
            out += "exactly_one(" + m.reactions[size_t(a)].rate_symbol + ", " +
                   m.reactions[size_t(b)].rate_symbol + ")";
        }
        out += "\n";
    }

    if (parsed.extrinsic) {
        const ExtrinsicSpec& e = *parsed.extrinsic;
        out += "extrinsic: u dim " + std::to_string(e.dim) + "\n";
        out += "  g: [";
        for (size_t i = 0; i < e.g.size(); ++i)
            out += (i ? ", " : "") + to_string(e.g[i]);
        out += "]\n";
        out += "  U:";
        for (int c = 0; c < e.num_points(); ++c) {
            out += c ? "; (" : " (";
            for (int d = 0; d < e.dim; ++d)
                out += (d ? "," : "") + to_string(e.points[size_t(c)][size_t(d)]);
            out += ") " + to_string(e.weights[size_t(c)]);
        }
        out += "\n  reporters: alpha = (";
        for (int d = 0; d < e.dim; ++d) out += (d ? "," : "") + to_string(e.alpha[size_t(d)]);
        out += "), gamma = " + to_string(e.gamma) + "\n";
    }
    return out;
}

// ---------------------------------------------------------------------------
// Catalog and symbolic construction

namespace {

std::string cov_name(int a, int b) {
    if (a <= 9 && b <= 9) return "p" + std::to_string(a) + std::to_string(b);
    return "p" + std::to_string(a) + "_" + std::to_string(b);
}

}  // namespace

CatalogPtr make_crn_catalog(const CrnModel& m, int slack_count) {
    int n = m.num_species();
    int r = m.num_reactions();
    std::vector<VarInfo> vars;
    for (int j = 1; j <= n; ++j)
        vars.push_back({"x" + std::to_string(j), VarRole::State, static_cast<std::int16_t>(j)});
    for (int a = 1; a <= n; ++a)
        for (int b = a; b <= n; ++b)
            vars.push_back({cov_name(a, b), VarRole::Covariance, static_cast<std::int16_t>(a),
                            static_cast<std::int16_t>(b)});
    for (int i = 1; i <= r; ++i)
        vars.push_back({"k" + std::to_string(i), VarRole::Rate, static_cast<std::int16_t>(i)});
    for (int j = 1; j <= slack_count; ++j)
        vars.push_back({"y" + std::to_string(j), VarRole::Slack, static_cast<std::int16_t>(j)});
    return Catalog::make(std::move(vars));
}

namespace {

int find_role_var(const CatalogPtr& cat, VarRole role, int a, int b, const char* what) {
    for (int i = 0; i < cat->size(); ++i) {
        const VarInfo& v = cat->var(i);
        if (v.role == role && v.a == a && (b < 0 || v.b == b)) return i;
    }
    throw UnknownVariableError(std::string("catalog lacks ") + what);
}

}  // namespace

int state_var(const CatalogPtr& cat, int j) {
    return find_role_var(cat, VarRole::State, j, -1, "a state variable");
}
int cov_var(const CatalogPtr& cat, int a, int b) {
    return find_role_var(cat, VarRole::Covariance, std::min(a, b), std::max(a, b),
                         "a covariance variable");
}
int rate_var(const CatalogPtr& cat, int i) {
    return find_role_var(cat, VarRole::Rate, i, -1, "a rate variable");
}
int slack_var(const CatalogPtr& cat, int j) {
    return find_role_var(cat, VarRole::Slack, j, -1, "a slack variable");
}

std::vector<Polynomial> propensities(const CrnModel& m, const CatalogPtr& cat, TermOrder ord) {
    m.validate();
    int n = m.num_species();
    std::vector<Polynomial> out;
    out.reserve(size_t(m.num_reactions()));
    for (int i = 0; i < m.num_reactions(); ++i) {
        Monomial mono(cat->size());
        mono.set_exponent(rate_var(cat, i + 1), 1);
        for (int j = 0; j < n; ++j) {
            int e = m.reactions[size_t(i)].reactant[size_t(j)];
            if (e > 0) mono.set_exponent(state_var(cat, j + 1), e);
        }
        out.push_back(Polynomial::term(cat, Rational(1), std::move(mono), ord));
    }
    return out;
}

std::vector<Polynomial> propensities(const CrnModel& m) {
    return propensities(m, make_crn_catalog(m, 0));
}

std::vector<Polynomial> drift(const CrnModel& m, const CatalogPtr& cat, TermOrder ord) {
    std::vector<Polynomial> q = propensities(m, cat, ord);
    auto S = m.stoichiometry();
    std::vector<Polynomial> f;
    f.reserve(size_t(m.num_species()));
    for (int j = 0; j < m.num_species(); ++j) {
        Polynomial acc = Polynomial::zero(cat, ord);
        for (int i = 0; i < m.num_reactions(); ++i)
            if (S[size_t(j)][size_t(i)] != 0)
                acc = acc + q[size_t(i)].scaled(Rational(S[size_t(j)][size_t(i)]));
        f.push_back(std::move(acc));
    }
    return f;
}

std::vector<Polynomial> drift(const CrnModel& m) { return drift(m, make_crn_catalog(m, 0)); }

PolyMatrix diffusion(const CrnModel& m, const CatalogPtr& cat, TermOrder ord) {
    std::vector<Polynomial> q = propensities(m, cat, ord);
    auto S = m.stoichiometry();
    int n = m.num_species();
    PolyMatrix Q(cat, n, n, ord);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            Polynomial acc = Polynomial::zero(cat, ord);
            for (int i = 0; i < m.num_reactions(); ++i) {
                int w = S[size_t(a)][size_t(i)] * S[size_t(b)][size_t(i)];
                if (w != 0) acc = acc + q[size_t(i)].scaled(Rational(w));
            }
            Q.set(a, b, std::move(acc));
        }
    return Q;
}

PolyMatrix diffusion(const CrnModel& m) { return diffusion(m, make_crn_catalog(m, 0)); }

StationaryMatrix stationary_matrix(const CrnModel& m, const CatalogPtr& cat, TermOrder ord) {
    int n = m.num_species();
    int r = m.num_reactions();

    std::vector<Polynomial> residuals = drift(m, cat, ord);
    {
        std::vector<int> xvars;
        for (int j = 1; j <= n; ++j) xvars.push_back(state_var(cat, j));
        PolyMatrix J = jacobian(residuals, xvars);
        PolyMatrix P = symbolic_covariance(cat, n, ord);
        PolyMatrix Q = diffusion(m, cat, ord);
        for (Polynomial& lyap : lyapunov_residual(J, P, Q)) residuals.push_back(std::move(lyap));
    }

    std::vector<int> kvar(static_cast<size_t>(r));
    for (int i = 0; i < r; ++i) kvar[size_t(i)] = rate_var(cat, i + 1);

    StationaryMatrix out;
    out.A = PolyMatrix(cat, static_cast<int>(residuals.size()), r, ord);
    for (size_t row = 0; row < residuals.size(); ++row) {
        std::vector<std::vector<Term>> cols(static_cast<size_t>(r));
        for (const Term& t : residuals[row].terms()) {
            int which = -1;
            int kdeg = 0;
            for (int i = 0; i < r; ++i) {
                int e = t.mono.exponent(kvar[size_t(i)]);
                kdeg += e;
                if (e > 0) which = i;
            }
            // Every stationary residual is linear in the rate block by
            // construction; anything else is an internal error.
            if (kdeg != 1)
                throw Error("stationary residual not linear in the rates (internal)");
            Monomial stripped = t.mono;
            stripped.set_exponent(kvar[size_t(which)], 0);
            cols[size_t(which)].push_back({t.coeff, std::move(stripped)});
        }
        for (int i = 0; i < r; ++i)
            out.A.set(static_cast<int>(row), i,
                      Polynomial::from_terms(cat, std::move(cols[size_t(i)]), ord));
    }

    for (int j = 1; j <= n; ++j) out.row_labels.push_back("f" + std::to_string(j));
    for (int a = 1; a <= n; ++a)
        for (int b = a; b <= n; ++b)
            out.row_labels.push_back("lyap" + std::to_string(a) + std::to_string(b));
    return out;
}

StationaryMatrix stationary_matrix(const CrnModel& m) {
    return stationary_matrix(m, make_crn_catalog(m, 0));
}

}  // namespace crnid
