#include "crnid/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

#include "crnid/error.hpp"

namespace crnid {

namespace {

void sort_terms(std::vector<Term>& terms, const TermOrder& ord) {
    std::sort(terms.begin(), terms.end(),
              [&](const Term& a, const Term& b) { return ord.greater(a.mono, b.mono); });
}

Rational pow_rational(const Rational& base, int e) {
    Rational r;
    mpz_pow_ui(mpq_numref(r.get_mpq_t()), mpq_numref(base.get_mpq_t()), static_cast<unsigned long>(e));
    mpz_pow_ui(mpq_denref(r.get_mpq_t()), mpq_denref(base.get_mpq_t()), static_cast<unsigned long>(e));
    r.canonicalize();
    return r;
}

}  // namespace

void Polynomial::require_valid() const {
    if (!cat_) throw PreconditionError("operation on a detached (default-constructed) polynomial");
}

void Polynomial::require_compatible(const Polynomial& o) const {
    require_valid();
    o.require_valid();
    if (!compatible(cat_, o.cat_)) throw CatalogMismatchError("polynomials live on different catalogs");
    if (!(ord_ == o.ord_)) throw CatalogMismatchError("polynomials carry different term orders");
}

Polynomial Polynomial::zero(CatalogPtr cat, TermOrder ord) {
    return Polynomial(std::move(cat), ord, {});
}

Polynomial Polynomial::constant(CatalogPtr cat, Rational value, TermOrder ord) {
    std::vector<Term> t;
    if (value != 0) t.push_back({std::move(value), Monomial(cat->size())});
    return Polynomial(std::move(cat), ord, std::move(t));
}

Polynomial Polynomial::variable(CatalogPtr cat, int var, TermOrder ord) {
    if (var < 0 || var >= cat->size()) throw UnknownVariableError("variable index out of range");
    std::vector<Term> t;
    t.push_back({Rational(1), Monomial::unit(cat->size(), var)});
    return Polynomial(std::move(cat), ord, std::move(t));
}

Polynomial Polynomial::term(CatalogPtr cat, Rational coeff, Monomial mono, TermOrder ord) {
    if (mono.nvars() != cat->size()) throw CatalogMismatchError("monomial width does not match catalog");
    std::vector<Term> t;
    if (coeff != 0) t.push_back({std::move(coeff), std::move(mono)});
    return Polynomial(std::move(cat), ord, std::move(t));
}

Polynomial Polynomial::from_terms(CatalogPtr cat, std::vector<Term> terms, TermOrder ord) {
    std::unordered_map<Monomial, Rational, MonomialHash> acc;
    acc.reserve(terms.size());
    for (auto& t : terms) {
        if (t.mono.nvars() != cat->size())
            throw CatalogMismatchError("monomial width does not match catalog");
        acc[t.mono] += t.coeff;
    }
    std::vector<Term> out;
    out.reserve(acc.size());
    for (auto& [m, c] : acc)
        if (c != 0) out.push_back({std::move(c), m});
    sort_terms(out, ord);
    return Polynomial(std::move(cat), ord, std::move(out));
}

Polynomial Polynomial::from_sorted(CatalogPtr cat, std::vector<Term> terms, TermOrder ord) {
    return Polynomial(std::move(cat), ord, std::move(terms));
}

bool Polynomial::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_constant());
}

Rational Polynomial::constant_value() const {
    if (terms_.empty()) return Rational(0);
    if (!is_constant()) throw PreconditionError("polynomial is not constant");
    return terms_[0].coeff;
}

int Polynomial::total_degree() const {
    int d = -1;
    for (const Term& t : terms_) d = std::max(d, t.mono.degree());
    return d;
}

int Polynomial::degree_in(int var) const {
    if (var < 0 || (cat_ && var >= cat_->size()))
        throw UnknownVariableError("variable index out of range");
    int d = 0;
    for (const Term& t : terms_) d = std::max(d, t.mono.exponent(var));
    return d;
}

int Polynomial::degree_in_role(VarRole role) const {
    require_valid();
    std::vector<int> idx = cat_->indices_of(role);
    int d = 0;
    for (const Term& t : terms_) {
        int s = 0;
        for (int i : idx) s += t.mono.exponent(i);
        d = std::max(d, s);
    }
    return d;
}

const Term& Polynomial::leading_term() const {
    if (terms_.empty()) throw PreconditionError("leading term of the zero polynomial");
    return terms_[0];
}

Term Polynomial::leading_term(const TermOrder& ord) const {
    if (terms_.empty()) throw PreconditionError("leading term of the zero polynomial");
    if (ord == ord_) return terms_[0];
    const Term* best = &terms_[0];
    for (const Term& t : terms_)
        if (ord.greater(t.mono, best->mono)) best = &t;
    return *best;
}

Polynomial Polynomial::operator-() const {
    std::vector<Term> t = terms_;
    for (Term& x : t) x.coeff = -x.coeff;
    return Polynomial(cat_, ord_, std::move(t));
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    require_compatible(o);
    return fused(Rational(1), *this, Rational(1), Monomial(cat_->size()), o);
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    require_compatible(o);
    return fused(Rational(1), *this, Rational(-1), Monomial(cat_->size()), o);
}

Polynomial Polynomial::fused(const Rational& a, const Polynomial& p, const Rational& b,
                             const Monomial& m, const Polynomial& q) {
    p.require_compatible(q);
    std::vector<Term> out;
    out.reserve(p.terms_.size() + q.terms_.size());
    size_t i = 0, j = 0;
    const TermOrder& ord = p.ord_;
    while (i < p.terms_.size() || j < q.terms_.size()) {
        if (j >= q.terms_.size()) {
            Rational c = a * p.terms_[i].coeff;
            if (c != 0) out.push_back({std::move(c), p.terms_[i].mono});
            ++i;
            continue;
        }
        Monomial qm = Monomial::mul(m, q.terms_[j].mono);
        if (i >= p.terms_.size()) {
            Rational c = b * q.terms_[j].coeff;
            if (c != 0) out.push_back({std::move(c), std::move(qm)});
            ++j;
            continue;
        }
        int cmp = ord.compare(p.terms_[i].mono, qm);
        if (cmp > 0) {
            Rational c = a * p.terms_[i].coeff;
            if (c != 0) out.push_back({std::move(c), p.terms_[i].mono});
            ++i;
        } else if (cmp < 0) {
            Rational c = b * q.terms_[j].coeff;
            if (c != 0) out.push_back({std::move(c), std::move(qm)});
            ++j;
        } else {
            Rational c = a * p.terms_[i].coeff + b * q.terms_[j].coeff;
            if (c != 0) out.push_back({std::move(c), std::move(qm)});
            ++i;
            ++j;
        }
    }
    return Polynomial(p.cat_, ord, std::move(out));
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    require_compatible(o);
    if (is_zero() || o.is_zero()) return zero(cat_, ord_);
    // Multiply the smaller operand into the larger one.
    const Polynomial& small = terms_.size() <= o.terms_.size() ? *this : o;
    const Polynomial& large = terms_.size() <= o.terms_.size() ? o : *this;
    std::unordered_map<Monomial, Rational, MonomialHash> acc;
    acc.reserve(small.terms_.size() * large.terms_.size());
    for (const Term& s : small.terms_)
        for (const Term& l : large.terms_)
            acc[Monomial::mul(s.mono, l.mono)] += s.coeff * l.coeff;
    std::vector<Term> out;
    out.reserve(acc.size());
    for (auto& [m, c] : acc)
        if (c != 0) out.push_back({std::move(c), m});
    sort_terms(out, ord_);
    return Polynomial(cat_, ord_, std::move(out));
}

Polynomial Polynomial::scaled(const Rational& c) const {
    require_valid();
    if (c == 0) return zero(cat_, ord_);
    std::vector<Term> t = terms_;
    for (Term& x : t) x.coeff *= c;
    return Polynomial(cat_, ord_, std::move(t));
}

Polynomial Polynomial::times_monomial(const Rational& c, const Monomial& m) const {
    require_valid();
    if (c == 0) return zero(cat_, ord_);
    std::vector<Term> t;
    t.reserve(terms_.size());
    for (const Term& x : terms_) t.push_back({x.coeff * c, Monomial::mul(x.mono, m)});
    // Multiplying all monomials by the same factor keeps the sort order.
    return Polynomial(cat_, ord_, std::move(t));
}

Polynomial Polynomial::pow(int e) const {
    require_valid();
    if (e < 0) throw PreconditionError("negative polynomial power");
    Polynomial r = constant(cat_, Rational(1), ord_);
    Polynomial base = *this;
    while (e > 0) {
        if (e & 1) r = r * base;
        e >>= 1;
        if (e > 0) base = base * base;
    }
    return r;
}

Polynomial Polynomial::derivative(int var) const {
    require_valid();
    if (var < 0 || var >= cat_->size()) throw UnknownVariableError("variable index out of range");
    std::vector<Term> out;
    for (const Term& t : terms_) {
        int e = t.mono.exponent(var);
        if (e == 0) continue;
        Monomial m = t.mono;
        m.set_exponent(var, e - 1);
        out.push_back({t.coeff * e, std::move(m)});
    }
    // Dropping the exponent of a single fixed variable preserves strict
    // descending order under every supported order.
    return Polynomial(cat_, ord_, std::move(out));
}

Rational Polynomial::evaluate(const RationalPoint& point) const {
    require_valid();
    Rational total(0);
    for (const Term& t : terms_) {
        Rational v = t.coeff;
        for (int i = 0; i < t.mono.nvars(); ++i) {
            int e = t.mono.exponent(i);
            if (e == 0) continue;
            if (static_cast<size_t>(i) >= point.size() || !point[static_cast<size_t>(i)])
                throw UnassignedVariableError("no value assigned to variable '" + cat_->name(i) + "'");
            v *= pow_rational(*point[static_cast<size_t>(i)], e);
        }
        total += v;
    }
    return total;
}

double Polynomial::evaluate_double(std::span<const double> point) const {
    require_valid();
    double total = 0.0;
    for (const Term& t : terms_) {
        double v = to_double(t.coeff);
        for (int i = 0; i < t.mono.nvars(); ++i) {
            int e = t.mono.exponent(i);
            if (e == 0) continue;
            if (static_cast<size_t>(i) >= point.size())
                throw UnassignedVariableError("no value assigned to variable '" + cat_->name(i) + "'");
            v *= std::pow(point[static_cast<size_t>(i)], e);
        }
        total += v;
    }
    return total;
}

Polynomial Polynomial::substitute(const RationalPoint& point) const {
    require_valid();
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const Term& t : terms_) {
        Rational c = t.coeff;
        Monomial m(cat_->size());
        for (int i = 0; i < t.mono.nvars(); ++i) {
            int e = t.mono.exponent(i);
            if (e == 0) continue;
            if (static_cast<size_t>(i) < point.size() && point[static_cast<size_t>(i)])
                c *= pow_rational(*point[static_cast<size_t>(i)], e);
            else
                m.set_exponent(i, e);
        }
        out.push_back({std::move(c), std::move(m)});
    }
    return from_terms(cat_, std::move(out), ord_);
}

Polynomial Polynomial::content_normalized() const {
    require_valid();
    if (terms_.empty()) return *this;
    Integer den_lcm(1), num_gcd(0);
    for (const Term& t : terms_) {
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.coeff.get_den().get_mpz_t());
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), t.coeff.get_num().get_mpz_t());
    }
    Rational scale(den_lcm, num_gcd);
    scale.canonicalize();
    if (terms_[0].coeff < 0) scale = -scale;
    return scaled(scale);
}

Polynomial Polynomial::monic() const {
    require_valid();
    if (terms_.empty()) return *this;
    return scaled(Rational(1) / terms_[0].coeff);
}

Polynomial Polynomial::with_order(TermOrder ord) const {
    require_valid();
    if (ord == ord_) return *this;
    std::vector<Term> t = terms_;
    sort_terms(t, ord);
    return Polynomial(cat_, ord, std::move(t));
}

Polynomial Polynomial::remapped(CatalogPtr new_cat, std::span<const int> index_map) const {
    require_valid();
    if (static_cast<int>(index_map.size()) != cat_->size())
        throw DimensionError("index map width does not match catalog");
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const Term& t : terms_) {
        Monomial m(new_cat->size());
        for (int i = 0; i < t.mono.nvars(); ++i) {
            int e = t.mono.exponent(i);
            if (e == 0) continue;
            int ni = index_map[static_cast<size_t>(i)];
            if (ni < 0 || ni >= new_cat->size())
                throw UnknownVariableError("remap target out of range for variable '" +
                                           cat_->name(i) + "'");
            m.set_exponent(ni, m.exponent(ni) + e);
        }
        out.push_back({t.coeff, std::move(m)});
    }
    return from_terms(std::move(new_cat), std::move(out), ord_);
}

bool Polynomial::operator==(const Polynomial& o) const {
    if (!cat_ && !o.cat_) return true;
    if (!cat_ || !o.cat_) return false;
    if (!compatible(cat_, o.cat_)) return false;
    if (terms_.size() != o.terms_.size()) return false;
    const Polynomial& rhs_sorted = (ord_ == o.ord_) ? o : o.with_order(ord_);
    const std::vector<Term>& a = terms_;
    const std::vector<Term>& b = (ord_ == o.ord_) ? o.terms_ : rhs_sorted.terms_;
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i].coeff != b[i].coeff || a[i].mono != b[i].mono) return false;
    return true;
}

}  // namespace crnid
