#ifndef CRNID_POLYNOMIAL_HPP
#define CRNID_POLYNOMIAL_HPP

#include <optional>
#include <span>
#include <vector>

#include "crnid/catalog.hpp"
#include "crnid/monomial.hpp"
#include "crnid/rational.hpp"
#include "crnid/term_order.hpp"

namespace crnid {

struct Term {
    Rational coeff;
    Monomial mono;
};

// Exact point: one optional value per catalog variable.
using RationalPoint = std::vector<std::optional<Rational>>;

// Sparse multivariate polynomial over Q on a fixed catalog. Terms are kept
// strictly descending under the carried term order with no zero
// coefficients and no duplicate monomials. Values are immutable after
// construction; every operation returns a new value, so sharing across
// threads is safe.
class Polynomial {
  public:
    Polynomial() = default;  // detached zero; valid only as a placeholder

    static Polynomial zero(CatalogPtr cat, TermOrder ord = {});
    static Polynomial constant(CatalogPtr cat, Rational value, TermOrder ord = {});
    static Polynomial variable(CatalogPtr cat, int var, TermOrder ord = {});
    static Polynomial term(CatalogPtr cat, Rational coeff, Monomial mono, TermOrder ord = {});
    // Normalizes arbitrary (coeff, monomial) pairs: merges duplicates, drops
    // zeros, sorts.
    static Polynomial from_terms(CatalogPtr cat, std::vector<Term> terms, TermOrder ord = {});
    // Trusts the caller: terms strictly descending under ord, no zeros.
    static Polynomial from_sorted(CatalogPtr cat, std::vector<Term> terms, TermOrder ord);

    const CatalogPtr& catalog() const { return cat_; }
    const TermOrder& order() const { return ord_; }
    const std::vector<Term>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    // Value of a constant polynomial (0 for the zero polynomial).
    Rational constant_value() const;
    int num_terms() const { return static_cast<int>(terms_.size()); }
    int total_degree() const;  // -1 for the zero polynomial
    int degree_in(int var) const;
    int degree_in_role(VarRole role) const;  // max combined exponent over the role block

    // Leading term under the carried order. Throws PreconditionError on zero.
    const Term& leading_term() const;
    // Leading term under an arbitrary order (linear scan when it differs
    // from the carried one).
    Term leading_term(const TermOrder& ord) const;

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial scaled(const Rational& c) const;
    Polynomial times_monomial(const Rational& c, const Monomial& m) const;
    Polynomial pow(int e) const;

    // a*p + b*(m*q) in one merge pass; the reduction workhorse.
    static Polynomial fused(const Rational& a, const Polynomial& p, const Rational& b,
                            const Monomial& m, const Polynomial& q);

    Polynomial derivative(int var) const;

    // Exact evaluation. Every variable appearing with a nonzero exponent
    // must be assigned; otherwise UnassignedVariableError.
    Rational evaluate(const RationalPoint& point) const;
    // Numeric channel; point must assign all catalog variables.
    double evaluate_double(std::span<const double> point) const;

    // Partial exact substitution: replaces assigned variables, keeps the rest
    // symbolic.
    Polynomial substitute(const RationalPoint& point) const;

    // Primitive integer form: coefficients made coprime integers with a
    // positive leading coefficient. Zero maps to zero.
    Polynomial content_normalized() const;
    // Leading coefficient made 1.
    Polynomial monic() const;

    Polynomial with_order(TermOrder ord) const;

    // Transplants the polynomial onto another catalog. index_map[i] is the
    // new index of old variable i (every used variable must be mapped).
    Polynomial remapped(CatalogPtr new_cat, std::span<const int> index_map) const;

    // Structural equality on the same catalog, insensitive to the carried
    // term order.
    bool operator==(const Polynomial& o) const;
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

  private:
    Polynomial(CatalogPtr cat, TermOrder ord, std::vector<Term> terms)
        : cat_(std::move(cat)), ord_(ord), terms_(std::move(terms)) {}
    void require_compatible(const Polynomial& o) const;
    void require_valid() const;

    CatalogPtr cat_;
    TermOrder ord_;
    std::vector<Term> terms_;
};

}  // namespace crnid

#endif
