#include <random>

#include "crnid/error.hpp"
#include "crnid/poly_text.hpp"
#include "crnid/polynomial.hpp"
#include "doctest.h"

using namespace crnid;

namespace {

CatalogPtr univariate() { return Catalog::make({{"z", VarRole::State, 1}}); }

// x1, p11, k1..k3, y1..y3 in the block order the engine uses.
CatalogPtr ex1_catalog() {
    return Catalog::make({
        {"x1", VarRole::State, 1},
        {"p11", VarRole::Covariance, 1, 1},
        {"k1", VarRole::Rate, 1},
        {"k2", VarRole::Rate, 2},
        {"k3", VarRole::Rate, 3},
        {"y1", VarRole::Slack, 1},
        {"y2", VarRole::Slack, 2},
        {"y3", VarRole::Slack, 3},
    });
}

CatalogPtr two_states() {
    return Catalog::make({{"x1", VarRole::State, 1}, {"x2", VarRole::State, 2}});
}

Polynomial P(const CatalogPtr& cat, const std::string& text) {
    return parse_polynomial(text, cat);
}

struct Rng {
    std::mt19937_64 gen{20240711};
    int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(gen); }
    Rational rational() {
        int num = uniform(-9, 9);
        int den = uniform(1, 4);
        Rational q(num, den);
        q.canonicalize();
        return q;
    }
    Monomial monomial(int nvars, int max_total = 4) {
        Monomial m(nvars);
        int budget = uniform(0, max_total);
        for (int i = 0; i < nvars && budget > 0; ++i) {
            int e = uniform(0, budget);
            m.set_exponent(i, e);
            budget -= e;
        }
        return m;
    }
    Polynomial poly(const CatalogPtr& cat) {
        std::vector<Term> terms;
        int nt = uniform(0, 5);
        for (int t = 0; t < nt; ++t) terms.push_back({rational(), monomial(cat->size())});
        return Polynomial::from_terms(cat, std::move(terms));
    }
    RationalPoint point(int nvars) {
        RationalPoint p(static_cast<size_t>(nvars));
        for (auto& v : p) v = rational();
        return p;
    }
};

}  // namespace

TEST_CASE("add: additive inverse cancels to zero") {
    auto cat = univariate();
    CHECK((P(cat, "z^2 - 1") + P(cat, "1 - z^2")).is_zero());
}

TEST_CASE("add: doubling") {
    auto cat = univariate();
    CHECK(P(cat, "z - 1") + P(cat, "z - 1") == P(cat, "2*z - 2"));
}

TEST_CASE("add: minor cross term from the one-species network") {
    auto cat = ex1_catalog();
    CHECK(P(cat, "x1^2 - 4*p11*x1") + P(cat, "x1^2") == P(cat, "2*x1^2 - 4*p11*x1"));
}

TEST_CASE("mul: difference of squares") {
    auto cat = univariate();
    CHECK(P(cat, "z - 1") * P(cat, "z + 1") == P(cat, "z^2 - 1"));
}

TEST_CASE("mul: unit combination of z^2-1 and z-2") {
    // (2z/3 - 1)(z^2 - 1) + (-2z^2/3 - z/3)(z - 2) = 1
    auto cat = univariate();
    Polynomial lhs = P(cat, "2/3*z - 1") * P(cat, "z^2 - 1") +
                     P(cat, "-2/3*z^2 - 1/3*z") * P(cat, "z - 2");
    CHECK(lhs == P(cat, "1"));
}

TEST_CASE("mul: annihilation by zero") {
    auto cat = univariate();
    Polynomial p = P(cat, "3*z^2 - z + 5");
    CHECK((p * Polynomial::zero(cat)).is_zero());
}

TEST_CASE("derivative of the one-species drift") {
    auto cat = ex1_catalog();
    Polynomial f = P(cat, "k1 - k2*x1 - k3*x1^2");
    CHECK(f.derivative(cat->find("x1")) == P(cat, "-k2 - 2*k3*x1"));
    CHECK(P(cat, "k1").derivative(cat->find("x1")).is_zero());
}

TEST_CASE("derivative of a product of distinct variables") {
    auto cat = two_states();
    CHECK(P(cat, "x1*x2").derivative(0) == P(cat, "x2"));
}

TEST_CASE("evaluate: drift at a concrete rate/state point") {
    auto cat = ex1_catalog();
    Polynomial f = P(cat, "k1 - k2*x1 - k3*x1^2");
    RationalPoint pt(static_cast<size_t>(cat->size()));
    pt[static_cast<size_t>(cat->find("x1"))] = Rational(10);
    pt[static_cast<size_t>(cat->find("k1"))] = Rational(10);
    pt[static_cast<size_t>(cat->find("k2"))] = Rational(1);
    pt[static_cast<size_t>(cat->find("k3"))] = Rational(1);
    CHECK(f.evaluate(pt) == Rational(-100));
}

TEST_CASE("evaluate: polynomial at zero") {
    auto cat = univariate();
    RationalPoint pt{Rational(0)};
    CHECK(P(cat, "1 - z - z^2").evaluate(pt) == Rational(1));
}

TEST_CASE("leading term under lex") {
    TermOrder lex{TermOrderKind::Lex};
    auto cat = univariate();
    Term lt = P(cat, "z^2 - 1").leading_term(lex);
    CHECK(lt.coeff == Rational(1));
    CHECK(lt.mono.exponent(0) == 2);

    // x-block precedes the k-block, so the x1-bearing term leads.
    auto cat1 = ex1_catalog();
    Term lt2 = P(cat1, "k1 - k2*x1").with_order(lex).leading_term();
    CHECK(lt2.coeff == Rational(-1));
    CHECK(lt2.mono.exponent(cat1->find("x1")) == 1);
    CHECK(lt2.mono.exponent(cat1->find("k2")) == 1);

    Term lt3 = P(cat, "5").leading_term(lex);
    CHECK(lt3.coeff == Rational(5));
    CHECK(lt3.mono.is_constant());
}

TEST_CASE("content normalization") {
    auto cat = univariate();
    CHECK(P(cat, "4*z - 2").content_normalized() == P(cat, "2*z - 1"));
    CHECK(P(cat, "-z + 1").content_normalized() == P(cat, "z - 1"));
    CHECK(P(cat, "2/3*z^2 - 4/3").content_normalized() == P(cat, "z^2 - 2"));
    CHECK(Polynomial::zero(cat).content_normalized().is_zero());
}

TEST_CASE("errors: catalog mismatch, unknown variable, unassigned point, zero leading term") {
    auto cat = univariate();
    auto other = two_states();
    CHECK_THROWS_AS(P(cat, "z") + P(other, "x1"), CatalogMismatchError);
    CHECK_THROWS_AS(P(cat, "z").derivative(3), UnknownVariableError);
    RationalPoint empty(1);
    CHECK_THROWS_AS(P(cat, "z + 1").evaluate(empty), UnassignedVariableError);
    CHECK_THROWS_AS(Polynomial::zero(cat).leading_term(), PreconditionError);
    CHECK_THROWS_AS(parse_polynomial("z + w", cat), ParseError);
}

TEST_CASE("property: ring axioms on random polynomials") {
    auto cat = Catalog::make({{"a", VarRole::State, 1},
                              {"b", VarRole::State, 2},
                              {"c", VarRole::State, 3},
                              {"d", VarRole::State, 4}});
    Rng rng;
    for (int i = 0; i < 1000; ++i) {
        Polynomial p = rng.poly(cat), q = rng.poly(cat), r = rng.poly(cat);
        CHECK(p + q == q + p);
        CHECK((p + q) + r == p + (q + r));
        CHECK(p * q == q * p);
        CHECK((p * q) * r == p * (q * r));
        CHECK(p * (q + r) == p * q + p * r);
    }
}

TEST_CASE("property: evaluate is a ring homomorphism") {
    auto cat = Catalog::make(
        {{"a", VarRole::State, 1}, {"b", VarRole::State, 2}, {"c", VarRole::State, 3}});
    Rng rng;
    for (int i = 0; i < 300; ++i) {
        Polynomial p = rng.poly(cat), q = rng.poly(cat), r = rng.poly(cat);
        RationalPoint pt = rng.point(cat->size());
        CHECK((p * q + r).evaluate(pt) == p.evaluate(pt) * q.evaluate(pt) + r.evaluate(pt));
    }
}

TEST_CASE("property: Leibniz rule for the formal derivative") {
    auto cat = Catalog::make(
        {{"a", VarRole::State, 1}, {"b", VarRole::State, 2}, {"c", VarRole::State, 3}});
    Rng rng;
    for (int i = 0; i < 300; ++i) {
        Polynomial p = rng.poly(cat), q = rng.poly(cat);
        int v = rng.uniform(0, cat->size() - 1);
        CHECK((p * q).derivative(v) == p * q.derivative(v) + q * p.derivative(v));
    }
}

TEST_CASE("property: term order laws") {
    Rng rng;
    for (TermOrderKind kind : {TermOrderKind::Lex, TermOrderKind::GrLex, TermOrderKind::GrevLex}) {
        TermOrder ord{kind};
        Monomial one(4);
        for (int i = 0; i < 500; ++i) {
            Monomial a = rng.monomial(4), b = rng.monomial(4), c = rng.monomial(4);
            if (!(a == one)) CHECK(ord.less(one, a));
            if (ord.less(a, b)) CHECK(ord.less(Monomial::mul(a, c), Monomial::mul(b, c)));
            // Totality: exactly one of <, ==, > holds.
            int cmp = ord.compare(a, b);
            CHECK(((cmp == 0) == (a == b)));
        }
    }
}

TEST_CASE("property: content normalization is idempotent") {
    auto cat = Catalog::make({{"a", VarRole::State, 1}, {"b", VarRole::State, 2}});
    Rng rng;
    for (int i = 0; i < 300; ++i) {
        Polynomial p = rng.poly(cat).content_normalized();
        CHECK(p.content_normalized() == p);
    }
}

TEST_CASE("property: print then parse round-trips canonical forms") {
    auto cat = ex1_catalog();
    Rng rng;
    for (int i = 0; i < 300; ++i) {
        Polynomial p = rng.poly(cat);
        CHECK(parse_polynomial(to_string(p), cat) == p);
    }
    // Spot checks including the documented syntax example.
    Polynomial q = P(cat, "3/2*x1^2*p11 - k2");
    CHECK(parse_polynomial(to_string(q), cat) == q);
    CHECK(to_string(Polynomial::zero(cat)) == "0");
}

TEST_CASE("orders sort the same support differently but compare equal") {
    auto cat = two_states();
    Polynomial p = P(cat, "x1^2 + x2^3");
    Polynomial plex = p.with_order(TermOrder{TermOrderKind::Lex});
    CHECK(plex.leading_term().mono.exponent(0) == 2);  // x1^2 leads under lex
    CHECK(p.leading_term().mono.exponent(1) == 3);     // x2^3 leads under grevlex
    CHECK(plex == p);
}
