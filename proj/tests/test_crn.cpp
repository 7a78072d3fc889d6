#include "crnid/crn.hpp"

#include "crnid/error.hpp"
#include "crnid/fixtures.hpp"
#include "crnid/poly_text.hpp"
#include "doctest.h"
#include "helpers.hpp"

using namespace crnid;
using crnid::testing::load_crn;

namespace {

Polynomial P(const CatalogPtr& cat, const std::string& text) {
    return parse_polynomial(text, cat);
}

}  // namespace

TEST_CASE("parsing the one-species network yields S = [1, -1, -1]") {
    CrnModel m = load_crn("r1").model;
    CHECK(m.num_species() == 1);
    CHECK(m.num_reactions() == 3);
    auto S = m.stoichiometry();
    CHECK(S[0] == std::vector<int>{1, -1, -1});
}

TEST_CASE("parsing the antithetic network yields r=5, n=2") {
    CrnModel m = load_crn("r4").model;
    CHECK(m.num_species() == 2);
    CHECK(m.num_reactions() == 5);
}

TEST_CASE("parse errors carry line and column") {
    std::string bad =
        "species: X1\n"
        "reaction k1: 0 -> X9\n";
    try {
        parse_crn(bad);
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line == 2);
        CHECK(e.column == 19);
        CHECK(std::string(e.what()).find("X9") != std::string::npos);
    }

    CHECK_THROWS_AS(parse_crn("species: X1\n"
                              "reaction k1: 0 -> X1\n"
                              "reaction k1: X1 -> 0\n"),
                    ParseError);  // duplicate rate symbol
    CHECK_THROWS_AS(parse_crn("species: X1\n"
                              "reaction k1: X1 -> X1\n"),
                    ParseError);  // no-op reaction
    CHECK_THROWS_AS(parse_crn("species: X1\n"
                              "reaction k1: -2 X1 -> 0\n"),
                    ParseError);  // malformed stoichiometric coefficient
    CHECK_THROWS_AS(parse_crn("species: X1\n"
                              "reaction k1: 0 -> X1\n"
                              "constraints: k9 > 0\n"),
                    ParseError);  // unknown rate in constraints
}

TEST_CASE("propensities of the bundled networks") {
    CrnModel m1 = load_crn("r1").model;
    auto cat1 = make_crn_catalog(m1, 0);
    auto q1 = propensities(m1, cat1);
    REQUIRE(q1.size() == 3);
    CHECK(q1[0] == P(cat1, "k1"));
    CHECK(q1[1] == P(cat1, "k2*x1"));
    CHECK(q1[2] == P(cat1, "k3*x1^2"));

    CrnModel m4 = load_crn("r4").model;
    auto cat4 = make_crn_catalog(m4, 0);
    CHECK(propensities(m4, cat4)[4] == P(cat4, "k5*x1*x2"));
}

TEST_CASE("drift of the bundled networks") {
    CrnModel m1 = load_crn("r1").model;
    auto cat1 = make_crn_catalog(m1, 0);
    auto f1 = drift(m1, cat1);
    REQUIRE(f1.size() == 1);
    CHECK(f1[0] == P(cat1, "k1 - k2*x1 - k3*x1^2"));

    CrnModel m3 = load_crn("r3").model;
    auto cat3 = make_crn_catalog(m3, 0);
    auto f3 = drift(m3, cat3);
    CHECK(f3[0] == P(cat3, "k1 - k2*x1"));
    CHECK(f3[1] == P(cat3, "k2*x1 - k3*x2"));

    CrnModel m4 = load_crn("r4").model;
    auto cat4 = make_crn_catalog(m4, 0);
    auto f4 = drift(m4, cat4);
    CHECK(f4[0] == P(cat4, "k1 - k2*x1 - k5*x1*x2"));
    CHECK(f4[1] == P(cat4, "k3 - k4*x2 - k5*x1*x2"));
}

TEST_CASE("diffusion of the bundled networks") {
    CrnModel m1 = load_crn("r1").model;
    auto cat1 = make_crn_catalog(m1, 0);
    PolyMatrix Q1 = diffusion(m1, cat1);
    CHECK(Q1.at(0, 0) == P(cat1, "k1 + k2*x1 + k3*x1^2"));

    CrnModel m3 = load_crn("r3").model;
    auto cat3 = make_crn_catalog(m3, 0);
    PolyMatrix Q3 = diffusion(m3, cat3);
    CHECK(Q3.at(0, 0) == P(cat3, "k1 + k2*x1"));
    CHECK(Q3.at(0, 1) == P(cat3, "-k2*x1"));
    CHECK(Q3.at(1, 0) == P(cat3, "-k2*x1"));
    CHECK(Q3.at(1, 1) == P(cat3, "k2*x1 + k3*x2"));

    CrnModel m4 = load_crn("r4").model;
    auto cat4 = make_crn_catalog(m4, 0);
    CHECK(diffusion(m4, cat4).at(0, 1) == P(cat4, "k5*x1*x2"));
}

TEST_CASE("stationary matrices reproduce the reference fixtures exactly") {
    for (const char* name :
         {"ex1_A", "ex3_A", "ex4_A", "ex5_A", "ex6_A", "ex7_A", "ex8_A", "ex9_A",
          "fb_example_A"}) {
        const auto* fx = fixtures::find_matrix_fixture(name);
        REQUIRE(fx != nullptr);
        CrnModel m = load_crn(fx->crn).model;
        StationaryMatrix sm = stationary_matrix(m);
        INFO("fixture ", name);
        REQUIRE(sm.A.rows() == fx->rows);
        REQUIRE(sm.A.cols() == fx->cols);
        CHECK(sm.A == fixtures::build(*fx, sm.A.catalog(), sm.A.order()));
    }
}

TEST_CASE("A*k reconstructs the stacked stationary residuals") {
    for (const char* stem : {"r1", "r3", "r4", "r5", "r6", "r7", "r8", "r9", "feedback"}) {
        CrnModel m = load_crn(stem).model;
        auto cat = make_crn_catalog(m, 0);
        StationaryMatrix sm = stationary_matrix(m, cat);

        std::vector<Polynomial> k;
        for (int i = 1; i <= m.num_reactions(); ++i)
            k.push_back(Polynomial::variable(cat, rate_var(cat, i)));
        std::vector<Polynomial> reconstructed = sm.A.apply(k);

        std::vector<Polynomial> residuals = drift(m, cat);
        {
            std::vector<int> xv;
            for (int j = 1; j <= m.num_species(); ++j) xv.push_back(state_var(cat, j));
            auto J = jacobian(residuals, xv);
            auto P_ = symbolic_covariance(cat, m.num_species());
            auto Q = diffusion(m, cat);
            for (Polynomial& l : lyapunov_residual(J, P_, Q)) residuals.push_back(std::move(l));
        }
        REQUIRE(reconstructed.size() == residuals.size());
        for (size_t i = 0; i < residuals.size(); ++i) {
            INFO(stem, " row ", i);
            CHECK(reconstructed[i] == residuals[i]);
        }
    }
}

TEST_CASE("stationary matrix entries are free of rate and slack variables") {
    for (const char* stem : {"r1", "r4", "r6", "feedback"}) {
        CrnModel m = load_crn(stem).model;
        auto cat = make_crn_catalog(m, 2);
        StationaryMatrix sm = stationary_matrix(m, cat);
        for (int r = 0; r < sm.A.rows(); ++r)
            for (int c = 0; c < sm.A.cols(); ++c) {
                CHECK(sm.A.at(r, c).degree_in_role(VarRole::Rate) == 0);
                CHECK(sm.A.at(r, c).degree_in_role(VarRole::Slack) == 0);
            }
    }
}

TEST_CASE("the Lyapunov residual matrix is symmetric (fold check, n <= 3)") {
    for (const char* stem : {"r3", "r6", "r7"}) {
        CrnModel m = load_crn(stem).model;
        auto cat = make_crn_catalog(m, 0);
        auto f = drift(m, cat);
        std::vector<int> xv;
        for (int j = 1; j <= m.num_species(); ++j) xv.push_back(state_var(cat, j));
        PolyMatrix J = jacobian(f, xv);
        PolyMatrix Pm = symbolic_covariance(cat, m.num_species());
        PolyMatrix JP = J * Pm;
        PolyMatrix R = JP + JP.transposed() + diffusion(m, cat);
        for (int a = 0; a < R.rows(); ++a)
            for (int b = a + 1; b < R.cols(); ++b) CHECK(R.at(a, b) == R.at(b, a));
    }
}

TEST_CASE("print then parse round-trips the parsed model") {
    for (const char* stem : {"r1", "r1_mixed", "r8", "feedback_extrinsic"}) {
        ParsedCrn parsed = load_crn(stem);
        ParsedCrn again = parse_crn(to_text(parsed), parsed.model.source);
        CHECK(again.model.species == parsed.model.species);
        REQUIRE(again.model.num_reactions() == parsed.model.num_reactions());
        for (int i = 0; i < parsed.model.num_reactions(); ++i) {
            CHECK(again.model.reactions[size_t(i)].reactant ==
                  parsed.model.reactions[size_t(i)].reactant);
            CHECK(again.model.reactions[size_t(i)].product ==
                  parsed.model.reactions[size_t(i)].product);
            CHECK(again.model.reactions[size_t(i)].rate_symbol ==
                  parsed.model.reactions[size_t(i)].rate_symbol);
        }
        CHECK(again.constraints.signs == parsed.constraints.signs);
        CHECK(again.constraints.exactly_one == parsed.constraints.exactly_one);
        CHECK(again.extrinsic.has_value() == parsed.extrinsic.has_value());
        if (parsed.extrinsic) {
            CHECK(again.extrinsic->points == parsed.extrinsic->points);
            CHECK(again.extrinsic->weights == parsed.extrinsic->weights);
            CHECK(again.extrinsic->alpha == parsed.extrinsic->alpha);
            CHECK(again.extrinsic->gamma == parsed.extrinsic->gamma);
        }
    }
}

TEST_CASE("conservation sanity: a pure conversion reaction conserves total mass") {
    ParsedCrn p = parse_crn("species: X1 X2\nreaction k1: X1 -> X2\n");
    auto cat = make_crn_catalog(p.model, 0);
    auto f = drift(p.model, cat);
    CHECK((f[0] + f[1]).is_zero());
}

TEST_CASE("feedback row-1 residual vanishes at the reference stationary point") {
    CrnModel m = load_crn("feedback").model;
    auto cat = make_crn_catalog(m, 0);
    StationaryMatrix sm = stationary_matrix(m, cat);

    std::vector<Polynomial> k;
    for (int i = 1; i <= 6; ++i) k.push_back(Polynomial::variable(cat, rate_var(cat, i)));
    Polynomial row1 = sm.A.apply(k)[0];

    RationalPoint pt(static_cast<size_t>(cat->size()));
    pt[size_t(state_var(cat, 1))] = Rational(10);
    pt[size_t(state_var(cat, 2))] = Rational(10) / 11;
    pt[size_t(cov_var(cat, 1, 1))] = Rational(10);
    pt[size_t(cov_var(cat, 1, 2))] = Rational(0);
    pt[size_t(cov_var(cat, 2, 2))] = Rational(10) / 11;
    Rational kval[] = {Rational(10), Rational(1), Rational(10),
                       Rational(1),  Rational(1), Rational(10)};
    for (int i = 1; i <= 6; ++i) pt[size_t(rate_var(cat, i))] = kval[i - 1];
    CHECK(row1.evaluate(pt) == Rational(0));
}
