#include <algorithm>
#include <random>

#include "crnid/error.hpp"
#include "crnid/groebner.hpp"
#include "crnid/poly_text.hpp"
#include "doctest.h"

using namespace crnid;

namespace {

const TermOrder kGrevlex{TermOrderKind::GrevLex};

CatalogPtr univariate() { return Catalog::make({{"z", VarRole::State, 1}}); }

CatalogPtr xy() {
    return Catalog::make({{"x", VarRole::State, 1}, {"y", VarRole::State, 2}});
}

CatalogPtr xyz() {
    return Catalog::make(
        {{"x", VarRole::State, 1}, {"y", VarRole::State, 2}, {"z", VarRole::State, 3}});
}

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

Polynomial P(const CatalogPtr& cat, const std::string& text) {
    return parse_polynomial(text, cat);
}

std::vector<Polynomial> parse_all(const CatalogPtr& cat, const std::vector<std::string>& texts) {
    std::vector<Polynomial> out;
    out.reserve(texts.size());
    for (const auto& t : texts) out.push_back(P(cat, t));
    return out;
}

// The eight generators certifying the one-species birth/death/dimerization
// network over all-positive rates.
std::vector<Polynomial> ex1_ideal(const CatalogPtr& cat) {
    return parse_all(cat, {
                              "k1*y1^2 - 1",
                              "k2*y2^2 - 1",
                              "k3*y3^2 - 1",
                              "k1 - k2*x1 - k3*x1^2",
                              "k1 - 2*p11*k2 + x1*k2 - 4*p11*x1*k3 + x1^2*k3",
                              "2*x1 - 2*p11",
                              "2*x1^2 - 4*p11*x1",
                              "2*p11*x1^2",
                          });
}

bool same_elements(const GroebnerBasis& a, const GroebnerBasis& b) {
    if (a.elements.size() != b.elements.size()) return false;
    for (size_t i = 0; i < a.elements.size(); ++i)
        if (!(a.elements[i] == b.elements[i])) return false;
    return true;
}

}  // namespace

TEST_CASE("normal_form fixtures") {
    auto cat = univariate();
    std::vector<Polynomial> G = {P(cat, "z - 1")};
    CHECK(normal_form(P(cat, "z^3 - 1"), G, kGrevlex).is_zero());
    CHECK(normal_form(P(cat, "z"), G, kGrevlex) == P(cat, "1"));
    std::vector<Polynomial> G2 = {P(cat, "z - 2")};
    CHECK(normal_form(P(cat, "1"), G2, kGrevlex) == P(cat, "1"));
}

TEST_CASE("normal_form leaves no reducible monomial and stays in the coset") {
    auto cat = xy();
    std::vector<Polynomial> G = {P(cat, "x*y - 1"), P(cat, "y^2 - 1")};
    Polynomial f = P(cat, "x^2*y + x*y^2 + y^2");
    Polynomial r = normal_form(f, G, kGrevlex);
    for (const Term& t : r.terms())
        for (const Polynomial& g : G)
            CHECK(!Monomial::divides(g.leading_term().mono, t.mono));
    // f - r must reduce to zero against a full basis.
    auto gb = buchberger(IdealGenerators::from(cat, G), kGrevlex).basis;
    CHECK(normal_form(f - r, gb.elements, kGrevlex).is_zero());
}

TEST_CASE("s_polynomial fixtures") {
    auto cat = univariate();
    Polynomial f = P(cat, "z^2 - 1"), g = P(cat, "z - 1");
    // Independent oracle: z*(z-1) - (z^2-1), canonicalized.
    Polynomial direct = (P(cat, "z") * g - f).content_normalized();
    CHECK(direct == P(cat, "z - 1"));
    CHECK(s_polynomial(f, g, kGrevlex) == direct);
    CHECK(s_polynomial(f, f, kGrevlex).is_zero());

    auto cat2 = xy();
    CHECK(s_polynomial(P(cat2, "x"), P(cat2, "y"), kGrevlex).is_zero());
    CHECK_THROWS_AS(s_polynomial(Polynomial::zero(cat), f, kGrevlex), PreconditionError);
}

TEST_CASE("buchberger on the two univariate ideals") {
    auto cat = univariate();

    auto res1 = buchberger(IdealGenerators::from(cat, {P(cat, "z^2 - 1"), P(cat, "z - 1")}),
                           kGrevlex);
    REQUIRE(res1.status == GbStatus::Complete);
    GroebnerBasis red1 = reduce_basis(res1.basis);
    REQUIRE(red1.elements.size() == 1);
    CHECK(red1.elements[0] == P(cat, "z - 1"));

    auto res2 = buchberger(IdealGenerators::from(cat, {P(cat, "z^2 - 1"), P(cat, "z - 2")}),
                           kGrevlex);
    CHECK(res2.basis.is_unit());

    auto res3 = buchberger(IdealGenerators::from(cat, {P(cat, "1")}), kGrevlex);
    CHECK(res3.basis.is_unit());
}

TEST_CASE("reduce_basis fixtures") {
    auto cat = univariate();
    GroebnerBasis b1{cat, kGrevlex, {P(cat, "z - 1"), P(cat, "z^2 - 1")}, false, {}};
    GroebnerBasis r1 = reduce_basis(b1);
    REQUIRE(r1.elements.size() == 1);
    CHECK(r1.elements[0] == P(cat, "z - 1"));
    CHECK(r1.reduced);

    GroebnerBasis b2{cat, kGrevlex, {P(cat, "2*z - 2")}, false, {}};
    CHECK(reduce_basis(b2).elements[0] == P(cat, "z - 1"));

    GroebnerBasis b3{cat, kGrevlex, {P(cat, "1"), P(cat, "z - 5")}, false, {}};
    GroebnerBasis r3 = reduce_basis(b3);
    CHECK(r3.is_unit());
}

TEST_CASE("is_trivial fixtures") {
    auto cat = univariate();
    auto t1 = is_trivial(IdealGenerators::from(cat, {P(cat, "z^2 - 1"), P(cat, "z - 1")}),
                         kGrevlex);
    REQUIRE(t1.kind == TrivialityResult::Kind::NotTrivial);
    REQUIRE(t1.basis.has_value());
    REQUIRE(t1.basis->elements.size() == 1);
    CHECK(t1.basis->elements[0] == P(cat, "z - 1"));

    auto cat2 = xy();
    auto t2 = is_trivial(IdealGenerators::from(cat2, {P(cat2, "x - 1")}), kGrevlex);
    CHECK(t2.kind == TrivialityResult::Kind::NotTrivial);

    auto cat1 = ex1_catalog();
    auto t3 = is_trivial(IdealGenerators::from(cat1, ex1_ideal(cat1)), kGrevlex);
    CHECK(t3.kind == TrivialityResult::Kind::Trivial);
}

TEST_CASE("buchberger postcondition: S-polynomials of the output reduce to zero") {
    auto check_basis = [](const GroebnerBasis& gb) {
        for (size_t i = 0; i < gb.elements.size(); ++i)
            for (size_t j = i + 1; j < gb.elements.size(); ++j) {
                Polynomial s = s_polynomial(gb.elements[i], gb.elements[j], gb.order);
                if (!s.is_zero()) CHECK(normal_form(s, gb.elements, gb.order).is_zero());
            }
    };
    auto cat = xyz();
    auto res = buchberger(IdealGenerators::from(
                              cat, parse_all(cat, {"x + y + z", "x*y + y*z + z*x", "x*y*z - 1"})),
                          kGrevlex);
    REQUIRE(res.status == GbStatus::Complete);
    check_basis(res.basis);
    check_basis(reduce_basis(res.basis));

    auto cat2 = xy();
    auto res2 = buchberger(
        IdealGenerators::from(cat2, parse_all(cat2, {"x^2 + y^2 - 1", "x*y - 1"})), kGrevlex);
    check_basis(res2.basis);
}

TEST_CASE("reduced basis is unique under generator shuffles and duplication") {
    std::mt19937_64 rng(7);
    struct Fixture {
        CatalogPtr cat;
        std::vector<std::string> gens;
    };
    std::vector<Fixture> fixtures = {
        {univariate(), {"z^2 - 1", "z - 1"}},
        {xy(), {"x^2 + y^2 - 1", "x*y - 1"}},
        {xyz(), {"x + y + z", "x*y + y*z + z*x", "x*y*z - 1"}},
        {ex1_catalog(),
         {"k1*y1^2 - 1", "k2*y2^2 - 1", "k3*y3^2 - 1", "k1 - k2*x1 - k3*x1^2",
          "k1 - 2*p11*k2 + x1*k2 - 4*p11*x1*k3 + x1^2*k3", "2*x1 - 2*p11", "2*x1^2 - 4*p11*x1",
          "2*p11*x1^2"}},
    };
    for (const Fixture& fx : fixtures) {
        std::vector<Polynomial> gens = parse_all(fx.cat, fx.gens);
        GroebnerBasis reference =
            reduce_basis(buchberger(IdealGenerators::from(fx.cat, gens), kGrevlex).basis);
        for (int trial = 0; trial < 20; ++trial) {
            std::vector<Polynomial> shuffled = gens;
            // Duplicate a random generator, then permute.
            shuffled.push_back(shuffled[rng() % shuffled.size()]);
            std::shuffle(shuffled.begin(), shuffled.end(), rng);
            BuchbergerOptions opts;
            opts.early_unit_abort = false;
            GroebnerBasis got = reduce_basis(
                buchberger(IdealGenerators::from(fx.cat, shuffled), kGrevlex, opts).basis);
            CHECK(same_elements(reference, got));
        }
    }
}

TEST_CASE("ideal membership soundness: random combinations reduce to zero") {
    auto cat = xy();
    std::vector<Polynomial> gens = parse_all(cat, {"x^2 + y^2 - 1", "x*y - 1"});
    GroebnerBasis gb = buchberger(IdealGenerators::from(cat, gens), kGrevlex).basis;

    std::mt19937_64 rng(11);
    auto rand_poly = [&]() {
        std::vector<Term> ts;
        int nt = static_cast<int>(rng() % 4);
        for (int t = 0; t < nt; ++t) {
            Monomial m(cat->size());
            m.set_exponent(0, static_cast<int>(rng() % 3));
            m.set_exponent(1, static_cast<int>(rng() % 3));
            ts.push_back({Rational(static_cast<long>(rng() % 19) - 9), m});
        }
        return Polynomial::from_terms(cat, std::move(ts));
    };
    for (int i = 0; i < 50; ++i) {
        Polynomial combo = Polynomial::zero(cat);
        for (const Polynomial& g : gens) combo = combo + rand_poly() * g;
        if (combo.is_zero()) continue;
        CHECK(normal_form(combo, gb.elements, kGrevlex).is_zero());
    }
}

TEST_CASE("triviality is term-order independent") {
    struct Fixture {
        CatalogPtr cat;
        std::vector<std::string> gens;
        bool trivial;
    };
    auto cat1 = univariate();
    auto cat2 = xy();
    auto cat3 = xyz();
    std::vector<Fixture> fixtures = {
        {cat1, {"z^2 - 1", "z - 1"}, false},
        {cat1, {"z^2 - 1", "z - 2"}, true},
        {cat2, {"x - 1"}, false},
        {cat2, {"x*y - 1", "x"}, true},
        {cat3, {"x + y + z", "x*y + y*z + z*x", "x*y*z - 1"}, false},
        {cat3, {"x^2 - y", "y^2 - z", "z^2 - x", "x*y*z - 1", "x + y + z"}, true},
    };
    for (const Fixture& fx : fixtures) {
        for (TermOrderKind kind :
             {TermOrderKind::Lex, TermOrderKind::GrLex, TermOrderKind::GrevLex}) {
            auto res = is_trivial(IdealGenerators::from(fx.cat, parse_all(fx.cat, fx.gens)),
                                  TermOrder{kind});
            CHECK(res.kind == (fx.trivial ? TrivialityResult::Kind::Trivial
                                          : TrivialityResult::Kind::NotTrivial));
        }
    }
}

TEST_CASE("early unit abort does not change the verdict") {
    auto cat = ex1_catalog();
    for (bool abort_early : {true, false}) {
        BuchbergerOptions opts;
        opts.early_unit_abort = abort_early;
        auto res = is_trivial(IdealGenerators::from(cat, ex1_ideal(cat)), kGrevlex, opts);
        CHECK(res.kind == TrivialityResult::Kind::Trivial);
    }
    auto cat2 = univariate();
    for (bool abort_early : {true, false}) {
        BuchbergerOptions opts;
        opts.early_unit_abort = abort_early;
        auto res = is_trivial(
            IdealGenerators::from(cat2, parse_all(cat2, {"z^2 - 1", "z - 1"})), kGrevlex, opts);
        CHECK(res.kind == TrivialityResult::Kind::NotTrivial);
        CHECK(res.basis->elements[0] == P(cat2, "z - 1"));
    }
}

TEST_CASE("budgets trip loudly instead of truncating") {
    auto cat = xyz();
    auto gens = IdealGenerators::from(
        cat, parse_all(cat, {"x + y + z", "x*y + y*z + z*x", "x*y*z - 1"}));

    BuchbergerOptions tight_pairs;
    tight_pairs.max_pairs = 1;
    auto circle = IdealGenerators::from(xy(), parse_all(xy(), {"x^2 + y^2 - 1", "x*y - 1"}));
    auto r1 = is_trivial(circle, kGrevlex, tight_pairs);
    CHECK(r1.kind == TrivialityResult::Kind::BudgetExhausted);
    CHECK(r1.engine_status == GbStatus::PairBudget);

    BuchbergerOptions tight_degree;
    tight_degree.max_total_degree = 2;
    auto r2 = is_trivial(gens, kGrevlex, tight_degree);
    CHECK(r2.kind == TrivialityResult::Kind::BudgetExhausted);
    CHECK(r2.engine_status == GbStatus::DegreeBudget);
}

TEST_CASE("incremental generator feeding matches the one-shot run") {
    auto cat = xy();
    std::vector<Polynomial> gens = parse_all(cat, {"x^2 + y^2 - 1", "x*y - 1"});

    BuchbergerEngine eng(cat, kGrevlex, {});
    eng.add_generators(std::span(gens.data(), 1));
    REQUIRE(eng.run() == GbStatus::Complete);
    eng.add_generators(std::span(gens.data() + 1, 1));
    REQUIRE(eng.run() == GbStatus::Complete);

    GroebnerBasis incremental = reduce_basis(eng.snapshot());
    GroebnerBasis oneshot = reduce_basis(buchberger(IdealGenerators::from(cat, gens), kGrevlex).basis);
    CHECK(same_elements(incremental, oneshot));
}

TEST_CASE("cofactor audit: the unit certificate multiplies out to 1") {
    auto cat = univariate();
    std::vector<Polynomial> gens = parse_all(cat, {"z^2 - 1", "z - 2"});
    BuchbergerOptions opts;
    opts.track_cofactors = true;
    BuchbergerEngine eng(cat, kGrevlex, opts);
    eng.add_generators(gens);
    GbStatus st = eng.run();
    REQUIRE((st == GbStatus::UnitFound || st == GbStatus::Complete));
    REQUIRE(eng.unit_found());

    auto cofs = eng.cofactors();
    REQUIRE(!cofs.empty());
    // The recorded basis contains the constant 1; its cofactor row must
    // recombine the generators into exactly 1.
    bool verified = false;
    for (const auto& lam : cofs) {
        REQUIRE(lam.size() == gens.size());
        Polynomial acc = Polynomial::zero(cat);
        for (size_t i = 0; i < gens.size(); ++i) acc = acc + lam[i] * gens[i];
        if (acc == P(cat, "1")) verified = true;
    }
    CHECK(verified);
}

TEST_CASE("cofactors stay exact on a non-trivial ideal") {
    auto cat = xy();
    std::vector<Polynomial> gens = parse_all(cat, {"x^2 + y^2 - 1", "x*y - 1"});
    BuchbergerOptions opts;
    opts.track_cofactors = true;
    BuchbergerEngine eng(cat, kGrevlex, opts);
    eng.add_generators(gens);
    REQUIRE(eng.run() == GbStatus::Complete);
    GroebnerBasis gb = eng.snapshot();
    auto cofs = eng.cofactors();
    REQUIRE(cofs.size() == gb.elements.size());
    for (size_t e = 0; e < gb.elements.size(); ++e) {
        Polynomial acc = Polynomial::zero(cat);
        for (size_t i = 0; i < gens.size(); ++i) acc = acc + cofs[e][i] * gens[i];
        CHECK(acc == gb.elements[e]);
    }
}

TEST_CASE("parallel batch reduction agrees with the single-threaded run") {
    auto cat = xyz();
    auto gens = IdealGenerators::from(
        cat, parse_all(cat, {"x^2 - y", "y^2 - z", "z^2 - x", "x + y + z"}));
    BuchbergerOptions seq;
    BuchbergerOptions par;
    par.threads = 4;
    GroebnerBasis a = reduce_basis(buchberger(gens, kGrevlex, seq).basis);
    GroebnerBasis b = reduce_basis(buchberger(gens, kGrevlex, par).basis);
    CHECK(same_elements(a, b));
}

TEST_CASE("empty or zero generator lists are rejected") {
    auto cat = univariate();
    CHECK_THROWS_AS(buchberger(IdealGenerators::from(cat, {}), kGrevlex), PreconditionError);
    CHECK_THROWS_AS(
        buchberger(IdealGenerators::from(cat, {Polynomial::zero(cat)}), kGrevlex),
        PreconditionError);
    std::vector<Polynomial> empty_list;
    CHECK_THROWS_AS(normal_form(P(cat, "z"), empty_list, kGrevlex), PreconditionError);
}
