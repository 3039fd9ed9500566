#include "doctest.h"
#include "vknot/fixtures.hpp"
#include "vknot/invariants.hpp"
#include "util.hpp"
#include "vknot/moves.hpp"

#include <random>

using namespace vknot;

namespace {

Diagram diag(const char* code) { return long_arcs(parse_egc(code)); }

LaurentPoly x_power(Int coeff, int k) { return LaurentPoly::monomial(coeff, k, 0); }
LaurentPoly y_power(Int coeff, int k) { return LaurentPoly::monomial(coeff, 0, k); }

}  // namespace

TEST_SUITE("numeric-invariants") {

TEST_CASE("writhe") {
    CHECK(writhe(diag(fixtures::TREFOIL)) == 3);
    CHECK(writhe(diag(fixtures::UNKNOT)) == 0);
    CHECK(writhe(diag(fixtures::VIRTUAL_TREFOIL)) == 2);
    CHECK(writhe(diag("O1+,O2-,U2-,U1+")) == 0);
}

TEST_CASE("linking and wriggle numbers") {
    Diagram vhopf = diag(fixtures::VIRTUAL_HOPF);
    CHECK(pairwise_wriggle(vhopf, 0, 1) == 1);
    CHECK(pairwise_wriggle(vhopf, 1, 0) == -1);
    CHECK(pairwise_wriggle(vhopf, 0, 0) == 0);

    Diagram hopf = diag(fixtures::HOPF);
    for (int i : {0, 1}) {
        LinkingNumbers lk = linking_numbers(hopf, i);
        CHECK(lk.over == 1);
        CHECK(lk.under == 1);
        CHECK(wriggle(hopf, i) == 0);
    }

    // single-component diagrams always have wriggle zero
    for (const char* f : {fixtures::UNKNOT, fixtures::TREFOIL, fixtures::VIRTUAL_TREFOIL})
        CHECK(wriggle(diag(f), 0) == 0);

    CHECK_THROWS_AS(linking_numbers(hopf, 5), std::invalid_argument);
}

TEST_CASE("wriggle report identities hold on the fixtures and descendants") {
    // wriggle_report itself asserts the row-sum and cocycle identities
    for (const char* f : fixtures::ALL) {
        WriggleReport r = wriggle_report(diag(f));
        const int n = static_cast<int>(r.pairwise.size());
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) CHECK(r.pairwise[i][j] == -r.pairwise[j][i]);
    }
    WriggleReport vh = wriggle_report(diag(fixtures::VIRTUAL_HOPF));
    CHECK(vh.pairwise == std::vector<std::vector<Int>>{{0, 1}, {-1, 0}});

    std::mt19937_64 rng(41);
    ExtendedGaussCode code = parse_egc(fixtures::VIRTUAL_HOPF);
    for (int step = 0; step < 60; ++step) {
        code = testutil::capped_step(code, rng);
        WriggleReport r = wriggle_report(long_arcs(code));  // throws on identity violations
        CHECK(r.pairwise == vh.pairwise);
    }
}

TEST_CASE("index polynomial values") {
    CHECK(index_polynomial(diag(fixtures::UNKNOT)).is_zero());
    CHECK(index_polynomial(diag(fixtures::TREFOIL)).is_zero());
    CHECK(index_polynomial(diag(fixtures::HOPF)).is_zero());

    LaurentPoly q_vt = index_polynomial(diag(fixtures::VIRTUAL_TREFOIL));
    CHECK(q_vt == x_power(1, 1) + x_power(1, -1) + x_power(-2, 0));

    LaurentPoly q_vh = index_polynomial(diag(fixtures::VIRTUAL_HOPF));
    CHECK(q_vh == y_power(1, -1) + y_power(-1, 0));
}

TEST_CASE("Q vanishes at (1,1)") {
    std::mt19937_64 rng(43);
    for (const char* f : fixtures::ALL) {
        ExtendedGaussCode code = parse_egc(f);
        for (int step = 0; step < 25; ++step) {
            code = testutil::capped_step(code, rng);
            LaurentPoly q = index_polynomial(long_arcs(code));
            Int sum = 0;
            for (const auto& [e, c] : q.terms()) sum += c;
            CHECK(sum == 0);
        }
    }
}

TEST_CASE("flipping the positive-half convention inverts x") {
    // with halves swapped the index of every self-crossing negates (the two
    // halves sum to the full component, whose ci evaluation is zero on a
    // knot), so Q(x, y) becomes Q(x^-1, y)
    for (const char* f : {fixtures::VIRTUAL_TREFOIL, fixtures::TREFOIL}) {
        Diagram d = diag(f);
        Cochain ci = canonical_index_cocycle(d);
        LaurentPoly alt;
        for (const CrossingInfo& x : d.crossings) {
            auto [pos, neg] = halves(d, x.label);
            alt += LaurentPoly::monomial(x.sign, static_cast<int>(evaluate(ci, neg)), 0);
            alt -= LaurentPoly::constant(x.sign);
        }
        LaurentPoly q = index_polynomial(d);
        LaurentPoly q_inverted;
        for (const auto& [e, c] : q.terms()) q_inverted += LaurentPoly::monomial(c, -e.first, e.second);
        CHECK(alt == q_inverted);
    }
}

TEST_CASE("Q is invariant under random moves") {
    std::mt19937_64 rng(47);
    for (const char* f : fixtures::ALL) {
        LaurentPoly q0 = index_polynomial(diag(f));
        ExtendedGaussCode code = parse_egc(f);
        for (int step = 0; step < 40; ++step) {
            code = testutil::capped_step(code, rng);
            CHECK(index_polynomial(long_arcs(code)) == q0);
        }
    }
}

}  // TEST_SUITE
