#include "doctest.h"
#include "vknot/egc.hpp"
#include "vknot/fixtures.hpp"
#include "util.hpp"
#include "vknot/moves.hpp"

#include <random>

using namespace vknot;

TEST_SUITE("egc") {

TEST_CASE("parse fixtures") {
    ExtendedGaussCode trefoil = parse_egc("O1+,U2+,O3+,U1+,O2+,U3+");
    CHECK(trefoil.components.size() == 1);
    CHECK(trefoil.components[0].size() == 6);

    ExtendedGaussCode two = parse_egc("O1+,V9+ ; U1+,V9-");
    CHECK(two.components.size() == 2);
    int classical = 0, virt = 0;
    for (const auto& comp : two.components)
        for (const auto& p : comp) (p.classical() ? classical : virt)++;
    CHECK(classical == 2);
    CHECK(virt == 2);

    ExtendedGaussCode unknot = parse_egc("~");
    CHECK(unknot.components.size() == 1);
    CHECK(unknot.components[0].empty());

    ExtendedGaussCode mixed = parse_egc("~;O1+,U1+");
    CHECK(mixed.components.size() == 2);
}

TEST_CASE("parse errors carry positions and ids") {
    CHECK_THROWS_AS(parse_egc("O1+,O2+,U1+,V9+,U2+"), ParseError);  // virtual id once
    CHECK_THROWS_AS(parse_egc("O1+,U2+"), ParseError);              // ids seen once
    CHECK_THROWS_AS(parse_egc("O1+,U1+,O1+"), ParseError);          // three times
    CHECK_THROWS_AS(parse_egc("O1+,U1-"), ParseError);              // classical sign mismatch
    CHECK_THROWS_AS(parse_egc("V3+,V3+"), ParseError);              // equal virtual signs
    CHECK_THROWS_AS(parse_egc("O1+,U1+,V1+,V1-"), ParseError);      // shared id namespace
    CHECK_THROWS_AS(parse_egc("O1"), ParseError);                   // missing sign
    CHECK_THROWS_AS(parse_egc("X1+"), ParseError);                  // bad kind
    CHECK_THROWS_AS(parse_egc(""), ParseError);
    CHECK_THROWS_AS(parse_egc("O1+,,U1+"), ParseError);

    try {
        parse_egc("O1+,U2$");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.position > 0);
    }
}

TEST_CASE("serialize starts at the minimal passage token") {
    CHECK(serialize_egc(parse_egc("U1+,O2+,U3+,O1+,U2+,O3+")) == "O1+,U2+,O3+,U1+,O2+,U3+");
    CHECK(serialize_egc(parse_egc("~")) == "~");
    CHECK(serialize_egc(parse_egc("V9- , V9+")) == "V9+,V9-");
}

TEST_CASE("whitespace is ignored") {
    CHECK(parse_egc(" O1+ ,\tU2+ ; U1+ , O2+\n") == parse_egc("O1+,U2+;U1+,O2+"));
}

TEST_CASE("fixtures are serialization fixed points") {
    for (const char* f : fixtures::ALL) CHECK(serialize_egc(parse_egc(f)) == f);
}

TEST_CASE("parse-serialize-parse equals parse on random codes") {
    std::mt19937_64 rng(7);
    for (const char* f : {fixtures::VIRTUAL_TREFOIL, fixtures::HOPF, fixtures::UNKNOT}) {
        ExtendedGaussCode code = parse_egc(f);
        for (int step = 0; step < 40; ++step) {
            code = testutil::capped_step(code, rng);
            ExtendedGaussCode reparsed = parse_egc(serialize_egc(code));
            CHECK(serialize_egc(reparsed) == serialize_egc(code));
            CHECK(validate_basic(code).ok());
        }
    }
}

TEST_CASE("validate_basic reports instead of throwing") {
    ExtendedGaussCode bad;
    bad.components.push_back({Passage::classic(1, Role::Over, 1)});
    ValidationReport r = validate_basic(bad);
    REQUIRE_FALSE(r.ok());
    CHECK(r.errors[0].check == "pairing");
}

}  // TEST_SUITE
