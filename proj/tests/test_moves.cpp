#include "doctest.h"
#include "vknot/biquandle.hpp"
#include "vknot/fixtures.hpp"
#include "vknot/index.hpp"
#include "vknot/invariants.hpp"
#include "util.hpp"
#include "vknot/moves.hpp"

#include <random>

using namespace vknot;

namespace {

Diagram diag(const ExtendedGaussCode& c) { return long_arcs(c); }

template <typename Kind>
int count_kind(const std::vector<Move>& moves) {
    int n = 0;
    for (const Move& m : moves)
        if (std::holds_alternative<Kind>(m)) ++n;
    return n;
}

template <typename Kind>
std::vector<Kind> of_kind(const std::vector<Move>& moves) {
    std::vector<Kind> out;
    for (const Move& m : moves)
        if (const Kind* k = std::get_if<Kind>(&m)) out.push_back(*k);
    return out;
}

// a three-strand positive braid closure: the one code in the corpus with a
// valid triangle
const char* kBraidClosure = "O1+,O2+,U2+,U3+;U1+,O3+";

}  // namespace

TEST_SUITE("moves") {

TEST_CASE("enumerate on the unknot lists only insertions") {
    auto moves = enumerate_moves(parse_egc(fixtures::UNKNOT));
    CHECK(count_kind<R1Add>(moves) == 4);
    CHECK(count_kind<VPairAdd>(moves) == 2);
    CHECK(count_kind<R2Add>(moves) == 4);  // one gap pair x parallel/antiparallel x sign
    CHECK(count_kind<R1Remove>(moves) == 0);
    CHECK(count_kind<R2Remove>(moves) == 0);
    CHECK(count_kind<R3Move>(moves) == 0);
    CHECK(count_kind<VPairRemove>(moves) == 0);
    CHECK(count_kind<CoboundaryMove>(moves) == 0);
}

TEST_CASE("kink removal is detected") {
    auto moves = enumerate_moves(parse_egc("O1+,O5+,U5+,U2+,U1+,O2+"));
    auto removals = of_kind<R1Remove>(moves);
    REQUIRE(removals.size() == 1);
    CHECK(removals[0].pos == 1);
    ExtendedGaussCode reduced = apply_move(parse_egc("O1+,O5+,U5+,U2+,U1+,O2+"), removals[0]);
    CHECK(serialize_egc(reduced) == "O1+,U2+,U1+,O2+");
}

TEST_CASE("R1 insert then remove round-trips") {
    std::mt19937_64 rng(53);
    for (const char* f : fixtures::ALL) {
        ExtendedGaussCode code = parse_egc(f);
        for (int trial = 0; trial < 10; ++trial) {
            auto adds = of_kind<R1Add>(enumerate_moves(code));
            R1Add add = adds[rng() % adds.size()];
            ExtendedGaussCode bigger = apply_move(code, add);
            // remove the freshly added kink
            int fresh = bigger.max_id();
            auto removals = of_kind<R1Remove>(enumerate_moves(bigger));
            bool restored = false;
            for (const R1Remove& rem : removals) {
                const auto& comp = bigger.components[rem.comp];
                if (comp[rem.pos].id != fresh) continue;
                restored = serialize_egc(apply_move(bigger, rem)) == serialize_egc(code);
            }
            CHECK(restored);
        }
    }
}

TEST_CASE("same-site R2 insert then remove round-trips") {
    ExtendedGaussCode code = parse_egc(fixtures::VIRTUAL_TREFOIL);
    for (bool parallel : {true, false})
        for (int sign : {1, -1}) {
            R2Add add{0, 2, 0, 2, parallel, sign};
            ExtendedGaussCode bigger = apply_move(code, add);
            CHECK(validate(bigger, ValidationLevel::Cohomological).ok());
            if (parallel) continue;  // the parallel fold needs detour virtuals
            bool restored = false;
            for (const R2Remove& rem : of_kind<R2Remove>(enumerate_moves(bigger)))
                if (serialize_egc(apply_move(bigger, rem)) == serialize_egc(code)) restored = true;
            CHECK(restored);
        }
}

TEST_CASE("far R2 insertions stay cohomologically valid via detour virtuals") {
    ExtendedGaussCode hopf = parse_egc(fixtures::HOPF);
    R2Add far{0, 1, 1, 0, true, 1};
    ExtendedGaussCode poked = apply_move(hopf, far);
    CHECK(validate(poked, ValidationLevel::Cohomological).ok());
    // the naive insertion alone is not consistent, so virtuals were added
    int virtuals = 0;
    for (const auto& comp : poked.components)
        for (const auto& p : comp)
            if (!p.classical()) ++virtuals;
    CHECK(virtuals > 0);
    // classical content is exactly the R2-extended Hopf link
    CHECK(index_polynomial(diag(poked)) == index_polynomial(diag(hopf)));
}

TEST_CASE("virtual pair insertion on the unknot") {
    ExtendedGaussCode out = apply_move(parse_egc(fixtures::UNKNOT), VPairAdd{0, 0, true});
    CHECK(serialize_egc(out) == "V1+,V1-");
    Diagram d = diag(out);
    for (Int v : virtual_index_cocycle(d).values) CHECK(v == 0);
    // and the pair cancels again
    auto rem = of_kind<VPairRemove>(enumerate_moves(out));
    REQUIRE(rem.size() >= 1);
    CHECK(serialize_egc(apply_move(out, rem[0])) == "~");
}

TEST_CASE("coboundary move shifts vi by the coboundary") {
    ExtendedGaussCode vt = parse_egc(fixtures::VIRTUAL_TREFOIL);
    Diagram before = diag(vt);
    for (int eps : {1, -1}) {
        ExtendedGaussCode moved = apply_move(vt, CoboundaryMove{1, eps});
        Diagram after = diag(moved);
        REQUIRE(after.arc_count() == before.arc_count());
        Cochain expected = virtual_index_cocycle(before);
        Cochain dc = coboundary(before, 1);
        for (int a = 0; a < before.arc_count(); ++a) expected.values[a] += eps * dc.values[a];
        CHECK(virtual_index_cocycle(after).values == expected.values);
        CHECK(validate(moved, ValidationLevel::Cohomological).ok());
    }
}

TEST_CASE("realize_representative") {
    ExtendedGaussCode vt = parse_egc(fixtures::VIRTUAL_TREFOIL);
    CHECK(serialize_egc(realize_representative(vt, {})) == serialize_egc(vt));
    CHECK(serialize_egc(realize_representative(vt, {{1, 0}})) == serialize_egc(vt));

    ExtendedGaussCode moved = realize_representative(vt, {{1, 2}, {2, -1}});
    Diagram before = diag(vt), after = diag(moved);
    Cochain expected = virtual_index_cocycle(before);
    for (const auto& [crossing, coeff] : std::map<int, int>{{1, 2}, {2, -1}}) {
        Cochain dc = coboundary(before, crossing);
        for (int a = 0; a < before.arc_count(); ++a) expected.values[a] += coeff * dc.values[a];
    }
    CHECK(virtual_index_cocycle(after).values == expected.values);
    CHECK(cohomologous(after, virtual_index_cocycle(after), canonical_index_cocycle(after)).cohomologous);
}

TEST_CASE("the standard trefoil code admits no triangle move") {
    CHECK(count_kind<R3Move>(enumerate_moves(parse_egc(fixtures::TREFOIL))) == 0);
}

TEST_CASE("triangle moves on a braid closure") {
    ExtendedGaussCode braid = parse_egc(kBraidClosure);
    REQUIRE(validate(braid, ValidationLevel::Cohomological).ok());
    auto triangles = of_kind<R3Move>(enumerate_moves(braid));
    REQUIRE(triangles.size() >= 1);

    FiniteBiquandle b = alexander_biquandle(5, 2, 3);
    long long colorings = count_colorings(diag(braid), b);
    LaurentPoly g = generalized_alexander(diag(braid));
    WriggleReport w = wriggle_report(diag(braid));

    ExtendedGaussCode after = apply_move(braid, triangles[0]);
    CHECK(validate(after, ValidationLevel::Cohomological).ok());
    CHECK(serialize_egc(after) != serialize_egc(braid));
    CHECK(count_colorings(diag(after), b) == colorings);
    CHECK(generalized_alexander(diag(after)) == g);
    CHECK(wriggle_report(diag(after)).pairwise == w.pairwise);

    // the move is an involution at the same site
    CHECK(serialize_egc(apply_move(after, triangles[0])) == serialize_egc(braid));
}

TEST_CASE("inapplicable moves throw") {
    ExtendedGaussCode hopf = parse_egc(fixtures::HOPF);
    CHECK_THROWS_AS(apply_move(hopf, R1Remove{0, 0}), std::invalid_argument);
    CHECK_THROWS_AS(apply_move(hopf, VPairRemove{0, 0}), std::invalid_argument);
    CHECK_THROWS_AS(apply_move(hopf, R2Remove{0, 0, 1, 0}), std::invalid_argument);
    CHECK_THROWS_AS(apply_move(hopf, R1Add{5, 0, true, 1}), std::invalid_argument);
    CHECK_THROWS_AS(apply_move(hopf, CoboundaryMove{9, 1}), std::invalid_argument);
    R3Move bogus;
    bogus.comp[0] = bogus.comp[1] = bogus.comp[2] = 0;
    bogus.pos[0] = 0;
    bogus.pos[1] = 1;
    bogus.pos[2] = 2;
    CHECK_THROWS_AS(apply_move(parse_egc(fixtures::TREFOIL), bogus), std::invalid_argument);
}

TEST_CASE("every applied move preserves validity") {
    std::mt19937_64 rng(59);
    for (const char* f : fixtures::ALL) {
        ExtendedGaussCode code = parse_egc(f);
        for (int step = 0; step < 30; ++step) {
            code = testutil::capped_step(code, rng);
            CHECK(validate(code, ValidationLevel::Cohomological).ok());
        }
    }
}

TEST_CASE("fuzz reports clean runs") {
    FuzzOptions opt;
    opt.steps = 60;
    opt.seed = 0;
    opt.checks = {"q", "wriggle", "colorings", "alexander", "parity-class"};
    for (const char* f : fixtures::ALL) {
        FuzzReport r = fuzz(parse_egc(f), opt);
        CHECK(r.ok);
        CHECK(r.steps_applied == 60);
        CHECK(r.failures.empty());
        CHECK(r.move_log.size() == 60);
    }
}

TEST_CASE("fuzz with the khovanov check on small inputs") {
    FuzzOptions opt;
    opt.steps = 50;
    opt.seed = 2;
    opt.checks = {"khovanov"};
    opt.max_crossings = 6;
    FuzzReport r = fuzz(parse_egc(fixtures::HOPF), opt);
    CHECK(r.ok);
}

}  // TEST_SUITE
