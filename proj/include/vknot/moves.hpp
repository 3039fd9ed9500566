#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "vknot/egc.hpp"

namespace vknot {

// Insertion sites are gaps: gap g in a component means "before passage g"
// (g = 0 on an empty component).  Removal sites reference the position of
// the first passage of a cyclically adjacent pair.

struct R1Add {
    int comp = 0, gap = 0;
    bool over_first = true;
    int sign = 1;
};
struct R1Remove {
    int comp = 0, pos = 0;
};
struct R2Add {
    // Strand A receives the over passages at (comp_a, gap_a), strand B the
    // under ones at (comp_b, gap_b); equal sites nest the four passages.
    int comp_a = 0, gap_a = 0, comp_b = 0, gap_b = 0;
    bool parallel = true;
    int sign = 1;
};
struct R2Remove {
    int comp_a = 0, pos_a = 0, comp_b = 0, pos_b = 0;
};
struct R3Move {
    int comp[3] = {0, 0, 0};
    int pos[3] = {0, 0, 0};  // three adjacent pairs forming the triangle
};
struct VPairAdd {
    int comp = 0, gap = 0;
    bool plus_first = true;
};
struct VPairRemove {
    int comp = 0, pos = 0;
};
struct CoboundaryMove {
    int crossing = 0;
    int eps = 1;
};

using Move = std::variant<R1Add, R1Remove, R2Add, R2Remove, R3Move, VPairAdd, VPairRemove, CoboundaryMove>;

std::string move_name(const Move& m);
std::string move_describe(const Move& m);

std::vector<Move> enumerate_moves(const ExtendedGaussCode& code);

// Applies one move.  Results are always structurally valid; classical
// insertions that would leave the virtual-passage data inconsistent with a
// planar drawing get compensating virtual crossings (the detour part of the
// move), so cohomologically valid codes stay valid.  Throws
// std::invalid_argument on inapplicable moves.
ExtendedGaussCode apply_move(const ExtendedGaussCode& code, const Move& m);

// Applies |coefficient| coboundary moves per crossing, with the
// coefficient's sign; the virtual index cocycle gains sum coeff(c)·delta(c).
ExtendedGaussCode realize_representative(const ExtendedGaussCode& code, const std::map<int, int>& coefficients);

struct FuzzOptions {
    int steps = 100;
    uint64_t seed = 0;
    std::set<std::string> checks;  // subset of {"q","wriggle","colorings","alexander","khovanov","parity-class"}
    int max_crossings = 9;         // classical + virtual
    int khovanov_max_classical = 6;
};

struct FuzzReport {
    bool ok = true;
    int steps_applied = 0;
    std::vector<std::string> move_log;
    struct Failure {
        std::string check;
        int step = 0;
        std::string before_code, after_code;
        std::string expected, actual;
        std::vector<Move> shrunk;               // minimal failing sequence from the seed code
        std::vector<std::string> shrunk_moves;  // the same, human-readable
    };
    std::vector<Failure> failures;
};

FuzzReport fuzz(const ExtendedGaussCode& code, const FuzzOptions& options);

}  // namespace vknot
