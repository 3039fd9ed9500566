#pragma once

#include <random>
#include <set>

#include "vknot/moves.hpp"

namespace testutil {

using namespace vknot;

inline int crossing_count(const ExtendedGaussCode& code) {
    std::set<int> ids;
    for (const auto& comp : code.components)
        for (const auto& p : comp) ids.insert(p.id);
    return static_cast<int>(ids.size());
}

// One random move, preferring shrinking moves once the code reaches the cap
// (same balancing the fuzzer uses).
inline ExtendedGaussCode capped_step(const ExtendedGaussCode& code, std::mt19937_64& rng, int cap = 9) {
    std::vector<Move> moves = enumerate_moves(code);
    if (crossing_count(code) >= cap) {
        std::vector<Move> shrinking = moves;
        std::erase_if(shrinking, [](const Move& m) {
            return std::holds_alternative<R1Add>(m) || std::holds_alternative<R2Add>(m) ||
                   std::holds_alternative<VPairAdd>(m) || std::holds_alternative<CoboundaryMove>(m);
        });
        if (!shrinking.empty())
            moves = std::move(shrinking);
        else
            std::erase_if(moves, [](const Move& m) {
                return std::holds_alternative<R2Add>(m) || std::holds_alternative<CoboundaryMove>(m);
            });
    }
    return apply_move(code, moves[rng() % moves.size()]);
}

}  // namespace testutil
