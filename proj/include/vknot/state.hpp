#pragma once

#include <map>
#include <vector>

#include "vknot/arcs.hpp"

namespace vknot {

// Result of smoothing every classical crossing.  Resolution 0 is the
// A-smoothing: at a positive crossing the oriented one (Over-in joins
// Under-out, Under-in joins Over-out), at a negative crossing the
// disoriented one (in joins in, out joins out); resolution 1 is the other.
// Components traverse each long arc exactly once, possibly against its
// orientation.
struct StateResolution {
    std::map<int, int> state;

    struct ArcStep {
        int arc = 0;
        bool forward = true;
        bool operator==(const ArcStep&) const = default;
    };
    struct CrossStep {
        int crossing = 0;
        // 0 = the smoothing strand containing the Over-in end, 1 = the other
        int smoothing_arc = 0;
        bool operator==(const CrossStep&) const = default;
    };
    struct Component {
        // arcs[k] is followed by crossings[k]; both empty-crossing free
        // loops and ordinary circles are cyclic.
        std::vector<ArcStep> arcs;
        std::vector<CrossStep> crossings;
    };
    std::vector<Component> components;

    // arc id -> (component, position, forward)
    struct ArcLocation {
        int component = 0;
        int position = 0;
        bool forward = true;
    };
    std::vector<ArcLocation> arc_location;
};

StateResolution kauffman_state(const Diagram& d, const std::map<int, int>& s);

// All 2^n states in bitmask order over crossings sorted by label.
std::map<int, int> state_from_mask(const Diagram& d, uint32_t mask);

}  // namespace vknot
