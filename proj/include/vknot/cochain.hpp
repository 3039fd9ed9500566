#pragma once

#include <map>
#include <optional>
#include <span>
#include <vector>

#include "vknot/arcs.hpp"
#include "vknot/intmat.hpp"

namespace vknot {

enum class Ring { Z, Z2 };

// Integer (or mod-2) 1-cochain on the covering graph: one value per long
// arc; Gauss-diagram cochains additionally carry chord values.
struct Cochain {
    Ring ring = Ring::Z;
    std::vector<Int> values;          // indexed by arc id, one entry per arc
    std::map<int, Int> chord_values;  // crossing label -> value, usually empty

    static Cochain zero(const Diagram& d, Ring r = Ring::Z) {
        return Cochain{r, std::vector<Int>(d.arcs.size(), 0), {}};
    }
    Int reduce(Int v) const {
        if (ring == Ring::Z) return v;
        Int m = v % 2;
        return m < 0 ? m + 2 : m;
    }
    void normalize() {
        if (ring == Ring::Z2)
            for (Int& v : values) v = reduce(v);
    }
    bool operator==(const Cochain&) const = default;
};

// Sum of values along a closed walk of forward-traversed arcs.
Int evaluate(const Cochain& c, std::span<const int> arc_walk);
Int evaluate(const Cochain& c, const std::vector<int>& arc_walk);

// +1 on each edge end outgoing from the crossing, -1 on each incoming end;
// a loop arc receives the sum of its two end contributions.
Cochain coboundary(const Diagram& d, int crossing, Ring ring = Ring::Z);

struct CohomologyResult {
    bool cohomologous = false;
    // Coefficients x(c) with a - b = sum_c x(c) * delta(c), present on success.
    std::map<int, Int> witness;
};

// Whether a - b is an integer (resp. mod-2) combination of crossing
// coboundaries.  Both cochains must live on the same diagram and ring.
CohomologyResult cohomologous(const Diagram& d, const Cochain& a, const Cochain& b);

}  // namespace vknot
