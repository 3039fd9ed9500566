#pragma once

#include <map>

#include "vknot/cochain.hpp"
#include "vknot/state.hpp"

namespace vknot {

// Local source-sink structure: at each classical crossing, the strand whose
// two ends are oriented toward the crossing.
struct LSSS {
    std::map<int, Role> inward;

    Role at(int crossing) const {
        auto it = inward.find(crossing);
        if (it == inward.end()) throw std::invalid_argument("LSSS missing crossing " + std::to_string(crossing));
        return it->second;
    }
    LSSS flipped() const {
        LSSS l = *this;
        for (auto& [c, r] : l.inward) r = other(r);
        return l;
    }
    LSSS flipped_at(int crossing) const {
        LSSS l = *this;
        l.inward.at(crossing) = other(l.inward.at(crossing));
        return l;
    }
    bool operator==(const LSSS&) const = default;
};

// ssc: 1 on a long arc when the orientations induced at its two ends
// disagree; 0 on free loops.
Cochain lsss_cochain(const Diagram& d, const LSSS& lambda);

// The LSSS with ssc = ci mod 2, built by propagation from the
// smallest-label crossing of each graph component, seeded with Over inward.
LSSS canonical_lsss(const Diagram& d);

// Inverse of lsss_cochain up to global flip.  Requires a connected covering
// graph and alpha a representative of the parity class; throws otherwise.
LSSS cochain_to_lsss(const Diagram& d, const Cochain& alpha);

struct StateCheckReport {
    struct Violation {
        int component = 0;
        std::string what;
        Int value = 0;
    };
    std::vector<Violation> violations;
    bool ok() const { return violations.empty(); }
};

// Per-state consistency: every component of the smoothing evaluates the
// virtual index cocycle to zero, and carries an even number of cut loci of
// the supplied source-sink structure (canonical when absent).
StateCheckReport state_cocycle_check(const Diagram& d, const std::map<int, int>& s,
                                     const LSSS* lambda = nullptr);

}  // namespace vknot
