#pragma once

#include <cstdint>
#include <optional>

#include "vknot/frobenius.hpp"
#include "vknot/lsss.hpp"

namespace vknot {

// Per crossing, the distinguished inward edge end of the source-sink
// structure: true picks the end that is incoming in the link orientation.
struct DirectionSystem {
    std::map<int, bool> link_in;
    bool at(int crossing) const {
        auto it = link_in.find(crossing);
        if (it == link_in.end())
            throw std::invalid_argument("direction system missing crossing " + std::to_string(crossing));
        return it->second;
    }
};

// Auxiliary data of the complex: the source-sink structure, the direction
// system, and (resolved lazily per state) component orders and star points.
// With no seed and no overrides, orders and stars are canonical.
struct AuxData {
    LSSS lambda;
    DirectionSystem dir;
    std::optional<uint64_t> random_seed;
    std::map<uint32_t, std::vector<int>> sigma_override;            // state mask -> component order
    std::map<std::pair<uint32_t, int>, int> star_override;          // (mask, comp) -> interval item
};

AuxData default_aux(const Diagram& d);
AuxData random_aux(const Diagram& d, uint64_t seed);

struct ChainComplex {
    std::vector<int> dims;                              // per homological degree 0..n
    std::vector<IntMatrix> d;                           // d[h]: degree h -> h+1
    std::vector<std::vector<std::string>> basis_labels; // per degree
};

struct HomologyGroups {
    struct Group {
        Int rank = 0;
        std::vector<Int> torsion;
        bool operator==(const Group&) const = default;
    };
    std::vector<Group> groups;  // per degree 0..n
    bool operator==(const HomologyGroups&) const = default;
};

enum class SurgeryKind { Merge, Split, SingleCircle };

// The assembled cube, kept around for inspection by tests and the CLI.
struct KhovanovBuild {
    struct Item {
        enum class Type { Interval, Locus, Cross } type = Type::Interval;
        int arc_step = -1;   // Interval: index into the component's arc list
        int part = 0;        // Interval: 0 before the arc's locus, 1 after
        int crossing = -1;   // Cross
        int smoothing_arc = 0;  // Cross: 0 = strand through Over-in, 1 = other
    };
    struct Comp {
        std::vector<StateResolution::ArcStep> arcs;
        std::vector<Item> items;
        int min_arc = 0;   // identity across neighbouring states
        int star = 0;      // item index of the star interval
        long long order_key = 0;
        int total_loci = 0;
    };
    struct State {
        uint32_t mask = 0;
        std::vector<Comp> comps;
        std::vector<int> sigma;      // tensor slot -> component index
        std::vector<int> sigma_inv;  // component index -> tensor slot
        int rank() const { return 1 << comps.size(); }
    };
    struct Edge {
        uint32_t from = 0, to = 0;
        int crossing = 0;
        SurgeryKind kind = SurgeryKind::SingleCircle;
        int sign = 1;
        IntMatrix block;  // signed block, target rank x source rank
    };

    Diagram diagram;
    AuxData aux;
    std::vector<State> states;  // indexed by mask
    std::vector<Edge> edges;
    ChainComplex complex;

    const Edge& edge(uint32_t from, uint32_t to) const;
};

// Number of cut loci between two marked items of one component, mod 2; the
// two connecting arcs agree because every component carries evenly many
// loci.
int cut_locus_distance(const KhovanovBuild::Comp& comp, int item_a, int item_b);

// l(crossing point, star) on a component passing through the crossing.
int cut_locus_to_star(const KhovanovBuild::Comp& comp, int crossing);

// Builds the full cube and complex; throws std::logic_error when d^2 != 0
// (a sign-rule bug, never silently returned) and std::invalid_argument when
// the code fails cohomological validation or exceeds the state cap.
KhovanovBuild build_khovanov(const Diagram& d, const AuxData& aux, int max_crossings = 16);

HomologyGroups homology(const ChainComplex& c);
HomologyGroups khovanov_homology(const Diagram& d, const AuxData& aux);

struct IndependenceReport {
    bool ok = true;
    HomologyGroups reference;
    struct Mismatch {
        uint64_t seed = 0;
        HomologyGroups groups;
    };
    std::vector<Mismatch> mismatches;
};

// Recomputes homology under `trials` random auxiliary structures and
// reports any disagreement (replayable via the recorded seeds).
IndependenceReport independence_suite(const Diagram& d, int trials, uint64_t seed);

}  // namespace vknot
