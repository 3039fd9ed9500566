#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "vknot/egc.hpp"

namespace vknot {

struct PassagePos {
    int comp = 0;
    int idx = 0;
    bool operator==(const PassagePos&) const = default;
};

// A maximal diagram segment between consecutive classical passages.  Carries
// its virtual passages in traversal order.  A component without classical
// passages yields one closed arc (free loop) with no endpoints.
struct LongArc {
    int id = 0;
    int component = 0;
    bool closed = false;
    int start_crossing = 0;
    Role start_role = Role::Over;  // outgoing end: the strand leaves this crossing
    int end_crossing = 0;
    Role end_role = Role::Over;  // incoming end: the strand enters this crossing
    std::vector<Passage> virtuals;
};

struct CrossingInfo {
    int label = 0;
    int sign = 1;
    int comp_over = 0, comp_under = 0;
    PassagePos pos_over, pos_under;
    // Arcs attached to the four crossing ends.
    int out_arc_over = -1, out_arc_under = -1;
    int in_arc_over = -1, in_arc_under = -1;

    bool self_crossing() const { return comp_over == comp_under; }
    int out_arc(Role r) const { return r == Role::Over ? out_arc_over : out_arc_under; }
    int in_arc(Role r) const { return r == Role::Over ? in_arc_over : in_arc_under; }
};

// Covering-graph view: vertices are the classical crossings, edges the long
// arcs (loops and multi-edges allowed), free loops listed separately.
struct CoveringGraph {
    std::vector<int> vertices;
    struct Edge {
        int arc = 0;
        int tail = 0, head = 0;  // tail: arc start crossing, head: arc end crossing
    };
    std::vector<Edge> edges;
    std::vector<int> free_loops;  // arc ids of closed arcs
};

// Everything derived from a code that downstream modules need.  Immutable
// after construction.
struct Diagram {
    ExtendedGaussCode code;
    std::vector<LongArc> arcs;
    std::vector<std::vector<int>> comp_arcs;  // cyclic arc order per component
    std::vector<CrossingInfo> crossings;      // sorted by label

    const CrossingInfo& crossing(int label) const;
    const CrossingInfo* find_crossing(int label) const;
    int classical_count() const { return static_cast<int>(crossings.size()); }
    int arc_count() const { return static_cast<int>(arcs.size()); }
    CoveringGraph covering_graph() const;
};

// Splits each component at its classical passages.
Diagram long_arcs(const ExtendedGaussCode& code);

// Halves of the component of a self-crossing c.  The positive half is the
// closed walk using the Under-out and Over-in ends of c (the segment of the
// component from Under-out back to Over-in); the negative half uses Over-out
// and Under-in.  Returned as arc-id sequences in traversal order.  Throws on
// mixed crossings.
std::pair<std::vector<int>, std::vector<int>> halves(const Diagram& d, int crossing);

}  // namespace vknot
