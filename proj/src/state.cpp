#include "vknot/state.hpp"

#include <stdexcept>

namespace vknot {

namespace {

struct End {
    Role role;
    bool in;
};

// The oriented smoothing joins Over-in with Under-out and Under-in with
// Over-out; the disoriented one joins in with in and out with out.
End paired_end(End e, bool oriented) {
    return {other(e.role), oriented ? !e.in : e.in};
}

}  // namespace

std::map<int, int> state_from_mask(const Diagram& d, uint32_t mask) {
    if (d.classical_count() > 31) throw std::invalid_argument("too many crossings for a mask state");
    std::map<int, int> s;
    for (int i = 0; i < d.classical_count(); ++i) s[d.crossings[i].label] = (mask >> i) & 1;
    return s;
}

StateResolution kauffman_state(const Diagram& d, const std::map<int, int>& s) {
    for (const CrossingInfo& x : d.crossings) {
        auto it = s.find(x.label);
        if (it == s.end())
            throw std::invalid_argument("state missing crossing " + std::to_string(x.label));
        if (it->second != 0 && it->second != 1)
            throw std::invalid_argument("state values must be 0 or 1");
    }

    StateResolution res;
    res.state = s;
    res.arc_location.resize(d.arcs.size());
    std::vector<bool> visited(d.arcs.size(), false);

    for (int start = 0; start < d.arc_count(); ++start) {
        if (visited[start]) continue;
        StateResolution::Component comp;
        if (d.arcs[start].closed) {
            visited[start] = true;
            comp.arcs.push_back({start, true});
            res.arc_location[start] = {static_cast<int>(res.components.size()), 0, true};
            res.components.push_back(std::move(comp));
            continue;
        }
        int arc = start;
        bool forward = true;
        do {
            visited[arc] = true;
            res.arc_location[arc] = {static_cast<int>(res.components.size()),
                                     static_cast<int>(comp.arcs.size()), forward};
            comp.arcs.push_back({arc, forward});
            const LongArc& a = d.arcs[arc];
            int crossing = forward ? a.end_crossing : a.start_crossing;
            End arrive{forward ? a.end_role : a.start_role, forward};
            const CrossingInfo& xinfo = d.crossing(crossing);
            // resolution 0 is the A-smoothing: oriented at positive
            // crossings, disoriented at negative ones
            bool oriented = (s.at(crossing) == 0) == (xinfo.sign > 0);
            End leave = paired_end(arrive, oriented);
            bool over_in_on_strand =
                (arrive.role == Role::Over && arrive.in) || (leave.role == Role::Over && leave.in);
            comp.crossings.push_back({crossing, over_in_on_strand ? 0 : 1});
            if (leave.in) {
                arc = xinfo.in_arc(leave.role);
                forward = false;
            } else {
                arc = xinfo.out_arc(leave.role);
                forward = true;
            }
        } while (!(arc == start && forward));
        res.components.push_back(std::move(comp));
    }
    return res;
}

}  // namespace vknot
