#include "vknot/arcs.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace vknot {

const CrossingInfo* Diagram::find_crossing(int label) const {
    auto it = std::lower_bound(crossings.begin(), crossings.end(), label,
                               [](const CrossingInfo& c, int l) { return c.label < l; });
    if (it == crossings.end() || it->label != label) return nullptr;
    return &*it;
}

const CrossingInfo& Diagram::crossing(int label) const {
    const CrossingInfo* c = find_crossing(label);
    if (!c) throw std::invalid_argument("unknown crossing " + std::to_string(label));
    return *c;
}

CoveringGraph Diagram::covering_graph() const {
    CoveringGraph g;
    for (const auto& c : crossings) g.vertices.push_back(c.label);
    for (const auto& a : arcs) {
        if (a.closed)
            g.free_loops.push_back(a.id);
        else
            g.edges.push_back({a.id, a.start_crossing, a.end_crossing});
    }
    return g;
}

Diagram long_arcs(const ExtendedGaussCode& code) {
    ValidationReport basic = validate_basic(code);
    if (!basic.ok()) throw std::invalid_argument("invalid code: " + basic.errors.front().detail);

    Diagram d;
    d.code = code;
    d.comp_arcs.resize(code.components.size());

    std::map<int, CrossingInfo> info;
    for (int ci = 0; ci < static_cast<int>(code.components.size()); ++ci) {
        const auto& comp = code.components[ci];
        for (int pi = 0; pi < static_cast<int>(comp.size()); ++pi) {
            const Passage& p = comp[pi];
            if (!p.classical()) continue;
            CrossingInfo& x = info[p.id];
            x.label = p.id;
            x.sign = p.sign;
            if (p.role() == Role::Over) {
                x.comp_over = ci;
                x.pos_over = {ci, pi};
            } else {
                x.comp_under = ci;
                x.pos_under = {ci, pi};
            }
        }
    }

    for (int ci = 0; ci < static_cast<int>(code.components.size()); ++ci) {
        const auto& comp = code.components[ci];
        std::vector<int> classical_pos;
        for (int pi = 0; pi < static_cast<int>(comp.size()); ++pi)
            if (comp[pi].classical()) classical_pos.push_back(pi);

        if (classical_pos.empty()) {
            LongArc arc;
            arc.id = static_cast<int>(d.arcs.size());
            arc.component = ci;
            arc.closed = true;
            arc.virtuals.assign(comp.begin(), comp.end());
            d.comp_arcs[ci].push_back(arc.id);
            d.arcs.push_back(std::move(arc));
            continue;
        }

        const int n = static_cast<int>(comp.size());
        for (size_t k = 0; k < classical_pos.size(); ++k) {
            int from = classical_pos[k];
            int to = classical_pos[(k + 1) % classical_pos.size()];
            LongArc arc;
            arc.id = static_cast<int>(d.arcs.size());
            arc.component = ci;
            arc.start_crossing = comp[from].id;
            arc.start_role = comp[from].role();
            arc.end_crossing = comp[to].id;
            arc.end_role = comp[to].role();
            for (int pi = (from + 1) % n; pi != to; pi = (pi + 1) % n) arc.virtuals.push_back(comp[pi]);

            CrossingInfo& from_x = info[comp[from].id];
            if (comp[from].role() == Role::Over)
                from_x.out_arc_over = arc.id;
            else
                from_x.out_arc_under = arc.id;
            CrossingInfo& to_x = info[comp[to].id];
            if (comp[to].role() == Role::Over)
                to_x.in_arc_over = arc.id;
            else
                to_x.in_arc_under = arc.id;

            d.comp_arcs[ci].push_back(arc.id);
            d.arcs.push_back(std::move(arc));
        }
    }

    for (auto& [label, x] : info) d.crossings.push_back(x);
    return d;
}

std::pair<std::vector<int>, std::vector<int>> halves(const Diagram& d, int crossing) {
    const CrossingInfo& c = d.crossing(crossing);
    if (!c.self_crossing())
        throw std::invalid_argument("halves undefined for mixed crossing " + std::to_string(crossing));

    auto walk = [&](int start_arc, Role stop_role) {
        std::vector<int> out;
        int a = start_arc;
        for (;;) {
            out.push_back(a);
            const LongArc& arc = d.arcs[a];
            if (arc.end_crossing == crossing && arc.end_role == stop_role) break;
            const CrossingInfo& next = d.crossing(arc.end_crossing);
            a = next.out_arc(arc.end_role);  // the strand continues through the crossing
        }
        return out;
    };
    std::vector<int> positive = walk(c.out_arc_under, Role::Over);
    std::vector<int> negative = walk(c.out_arc_over, Role::Under);
    return {std::move(positive), std::move(negative)};
}

}  // namespace vknot
