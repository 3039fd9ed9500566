#include "vknot/index.hpp"

#include <cassert>
#include <set>
#include <stdexcept>

namespace vknot {

Cochain virtual_index_cocycle(const Diagram& d) {
    Cochain c = Cochain::zero(d);
    for (const LongArc& a : d.arcs)
        for (const Passage& p : a.virtuals) c.values[a.id] = checked_add(c.values[a.id], p.sign);
    return c;
}

Cochain canonical_index_cocycle(const Diagram& d, Side side) {
    Cochain c = Cochain::zero(d);
    for (const CrossingInfo& x : d.crossings) {
        int minus_arc, plus_arc;
        if (side == Side::Left) {
            if (x.sign > 0) {
                minus_arc = x.in_arc_over;
                plus_arc = x.out_arc_under;
            } else {
                minus_arc = x.in_arc_under;
                plus_arc = x.out_arc_over;
            }
        } else {
            if (x.sign > 0) {
                plus_arc = x.in_arc_under;
                minus_arc = x.out_arc_over;
            } else {
                plus_arc = x.in_arc_over;
                minus_arc = x.out_arc_under;
            }
        }
        c.values[plus_arc] = checked_add(c.values[plus_arc], 1);
        c.values[minus_arc] = checked_sub(c.values[minus_arc], 1);
    }
    return c;
}

Int index(const Diagram& d, int crossing) {
    auto [positive, negative] = halves(d, crossing);
    (void)negative;
    Cochain ci = canonical_index_cocycle(d);
    Int ind = evaluate(ci, positive);
#ifndef NDEBUG
    Int vi_val = evaluate(virtual_index_cocycle(d), positive);
    if (vi_val != ind) {
        // Only legitimate for encodings that fail cohomological validation.
        assert(!cohomologous(d, virtual_index_cocycle(d), ci).cohomologous);
    }
#endif
    return ind;
}

ExtendedGaussCode subcode(const ExtendedGaussCode& code, const std::vector<int>& comps) {
    std::map<int, int> count;  // ids fully contained in the chosen components
    for (int ci : comps) {
        if (ci < 0 || ci >= static_cast<int>(code.components.size()))
            throw std::invalid_argument("component index out of range");
        for (const Passage& p : code.components[ci]) ++count[p.id];
    }
    ExtendedGaussCode sub;
    for (int ci : comps) {
        std::vector<Passage> comp;
        for (const Passage& p : code.components[ci])
            if (count[p.id] == 2) comp.push_back(p);
        sub.components.push_back(std::move(comp));
    }
    return sub;
}

ExtendedGaussCode component_subcode(const ExtendedGaussCode& code, int comp) {
    return subcode(code, {comp});
}

Int component_index(const Diagram& d, int crossing) {
    const CrossingInfo& x = d.crossing(crossing);
    if (!x.self_crossing())
        throw std::invalid_argument("component_index requires a self-crossing");
    Diagram sub = long_arcs(component_subcode(d.code, x.comp_over));
    return index(sub, crossing);
}

ChordIndexCocycle chord_index_cocycle(const Diagram& d) {
    if (d.code.components.size() != 1)
        throw std::invalid_argument("chord index cocycle is defined for knot diagrams only");

    ChordIndexCocycle out;
    const std::vector<int>& core = d.comp_arcs[0];
    Cochain vi = virtual_index_cocycle(d);

    if (d.classical_count() == 0) {
        out.core.assign(core.size(), 0);
        for (size_t k = 0; k < core.size(); ++k)
            if (vi.values[core[k]] != 0) throw std::invalid_argument("nonzero cocycle on a crossing-free knot");
        return out;
    }

    // Sweep the core cycle, nullifying each edge at its head vertex by a
    // chord-endpoint coboundary; the chord at the head absorbs the value.
    std::vector<Int> core_vals(core.size());
    for (size_t k = 0; k < core.size(); ++k) core_vals[k] = vi.values[core[k]];
    std::map<int, Int> chord;
    for (const CrossingInfo& x : d.crossings) chord[x.label] = 0;

    for (size_t k = 0; k + 1 < core.size(); ++k) {
        Int v = core_vals[k];
        if (v == 0) continue;
        const LongArc& arc = d.arcs[core[k]];
        // head vertex as a Gauss-diagram endpoint: chord leaves its Over
        // endpoint and enters its Under endpoint
        Int chord_delta = (arc.end_role == Role::Over) ? v : checked_neg(v);
        chord[arc.end_crossing] = checked_add(chord[arc.end_crossing], chord_delta);
        core_vals[k] = 0;
        core_vals[k + 1] = checked_add(core_vals[k + 1], v);
    }
    if (core_vals.back() != 0)
        throw std::invalid_argument("core sweep left a nonzero edge: total virtual sign is not zero");

    out.core = std::move(core_vals);
    out.chord = std::move(chord);
    return out;
}

Cochain parity_cocycle(const Diagram& d) {
    Cochain c = virtual_index_cocycle(d);
    c.ring = Ring::Z2;
    c.normalize();
    return c;
}

bool parity_class_trivial(const Diagram& d) {
    Cochain vp = parity_cocycle(d);
    return cohomologous(d, vp, Cochain::zero(d, Ring::Z2)).cohomologous;
}

ValidationReport validate(const ExtendedGaussCode& code, ValidationLevel level) {
    ValidationReport report = validate_basic(code);
    if (!report.ok() || level == ValidationLevel::Basic) return report;
    Diagram d = long_arcs(code);
    CohomologyResult r = cohomologous(d, virtual_index_cocycle(d), canonical_index_cocycle(d));
    if (!r.cohomologous)
        report.errors.push_back({"cohomological",
                                 "virtual index cocycle is not cohomologous to the canonical one; "
                                 "the virtual passage data cannot come from a planar drawing"});
    return report;
}

}  // namespace vknot
