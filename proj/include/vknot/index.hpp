#pragma once

#include "vknot/cochain.hpp"

namespace vknot {

// vi: each long arc carries the sum of transverse signs of its virtual
// passages; zero on chords.
Cochain virtual_index_cocycle(const Diagram& d);

enum class Side { Left, Right };

// ci = sum over classical crossings of the local two-arc cochains; the left
// and right variants agree (checked by tests, not assumed here).
//
// Left placement at a crossing c:  sign +1: -1 on the arc into Over-in,
// +1 on the arc out of Under-out; sign -1: -1 into Under-in, +1 out of
// Over-out.  Right placement is the complementary pair with signs flipped.
Cochain canonical_index_cocycle(const Diagram& d, Side side = Side::Left);

// Index of a self-crossing: ci evaluated on the positive half.  Agrees with
// vi on the positive half for consistently encoded codes (debug-asserted).
Int index(const Diagram& d, int crossing);

// The subcode spanned by a set of components: passages whose partner lies
// outside the set are dropped.
ExtendedGaussCode subcode(const ExtendedGaussCode& code, const std::vector<int>& comps);

// The one-component subcode of a component: passages whose partner lies on
// another component are dropped.
ExtendedGaussCode component_subcode(const ExtendedGaussCode& code, int comp);

// Index of a self-crossing computed inside its own component's subdiagram;
// this is the quantity the index polynomial consumes.  Equal to index() on
// knots.
Int component_index(const Diagram& d, int crossing);

// Cocycle on the Gauss diagram of a knot with zero core restriction and
// chord values equal to the crossing indices.  core[k] is the value on the
// arc d.comp_arcs[0][k] after nullification (all zero; asserted).
struct ChordIndexCocycle {
    std::map<int, Int> chord;  // crossing label -> value
    std::vector<Int> core;     // by position in comp_arcs[0]
};
ChordIndexCocycle chord_index_cocycle(const Diagram& d);

// vi mod 2.
Cochain parity_cocycle(const Diagram& d);
// Whether the parity class vanishes, i.e. vp is a mod-2 coboundary sum.
bool parity_class_trivial(const Diagram& d);
// Same predicate under its geometric name (atom checkerboard colourability).
inline bool checkerboard_colourable(const Diagram& d) { return parity_class_trivial(d); }

enum class ValidationLevel { Basic, Cohomological };

// Basic: structural invariants.  Cohomological: additionally vi ~ ci over Z,
// a necessary condition for the virtual-passage data to describe a planar
// drawing.  Returns diagnostics, never throws on bad input.
ValidationReport validate(const ExtendedGaussCode& code, ValidationLevel level);

}  // namespace vknot
