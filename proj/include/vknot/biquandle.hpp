#pragma once

#include <optional>
#include <string>
#include <vector>

#include "vknot/invariants.hpp"

namespace vknot {

struct AxiomViolation {
    int axiom = 0;  // 1: diagonal, 2: invertibility, 3: S bijection, 4: exchange laws
    int x = -1, y = -1, z = -1;
    std::string what;
};

// Finite biquandle: carrier {0..n-1} with operation tables circ (x∘y) and
// star (x∗y) satisfying the diagonal law, invertibility of the column maps,
// bijectivity of S(x,y) = (x∘y, y∗x), and the three exchange laws.
struct FiniteBiquandle {
    int n = 0;
    std::vector<std::vector<int>> circ, star;

    int c(int x, int y) const { return circ[x][y]; }
    int s(int x, int y) const { return star[x][y]; }
    bool operator==(const FiniteBiquandle&) const = default;
};

std::optional<AxiomViolation> check_biquandle_tables(int n, const std::vector<std::vector<int>>& circ,
                                                     const std::vector<std::vector<int>>& star);

// Throws std::invalid_argument with the violation message on bad tables.
FiniteBiquandle make_biquandle(int n, std::vector<std::vector<int>> circ, std::vector<std::vector<int>> star);

struct VirtualBiquandle {
    FiniteBiquandle base;
    std::vector<int> f;  // automorphism

    int apply_f(int x, int exponent) const;  // f or its inverse
};

std::optional<AxiomViolation> check_virtual(const FiniteBiquandle& b, const std::vector<int>& f);
VirtualBiquandle make_virtual_biquandle(FiniteBiquandle b, std::vector<int> f);

// Twisted biquandle: x ∘_f y = f^{-1}(x) ∘ f^{-1}(y), x ∗_f y = f^{-1}(x) ∗ f^{-1}(y).
FiniteBiquandle twist(const VirtualBiquandle& vb);

// The trivial biquandle x∘y = x∗y = x.
FiniteBiquandle trivial_biquandle(int n);

// Alexander biquandle over Z_m: x∘y = s^{-1}(t x + (1-t) y), x∗y = s^{-1} x.
// t and s must be units mod m.
FiniteBiquandle alexander_biquandle(int m, int t, int s);

// The linear map x -> a x over Z_m, as a permutation table.
std::vector<int> linear_map(int m, int a);

// Colors live on long arcs.  At a positive classical crossing the axiom-3
// bijection S(x, y) = (x∘y, y∗x) carries (under-in, over-out) to
// (under-out, over-in); at a negative crossing the same relation holds with
// in and out exchanged.  Virtual passages are invisible.
long long count_colorings(const Diagram& d, const FiniteBiquandle& b);

// Colors live on short arcs (segments between consecutive passages of any
// kind); classical crossings as above, and each virtual passage with
// transverse sign e maps the incoming color by f^{-e} (the twist is oriented
// against the transverse sign, matching the canonical cocycle placement).
long long count_virtual_colorings(const Diagram& d, const VirtualBiquandle& vb);

enum class PresentationFlavor { ABQ, VAQ };

struct LaurentPresentation {
    PresentationFlavor flavor = PresentationFlavor::ABQ;
    std::vector<std::string> generators;
    std::vector<std::vector<LaurentPoly>> relations;  // square when no free loops
    bool square() const { return relations.size() == generators.size(); }
};

// Alexander biquandle module over Z[t^±1, s^±1]: long-arc generators with
// relations s·u_out - t·u_in - (1-t)·o_out and o_out - s·o_in per positive
// crossing, in/out exchanged per negative one (rows cleared of negative
// powers by unit scaling).
LaurentPresentation abq(const Diagram& d);

// Virtual Alexander quandle module: short-arc generators; per positive
// classical crossing u_out - t·u_in - (1-t)·o_out and o_in - o_out (in/out
// exchanged at negative crossings); per virtual passage out - s^{-e}·in.
LaurentPresentation vaq(const Diagram& d);

// Determinant generators of the 0th Fitting ideals, normalized; zero when
// the presentation is not square (free loops present).
LaurentPoly generalized_alexander(const Diagram& d);
LaurentPoly xi_polynomial(const Diagram& d);

}  // namespace vknot
