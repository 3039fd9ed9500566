#pragma once

#include "vknot/index.hpp"
#include "vknot/laurent.hpp"

namespace vknot {

// Sum of signs of all classical crossings.
int writhe(const Diagram& d);

struct LinkingNumbers {
    Int over = 0;
    Int under = 0;
};

// Over/under linking numbers of one component: signed counts of the
// classical crossings where the component passes over (resp. under).
LinkingNumbers linking_numbers(const Diagram& d, int comp);

// lk_over - lk_under of the component.
Int wriggle(const Diagram& d, int comp);

// Wriggle number of component i within the two-component subdiagram (i, j);
// zero when i == j.
Int pairwise_wriggle(const Diagram& d, int i, int j);

struct WriggleReport {
    struct PerComponent {
        Int lk_over = 0, lk_under = 0, wriggle = 0;
    };
    std::vector<PerComponent> components;
    std::vector<std::vector<Int>> pairwise;  // antisymmetric matrix
};
WriggleReport wriggle_report(const Diagram& d);

// Q_D(x, y): self-crossings contribute sign(c) (x^{i(c)} - 1) with i(c) the
// index inside the crossing's own component, mixed crossings contribute
// sign(c) (y^{i(c)} - 1) with i(c) = -w(over component, under component).
// Variables aliased (x, y) := (t, s).
LaurentPoly index_polynomial(const Diagram& d);

// The same polynomial assembled crossing-group-wise (per component pair plus
// a writhe correction); index_polynomial asserts agreement with this route.
LaurentPoly index_polynomial_grouped(const Diagram& d);

}  // namespace vknot
