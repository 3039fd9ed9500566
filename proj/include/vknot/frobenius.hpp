#pragma once

#include "vknot/intmat.hpp"

namespace vknot {

// The Frobenius algebra V = Z[X]/(X^2), elements a·1 + b·X, with the
// involution tau(1) = 1, tau(X) = -X.
struct VElem {
    Int one = 0;
    Int x = 0;

    bool operator==(const VElem&) const = default;
    static VElem unit() { return {1, 0}; }
    static VElem gen() { return {0, 1}; }
};

inline VElem frob_m(VElem a, VElem b) {
    // (a0 + a1 X)(b0 + b1 X) with X^2 = 0
    return {checked_mul(a.one, b.one), checked_add(checked_mul(a.one, b.x), checked_mul(a.x, b.one))};
}

inline VElem frob_tau(VElem a) { return {a.one, checked_neg(a.x)}; }

inline VElem frob_tau_pow(VElem a, int k) { return (k % 2 == 0) ? a : frob_tau(a); }

// Element of V ⊗ V in the basis (1⊗1, 1⊗X, X⊗1, X⊗X).
struct VTensor2 {
    Int c11 = 0, c1x = 0, cx1 = 0, cxx = 0;
    bool operator==(const VTensor2&) const = default;
};

// Delta(1) = 1⊗X + X⊗1, Delta(X) = X⊗X, extended linearly.
inline VTensor2 frob_delta(VElem a) { return {0, a.one, a.one, a.x}; }

}  // namespace vknot
