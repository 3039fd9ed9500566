#include "vknot/invariants.hpp"

#include <stdexcept>

namespace vknot {

int writhe(const Diagram& d) {
    int w = 0;
    for (const CrossingInfo& x : d.crossings) w += x.sign;
    return w;
}

LinkingNumbers linking_numbers(const Diagram& d, int comp) {
    if (comp < 0 || comp >= static_cast<int>(d.code.components.size()))
        throw std::invalid_argument("component index out of range");
    LinkingNumbers lk;
    for (const CrossingInfo& x : d.crossings) {
        if (x.comp_over == comp) lk.over = checked_add(lk.over, x.sign);
        if (x.comp_under == comp) lk.under = checked_add(lk.under, x.sign);
    }
    return lk;
}

Int wriggle(const Diagram& d, int comp) {
    LinkingNumbers lk = linking_numbers(d, comp);
    return checked_sub(lk.over, lk.under);
}

Int pairwise_wriggle(const Diagram& d, int i, int j) {
    const int n = static_cast<int>(d.code.components.size());
    if (i < 0 || i >= n || j < 0 || j >= n) throw std::invalid_argument("component index out of range");
    if (i == j) return 0;
    // Within the subdiagram of components i and j the self-crossings of i
    // cancel between lk_over and lk_under, so only mixed crossings count.
    Int w = 0;
    for (const CrossingInfo& x : d.crossings) {
        if (x.comp_over == i && x.comp_under == j) w = checked_add(w, x.sign);
        if (x.comp_over == j && x.comp_under == i) w = checked_sub(w, x.sign);
    }
    return w;
}

WriggleReport wriggle_report(const Diagram& d) {
    const int n = static_cast<int>(d.code.components.size());
    WriggleReport rep;
    rep.components.resize(n);
    rep.pairwise.assign(n, std::vector<Int>(n, 0));
    for (int i = 0; i < n; ++i) {
        LinkingNumbers lk = linking_numbers(d, i);
        rep.components[i] = {lk.over, lk.under, checked_sub(lk.over, lk.under)};
        for (int j = 0; j < n; ++j) rep.pairwise[i][j] = pairwise_wriggle(d, i, j);
    }

    // Cross-checks the module contracts on every call: row sums recover the
    // per-component wriggle, the wriggle equals minus the canonical cocycle
    // evaluated on the component, and the pairwise numbers equal minus the
    // index class of the two-component subdiagram.
    Cochain ci = canonical_index_cocycle(d);
    for (int i = 0; i < n; ++i) {
        Int row = 0;
        for (int j = 0; j < n; ++j) row = checked_add(row, rep.pairwise[i][j]);
        if (row != rep.components[i].wriggle)
            throw std::logic_error("pairwise wriggle rows do not sum to the component wriggle");
        if (checked_neg(evaluate(ci, d.comp_arcs[i])) != rep.components[i].wriggle)
            throw std::logic_error("wriggle does not match the canonical cocycle evaluation");
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            Diagram pair = long_arcs(subcode(d.code, {i, j}));
            if (checked_neg(evaluate(canonical_index_cocycle(pair), pair.comp_arcs[0])) !=
                rep.pairwise[i][j])
                throw std::logic_error("pairwise wriggle does not match the subdiagram cocycle");
        }
    }
    return rep;
}

LaurentPoly index_polynomial(const Diagram& d) {
    LaurentPoly q;
    for (const CrossingInfo& x : d.crossings) {
        Int sign = x.sign;
        if (x.self_crossing()) {
            Int ind = component_index(d, x.label);
            q += LaurentPoly::monomial(sign, static_cast<int>(ind), 0);
            q -= LaurentPoly::constant(sign);
        } else {
            Int iw = checked_neg(pairwise_wriggle(d, x.comp_over, x.comp_under));
            q += LaurentPoly::monomial(sign, 0, static_cast<int>(iw));
            q -= LaurentPoly::constant(sign);
        }
    }
    LaurentPoly grouped = index_polynomial_grouped(d);
    if (!(q == grouped)) throw std::logic_error("index polynomial: the two assembly routes disagree");
    return q;
}

LaurentPoly index_polynomial_grouped(const Diagram& d) {
    const int n = static_cast<int>(d.code.components.size());
    LaurentPoly q;
    for (const CrossingInfo& x : d.crossings)
        if (x.self_crossing())
            q += LaurentPoly::monomial(x.sign, static_cast<int>(component_index(d, x.label)), 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            Int lk_over_mixed = 0;
            for (const CrossingInfo& x : d.crossings)
                if (x.comp_over == i && x.comp_under == j) lk_over_mixed = checked_add(lk_over_mixed, x.sign);
            if (lk_over_mixed != 0)
                q += LaurentPoly::monomial(lk_over_mixed, 0,
                                           static_cast<int>(checked_neg(pairwise_wriggle(d, i, j))));
        }
    q -= LaurentPoly::constant(writhe(d));
    return q;
}

}  // namespace vknot
