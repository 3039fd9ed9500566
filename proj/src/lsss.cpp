#include "vknot/lsss.hpp"

#include <queue>
#include <stdexcept>

#include "vknot/index.hpp"

namespace vknot {

Cochain lsss_cochain(const Diagram& d, const LSSS& lambda) {
    Cochain c = Cochain::zero(d, Ring::Z2);
    for (const LongArc& a : d.arcs) {
        if (a.closed) continue;
        // direction induced at the start end: forward when the start end is
        // oriented away from its crossing, i.e. the strand is not inward
        bool fwd_start = lambda.at(a.start_crossing) != a.start_role;
        bool fwd_end = lambda.at(a.end_crossing) == a.end_role;
        c.values[a.id] = (fwd_start == fwd_end) ? 0 : 1;
    }
    return c;
}

namespace {

// Solve ssc_lambda = alpha by propagating over arcs.  Per arc the constraint
// couples (inward == role) bits at its two ends.  Returns false on
// inconsistency.
bool propagate(const Diagram& d, const Cochain& alpha, LSSS& out) {
    std::map<int, int> b;  // crossing -> 1 if inward == Over, 0 if Under, absent unknown
    // adjacency: crossing -> incident non-closed arcs
    std::map<int, std::vector<int>> adj;
    for (const LongArc& a : d.arcs) {
        if (a.closed) continue;
        adj[a.start_crossing].push_back(a.id);
        adj[a.end_crossing].push_back(a.id);
    }
    for (const CrossingInfo& x : d.crossings) {
        if (b.count(x.label)) continue;
        b[x.label] = 1;  // seed: Over inward
        std::queue<int> q;
        q.push(x.label);
        while (!q.empty()) {
            int c = q.front();
            q.pop();
            for (int aid : adj[c]) {
                const LongArc& a = d.arcs[aid];
                int v = static_cast<int>(alpha.values[aid] & 1);
                // dir_start = !b(cs) xor (start_role == Under ? 1 : 0) ... spelled out:
                auto dir_start = [&](int bval) {
                    bool inward_over = bval == 1;
                    return (inward_over ? Role::Over : Role::Under) != a.start_role;
                };
                auto dir_end = [&](int bval) {
                    bool inward_over = bval == 1;
                    return (inward_over ? Role::Over : Role::Under) == a.end_role;
                };
                bool know_s = b.count(a.start_crossing), know_e = b.count(a.end_crossing);
                if (know_s && know_e) {
                    bool ds = dir_start(b[a.start_crossing]), de = dir_end(b[a.end_crossing]);
                    if ((ds != de) != (v == 1)) return false;
                } else if (know_s) {
                    bool ds = dir_start(b[a.start_crossing]);
                    bool de = (v == 1) ? !ds : ds;
                    // inward(ce) == end_role iff de
                    bool inward_over = de ? (a.end_role == Role::Over) : (a.end_role == Role::Under);
                    b[a.end_crossing] = inward_over ? 1 : 0;
                    q.push(a.end_crossing);
                } else if (know_e) {
                    bool de = dir_end(b[a.end_crossing]);
                    bool ds = (v == 1) ? !de : de;
                    bool inward_over = ds ? (a.start_role == Role::Under) : (a.start_role == Role::Over);
                    b[a.start_crossing] = inward_over ? 1 : 0;
                    q.push(a.start_crossing);
                }
            }
        }
    }
    // closed arcs must carry value 0
    for (const LongArc& a : d.arcs)
        if (a.closed && (alpha.values[a.id] & 1)) return false;
    // verify all constraints (non-tree edges between separately grown regions)
    out.inward.clear();
    for (const auto& [c, bit] : b) out.inward[c] = bit ? Role::Over : Role::Under;
    return lsss_cochain(d, out).values == [&] {
        Cochain n = alpha;
        n.ring = Ring::Z2;
        n.normalize();
        return n.values;
    }();
}

bool covering_graph_connected(const Diagram& d) {
    if (d.crossings.empty()) return true;
    std::map<int, std::vector<int>> adj;
    for (const LongArc& a : d.arcs)
        if (!a.closed) {
            adj[a.start_crossing].push_back(a.end_crossing);
            adj[a.end_crossing].push_back(a.start_crossing);
        }
    std::map<int, bool> seen;
    std::queue<int> q;
    q.push(d.crossings.front().label);
    seen[d.crossings.front().label] = true;
    int reached = 0;
    while (!q.empty()) {
        int c = q.front();
        q.pop();
        ++reached;
        for (int n : adj[c])
            if (!seen[n]) {
                seen[n] = true;
                q.push(n);
            }
    }
    return reached == d.classical_count();
}

}  // namespace

LSSS canonical_lsss(const Diagram& d) {
    Cochain cp = canonical_index_cocycle(d);
    cp.ring = Ring::Z2;
    cp.normalize();
    LSSS lambda;
    if (!propagate(d, cp, lambda))
        throw std::logic_error("canonical parity cocycle is not realizable by a source-sink structure");
    return lambda;
}

LSSS cochain_to_lsss(const Diagram& d, const Cochain& alpha) {
    if (alpha.ring != Ring::Z2) throw std::invalid_argument("cochain_to_lsss expects a mod-2 cochain");
    if (!covering_graph_connected(d))
        throw std::invalid_argument("cochain_to_lsss requires a connected covering graph");
    Cochain vp = parity_cocycle(d);
    if (!cohomologous(d, alpha, vp).cohomologous)
        throw std::invalid_argument("cochain is not a representative of the parity class");
    LSSS lambda;
    if (!propagate(d, alpha, lambda))
        throw std::invalid_argument("cochain is not realizable by a source-sink structure");
    return lambda;
}

StateCheckReport state_cocycle_check(const Diagram& d, const std::map<int, int>& s, const LSSS* lambda) {
    StateCheckReport report;
    StateResolution res = kauffman_state(d, s);

    // locate the two passages of each virtual crossing
    std::map<int, std::vector<int>> virt_arcs;  // virtual id -> arcs carrying its passages
    for (const LongArc& a : d.arcs)
        for (const Passage& p : a.virtuals) virt_arcs[p.id].push_back(a.id);

    LSSS canonical;
    if (!lambda) {
        canonical = canonical_lsss(d);
        lambda = &canonical;
    }
    Cochain ssc = lsss_cochain(d, *lambda);

    for (size_t gi = 0; gi < res.components.size(); ++gi) {
        const auto& gamma = res.components[gi];
        // vi(gamma): each virtual passage of the component contributes its
        // transverse sign times the traversal directions of both arcs of the
        // virtual crossing (a reversed strand sees the opposite sign).
        Int vi_total = 0;
        Int loci = 0;
        for (const auto& step : gamma.arcs) {
            loci += ssc.values[step.arc];
            for (const Passage& p : d.arcs[step.arc].virtuals) {
                const auto& pair_arcs = virt_arcs.at(p.id);
                int partner_arc = (pair_arcs[0] == step.arc) ? pair_arcs[1] : pair_arcs[0];
                int dir_self = step.forward ? 1 : -1;
                int dir_partner = res.arc_location[partner_arc].forward ? 1 : -1;
                vi_total = checked_add(vi_total, static_cast<Int>(p.sign) * dir_self * dir_partner);
            }
        }
        if (vi_total != 0)
            report.violations.push_back({static_cast<int>(gi), "virtual index cocycle nonzero on state component", vi_total});
        if (loci % 2 != 0)
            report.violations.push_back({static_cast<int>(gi), "odd cut locus count on state component", loci});
    }
    return report;
}

}  // namespace vknot
