#include "vknot/khovanov.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <climits>
#include <random>
#include <sstream>

#include "vknot/index.hpp"

namespace vknot {

namespace {

using Comp = KhovanovBuild::Comp;
using Item = KhovanovBuild::Item;

int loci_between(const Comp& comp, int from_item, int to_item) {
    const int n = static_cast<int>(comp.items.size());
    int count = 0;
    for (int i = (from_item + 1) % n; i != to_item; i = (i + 1) % n)
        if (comp.items[i].type == Item::Type::Locus) ++count;
    return count;
}

std::vector<int> cross_items(const Comp& comp, int crossing) {
    std::vector<int> out;
    for (int i = 0; i < static_cast<int>(comp.items.size()); ++i)
        if (comp.items[i].type == Item::Type::Cross && comp.items[i].crossing == crossing) out.push_back(i);
    return out;
}

}  // namespace

int cut_locus_distance(const Comp& comp, int item_a, int item_b) {
    int forward = loci_between(comp, item_a, item_b);
    int backward = loci_between(comp, item_b, item_a);
    if ((forward + backward) % 2 != 0)
        throw std::logic_error("component carries an odd number of cut loci");
    return forward % 2;
}

int cut_locus_to_star(const Comp& comp, int crossing) {
    std::vector<int> at = cross_items(comp, crossing);
    if (at.empty()) throw std::invalid_argument("component does not pass the crossing");
    int l = cut_locus_distance(comp, at[0], comp.star);
#ifndef NDEBUG
    for (int i : at) assert(cut_locus_distance(comp, i, comp.star) == l);
#endif
    return l;
}

const KhovanovBuild::Edge& KhovanovBuild::edge(uint32_t from, uint32_t to) const {
    for (const Edge& e : edges)
        if (e.from == from && e.to == to) return e;
    throw std::invalid_argument("no such cube edge");
}

AuxData default_aux(const Diagram& d) {
    AuxData aux;
    aux.lambda = canonical_lsss(d);
    for (const CrossingInfo& x : d.crossings) aux.dir.link_in[x.label] = true;
    return aux;
}

AuxData random_aux(const Diagram& d, uint64_t seed) {
    std::mt19937_64 rng(seed);
    AuxData aux;
    aux.lambda = canonical_lsss(d);
    for (auto& [c, r] : aux.lambda.inward)
        if (rng() & 1) r = other(r);
    for (const CrossingInfo& x : d.crossings) aux.dir.link_in[x.label] = rng() & 1;
    aux.random_seed = seed;
    return aux;
}

namespace {

struct Builder {
    const Diagram& d;
    const AuxData& aux;
    Cochain ssc;
    int n = 0;
    std::vector<int> labels;  // crossing labels in bit order

    Builder(const Diagram& diagram, const AuxData& a)
        : d(diagram), aux(a), ssc(lsss_cochain(diagram, a.lambda)) {
        n = d.classical_count();
        for (const CrossingInfo& x : d.crossings) labels.push_back(x.label);
    }

    Comp make_comp(const StateResolution::Component& src) {
        Comp comp;
        comp.arcs = src.arcs;
        comp.min_arc = INT_MAX;
        long long smallest_label = LLONG_MAX;
        for (const auto& step : src.arcs) comp.min_arc = std::min(comp.min_arc, step.arc);
        for (const auto& cs : src.crossings) smallest_label = std::min(smallest_label, (long long)cs.crossing);
        comp.order_key = smallest_label;
        for (size_t k = 0; k < src.arcs.size(); ++k) {
            bool locus = ssc.values[src.arcs[k].arc] != 0;
            Item i0;
            i0.type = Item::Type::Interval;
            i0.arc_step = static_cast<int>(k);
            i0.part = 0;
            comp.items.push_back(i0);
            if (locus) {
                Item loc;
                loc.type = Item::Type::Locus;
                comp.items.push_back(loc);
                Item i1 = i0;
                i1.part = 1;
                comp.items.push_back(i1);
                ++comp.total_loci;
            }
            if (k < src.crossings.size()) {
                Item cr;
                cr.type = Item::Type::Cross;
                cr.crossing = src.crossings[k].crossing;
                cr.smoothing_arc = src.crossings[k].smoothing_arc;
                comp.items.push_back(cr);
            }
        }
        if (comp.total_loci % 2 != 0)
            throw std::logic_error("state component with odd cut locus count");
        // canonical star: the interval with the smallest (arc, part) key
        int best = -1;
        std::tuple<int, int, int> best_key{INT_MAX, 0, 0};
        for (int i = 0; i < static_cast<int>(comp.items.size()); ++i) {
            const Item& it = comp.items[i];
            if (it.type != Item::Type::Interval) continue;
            std::tuple<int, int, int> key{comp.arcs[it.arc_step].arc, it.part, i};
            if (key < best_key) {
                best_key = key;
                best = i;
            }
        }
        comp.star = best;
        return comp;
    }

    KhovanovBuild::State make_state(uint32_t mask, std::mt19937_64* rng) {
        StateResolution sres = kauffman_state(d, state_from_mask(d, mask));
        KhovanovBuild::State st;
        st.mask = mask;
        for (const auto& c : sres.components) st.comps.push_back(make_comp(c));

        const int k = static_cast<int>(st.comps.size());
        std::vector<int> order(k);
        for (int i = 0; i < k; ++i) order[i] = i;
        std::sort(order.begin(), order.end(), [&](int a, int b) {
            return std::tie(st.comps[a].order_key, st.comps[a].min_arc) <
                   std::tie(st.comps[b].order_key, st.comps[b].min_arc);
        });
        if (auto it = aux.sigma_override.find(mask); it != aux.sigma_override.end()) {
            order = it->second;
            if (static_cast<int>(order.size()) != k) throw std::invalid_argument("sigma override size mismatch");
        } else if (rng) {
            std::shuffle(order.begin(), order.end(), *rng);
        }
        st.sigma = order;
        st.sigma_inv.assign(k, 0);
        for (int i = 0; i < k; ++i) st.sigma_inv[order[i]] = i;

        for (int ci = 0; ci < k; ++ci) {
            if (auto it = aux.star_override.find({mask, ci}); it != aux.star_override.end()) {
                const Item& item = st.comps[ci].items.at(it->second);
                if (item.type != Item::Type::Interval)
                    throw std::invalid_argument("star override must name an interval item");
                st.comps[ci].star = it->second;
            } else if (rng) {
                std::vector<int> intervals;
                for (int i = 0; i < static_cast<int>(st.comps[ci].items.size()); ++i)
                    if (st.comps[ci].items[i].type == Item::Type::Interval) intervals.push_back(i);
                st.comps[ci].star =
                    intervals[std::uniform_int_distribution<size_t>(0, intervals.size() - 1)(*rng)];
            }
        }
        return st;
    }

    // component indices through crossing c, ordered by the direction system
    std::vector<int> local_order(const KhovanovBuild::State& st, int crossing, int resolution) const {
        Role inward = aux.lambda.at(crossing);
        bool pick_in = aux.dir.at(crossing);
        bool oriented = (resolution == 0) == (d.crossing(crossing).sign > 0);
        // the distinguished end lies on smoothing strand 0 (through Over-in)
        // when it matches that strand's end set
        bool on_strand0;
        if (oriented)
            on_strand0 = (inward == Role::Over && pick_in) || (inward == Role::Under && !pick_in);
        else
            on_strand0 = pick_in;
        int first_arc = on_strand0 ? 0 : 1;

        int first_comp = -1, second_comp = -1;
        for (int ci = 0; ci < static_cast<int>(st.comps.size()); ++ci)
            for (const Item& it : st.comps[ci].items)
                if (it.type == Item::Type::Cross && it.crossing == crossing) {
                    (it.smoothing_arc == first_arc ? first_comp : second_comp) = ci;
                }
        if (first_comp < 0 || second_comp < 0) throw std::logic_error("crossing strands not found in state");
        return {first_comp, second_comp};
    }

    static std::vector<int> sigma_list(const KhovanovBuild::State& st) { return st.sigma; }

    // order with the through components first, then the rest in sigma order
    static std::vector<int> sigma_adjusted(const KhovanovBuild::State& st, const std::vector<int>& through) {
        std::vector<int> out;
        out.push_back(through[0]);
        if (through[1] != through[0]) out.push_back(through[1]);
        for (int ci : st.sigma)
            if (ci != through[0] && ci != through[1]) out.push_back(ci);
        return out;
    }

    static std::vector<int> spectators_by_key(const KhovanovBuild::State& st, const std::vector<int>& through) {
        std::vector<int> out;
        for (int ci : st.sigma)
            if (ci != through[0] && ci != through[1]) out.push_back(st.comps[ci].min_arc);
        return out;
    }
};

}  // namespace

KhovanovBuild build_khovanov(const Diagram& d, const AuxData& aux, int max_crossings) {
    if (d.classical_count() > max_crossings)
        throw std::invalid_argument("state cube would exceed the crossing cap");
    {
        ValidationReport vr = validate(d.code, ValidationLevel::Cohomological);
        if (!vr.ok()) throw std::invalid_argument("khovanov requires a cohomologically valid code");
    }

    KhovanovBuild out;
    out.diagram = d;
    out.aux = aux;
    Builder builder(d, aux);
    const int n = builder.n;

    std::optional<std::mt19937_64> rng;
    if (aux.random_seed) rng.emplace(*aux.random_seed);
    for (uint32_t mask = 0; mask < (1u << n); ++mask)
        out.states.push_back(builder.make_state(mask, rng ? &*rng : nullptr));

    // degree layout
    std::vector<std::vector<uint32_t>> level(n + 1);
    for (uint32_t mask = 0; mask < (1u << n); ++mask) level[std::popcount(mask)].push_back(mask);
    std::vector<int> offset(1u << n, 0);
    out.complex.dims.assign(n + 1, 0);
    out.complex.basis_labels.assign(n + 1, {});
    for (int h = 0; h <= n; ++h)
        for (uint32_t mask : level[h]) {
            offset[mask] = out.complex.dims[h];
            out.complex.dims[h] += out.states[mask].rank();
            for (int b2 = 0; b2 < out.states[mask].rank(); ++b2) {
                std::ostringstream lbl;
                lbl << "s=";
                for (int i = 0; i < n; ++i) lbl << ((mask >> i) & 1);
                lbl << "|x=";
                for (size_t i = 0; i < out.states[mask].comps.size(); ++i) lbl << ((b2 >> i) & 1 ? 'X' : '1');
                out.complex.basis_labels[h].push_back(lbl.str());
            }
        }
    for (int h = 0; h < n; ++h) out.complex.d.push_back(IntMatrix(out.complex.dims[h + 1], out.complex.dims[h]));

    for (uint32_t from = 0; from < (1u << n); ++from) {
        for (int bit = 0; bit < n; ++bit) {
            if (from & (1u << bit)) continue;
            uint32_t to = from | (1u << bit);
            int crossing = builder.labels[bit];
            const auto& S = out.states[from];
            const auto& T = out.states[to];

            std::vector<int> through_s = builder.local_order(S, crossing, 0);
            std::vector<int> through_t = builder.local_order(T, crossing, 1);
            int n_s = through_s[0] == through_s[1] ? 1 : 2;
            int n_t = through_t[0] == through_t[1] ? 1 : 2;

            KhovanovBuild::Edge edge;
            edge.from = from;
            edge.to = to;
            edge.crossing = crossing;
            edge.block = IntMatrix(T.rank(), S.rank());

            if (n_s == 1 && n_t == 1) {
                edge.kind = SurgeryKind::SingleCircle;
                edge.sign = 1;
                out.edges.push_back(std::move(edge));
                continue;
            }
            edge.kind = n_s == 2 ? SurgeryKind::Merge : SurgeryKind::Split;
            if (n_s == 2 && n_t == 2) throw std::logic_error("cube edge changes two circles into two");

            // spectator matching by arc content
            std::map<int, int> spect_t;  // min_arc -> comp index in T
            for (int ci = 0; ci < static_cast<int>(T.comps.size()); ++ci)
                if (ci != through_t[0] && ci != through_t[1]) spect_t[T.comps[ci].min_arc] = ci;

            // sign(s, s')
            int sgn = perm_sign(Builder::sigma_list(S), Builder::sigma_adjusted(S, through_s));
            sgn *= perm_sign(Builder::sigma_list(T), Builder::sigma_adjusted(T, through_t));
            sgn *= perm_sign(Builder::spectators_by_key(S, through_s), Builder::spectators_by_key(T, through_t));
            edge.sign = sgn;

            std::map<int, int> spect_target;
            for (int ci = 0; ci < static_cast<int>(S.comps.size()); ++ci) {
                if (ci == through_s[0] || ci == through_s[1]) continue;
                auto it = spect_t.find(S.comps[ci].min_arc);
                if (it == spect_t.end()) throw std::logic_error("spectator component lost across a cube edge");
                spect_target[ci] = it->second;
            }

            const int ks = static_cast<int>(S.comps.size());
            for (int src_bits = 0; src_bits < S.rank(); ++src_bits) {
                // gather labels per component: (coef, is_x)
                Int coef = sgn;
                std::vector<int> src_label(ks);
                for (int slot = 0; slot < ks; ++slot) src_label[S.sigma[slot]] = (src_bits >> slot) & 1;

                // targets: list of (component in T -> label) with coefficient
                struct Term {
                    Int coef;
                    std::map<int, int> labels;
                };
                std::vector<Term> terms{{coef, {}}};

                for (const auto& [sci, tci] : spect_target) {
                    int l = cut_locus_distance(S.comps[sci], S.comps[sci].star, T.comps[tci].star);
                    int lab = src_label[sci];
                    Int factor = (lab == 1 && l % 2 == 1) ? -1 : 1;
                    for (Term& t : terms) {
                        t.coef = checked_mul(t.coef, factor);
                        t.labels[tci] = lab;
                    }
                }

                if (edge.kind == SurgeryKind::Merge) {
                    int g1 = through_s[0], g2 = through_s[1], gt = through_t[0];
                    VElem u = src_label[g1] ? VElem::gen() : VElem::unit();
                    VElem v = src_label[g2] ? VElem::gen() : VElem::unit();
                    u = frob_tau_pow(u, cut_locus_to_star(S.comps[g1], crossing));
                    v = frob_tau_pow(v, cut_locus_to_star(S.comps[g2], crossing));
                    VElem w = frob_m(u, v);
                    w = frob_tau_pow(w, cut_locus_to_star(T.comps[gt], crossing));
                    if (w.one == 0 && w.x == 0) continue;
                    int lab = w.x != 0 ? 1 : 0;
                    Int factor = lab ? w.x : w.one;
                    for (Term& t : terms) {
                        t.coef = checked_mul(t.coef, factor);
                        t.labels[gt] = lab;
                    }
                } else {
                    int g = through_s[0];
                    int t1 = through_t[0], t2 = through_t[1];
                    VElem u = src_label[g] ? VElem::gen() : VElem::unit();
                    u = frob_tau_pow(u, cut_locus_to_star(S.comps[g], crossing));
                    VTensor2 dd = frob_delta(u);
                    int l1 = cut_locus_to_star(T.comps[t1], crossing);
                    int l2 = cut_locus_to_star(T.comps[t2], crossing);
                    std::vector<Term> expanded;
                    struct Piece {
                        Int c;
                        int lab1, lab2;
                    };
                    std::vector<Piece> pieces;
                    if (dd.c11 != 0) pieces.push_back({dd.c11, 0, 0});
                    if (dd.c1x != 0) pieces.push_back({dd.c1x, 0, 1});
                    if (dd.cx1 != 0) pieces.push_back({dd.cx1, 1, 0});
                    if (dd.cxx != 0) pieces.push_back({dd.cxx, 1, 1});
                    for (Piece& p : pieces) {
                        if (p.lab1 == 1 && l1 % 2 == 1) p.c = checked_neg(p.c);
                        if (p.lab2 == 1 && l2 % 2 == 1) p.c = checked_neg(p.c);
                        for (const Term& t : terms) {
                            Term nt = t;
                            nt.coef = checked_mul(nt.coef, p.c);
                            nt.labels[t1] = p.lab1;
                            nt.labels[t2] = p.lab2;
                            expanded.push_back(std::move(nt));
                        }
                    }
                    terms = std::move(expanded);
                }

                for (const Term& t : terms) {
                    int tgt_bits = 0;
                    for (const auto& [tci, lab] : t.labels)
                        if (lab) tgt_bits |= 1 << T.sigma_inv[tci];
                    edge.block.at(tgt_bits, src_bits) =
                        checked_add(edge.block.at(tgt_bits, src_bits), t.coef);
                }
            }
            out.edges.push_back(std::move(edge));
        }
    }

    // assemble degree matrices
    for (const auto& e : out.edges) {
        int h = std::popcount(e.from);
        IntMatrix& dh = out.complex.d[h];
        for (int r = 0; r < e.block.rows(); ++r)
            for (int c = 0; c < e.block.cols(); ++c)
                if (e.block.at(r, c) != 0)
                    dh.at(offset[e.to] + r, offset[e.from] + c) =
                        checked_add(dh.at(offset[e.to] + r, offset[e.from] + c), e.block.at(r, c));
    }

    for (int h = 0; h + 1 < static_cast<int>(out.complex.d.size()); ++h) {
        IntMatrix sq = out.complex.d[h + 1] * out.complex.d[h];
        if (!sq.is_zero()) throw std::logic_error("khovanov differential does not square to zero");
    }
    return out;
}

HomologyGroups homology(const ChainComplex& c) {
    HomologyGroups h;
    const int top = static_cast<int>(c.dims.size()) - 1;
    std::vector<SmithResult> snf(c.d.size());
    for (size_t i = 0; i < c.d.size(); ++i) snf[i] = smith_normal_form(c.d[i]);
    for (int deg = 0; deg <= top; ++deg) {
        Int rank_out = deg < static_cast<int>(c.d.size()) ? snf[deg].rank : 0;
        Int rank_in = deg > 0 ? snf[deg - 1].rank : 0;
        HomologyGroups::Group g;
        g.rank = c.dims[deg] - rank_out - rank_in;
        if (deg > 0)
            for (Int inv : snf[deg - 1].invariants)
                if (inv > 1) g.torsion.push_back(inv);
        h.groups.push_back(std::move(g));
    }
    return h;
}

HomologyGroups khovanov_homology(const Diagram& d, const AuxData& aux) {
    return homology(build_khovanov(d, aux).complex);
}

IndependenceReport independence_suite(const Diagram& d, int trials, uint64_t seed) {
    IndependenceReport rep;
    rep.reference = khovanov_homology(d, default_aux(d));
    for (int i = 0; i < trials; ++i) {
        uint64_t s = seed + static_cast<uint64_t>(i);
        HomologyGroups g = khovanov_homology(d, random_aux(d, s));
        if (!(g == rep.reference)) {
            rep.ok = false;
            rep.mismatches.push_back({s, std::move(g)});
        }
    }
    return rep;
}

}  // namespace vknot
