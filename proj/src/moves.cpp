#include "vknot/moves.hpp"

#include <algorithm>
#include <cassert>
#include <random>
#include <sstream>
#include <stdexcept>

#include "vknot/biquandle.hpp"
#include "vknot/index.hpp"
#include "vknot/invariants.hpp"
#include "vknot/khovanov.hpp"

namespace vknot {

namespace {

int comp_len(const ExtendedGaussCode& c, int comp) { return static_cast<int>(c.components[comp].size()); }

int virtual_crossing_count(const ExtendedGaussCode& c) {
    std::set<int> ids;
    for (const auto& comp : c.components)
        for (const auto& p : comp)
            if (!p.classical()) ids.insert(p.id);
    return static_cast<int>(ids.size());
}

int classical_crossing_count(const ExtendedGaussCode& c) {
    std::set<int> ids;
    for (const auto& comp : c.components)
        for (const auto& p : comp)
            if (p.classical()) ids.insert(p.id);
    return static_cast<int>(ids.size());
}

// ---------------------------------------------------------------------------
// R3 case table.
//
// Canonical labels: the triangle has a top strand (over at both of its
// crossings), a bottom strand (under at both) and a middle one.  Crossings:
// TM = top∧mid, TB = top∧bottom, MB = mid∧bottom.  A configuration is the
// passage order along each strand plus the three signs.  The valid set is
// generated from the all-positive three-strand braid configuration by
// reversing strand orientations and by mirroring, which are exactly the
// symmetries of the move.

struct R3Config {
    bool t_first_tm = true;  // top strand meets TM before TB
    bool b_first_tb = true;  // bottom strand meets TB before MB
    bool m_first_tm = true;  // middle strand meets TM (its under end) before MB (its over end)
    int sign_tm = 1, sign_tb = 1, sign_mb = 1;

    int encode() const {
        return (t_first_tm << 0) | (b_first_tb << 1) | (m_first_tm << 2) | ((sign_tm > 0) << 3) |
               ((sign_tb > 0) << 4) | ((sign_mb > 0) << 5);
    }
};

R3Config rev_top(R3Config c) {
    c.t_first_tm = !c.t_first_tm;
    c.sign_tm = -c.sign_tm;
    c.sign_tb = -c.sign_tb;
    return c;
}
R3Config rev_mid(R3Config c) {
    c.m_first_tm = !c.m_first_tm;
    c.sign_tm = -c.sign_tm;
    c.sign_mb = -c.sign_mb;
    return c;
}
R3Config rev_bottom(R3Config c) {
    c.b_first_tb = !c.b_first_tb;
    c.sign_tb = -c.sign_tb;
    c.sign_mb = -c.sign_mb;
    return c;
}
R3Config mirror(R3Config c) {
    // over/under swap: old bottom becomes the top strand; crossings relabel
    // TM <-> MB, TB fixed; all signs flip
    R3Config r;
    r.t_first_tm = !c.b_first_tb;
    r.b_first_tb = !c.t_first_tm;
    r.m_first_tm = !c.m_first_tm;
    r.sign_tm = -c.sign_mb;
    r.sign_tb = -c.sign_tb;
    r.sign_mb = -c.sign_tm;
    return r;
}

const std::set<int>& r3_table() {
    static const std::set<int> table = [] {
        std::set<int> seen;
        std::vector<R3Config> queue{R3Config{}};  // three-strand positive braid seed
        seen.insert(R3Config{}.encode());
        while (!queue.empty()) {
            R3Config c = queue.back();
            queue.pop_back();
            for (R3Config n : {rev_top(c), rev_mid(c), rev_bottom(c), mirror(c)})
                if (seen.insert(n.encode()).second) queue.push_back(n);
        }
        return seen;
    }();
    return table;
}

struct AdjacentPair {
    int comp = 0, pos = 0;  // pair (pos, pos+1 mod len)
    Passage first, second;
};

std::vector<AdjacentPair> classical_adjacent_pairs(const ExtendedGaussCode& code) {
    std::vector<AdjacentPair> out;
    for (int ci = 0; ci < static_cast<int>(code.components.size()); ++ci) {
        const auto& comp = code.components[ci];
        const int n = static_cast<int>(comp.size());
        if (n < 2) continue;
        for (int pi = 0; pi < n; ++pi) {
            const Passage& a = comp[pi];
            const Passage& b = comp[(pi + 1) % n];
            if (a.classical() && b.classical()) out.push_back({ci, pi, a, b});
        }
    }
    return out;
}

// Extracts the canonical configuration from three adjacent pairs; nullopt
// when the pairs do not form a stacked triangle.
std::optional<R3Config> r3_config(const AdjacentPair& p0, const AdjacentPair& p1, const AdjacentPair& p2) {
    const AdjacentPair* top = nullptr;
    const AdjacentPair* mid = nullptr;
    const AdjacentPair* bottom = nullptr;
    for (const AdjacentPair* p : {&p0, &p1, &p2}) {
        if (p->first.id == p->second.id) return std::nullopt;
        bool fo = p->first.role() == Role::Over, so = p->second.role() == Role::Over;
        if (fo && so) top = p;
        else if (!fo && !so) bottom = p;
        else mid = p;
    }
    if (!top || !mid || !bottom) return std::nullopt;

    auto common = [](const AdjacentPair* a, const AdjacentPair* b) -> int {
        for (int x : {a->first.id, a->second.id})
            if (x == b->first.id || x == b->second.id) return x;
        return -1;
    };
    int tm = common(top, mid), tb = common(top, bottom), mb = common(mid, bottom);
    if (tm < 0 || tb < 0 || mb < 0) return std::nullopt;
    if (tm == tb || tm == mb || tb == mb) return std::nullopt;
    std::set<int> ids{top->first.id, top->second.id, mid->first.id, mid->second.id,
                      bottom->first.id, bottom->second.id};
    if (ids != std::set<int>{tm, tb, mb}) return std::nullopt;
    // middle strand must carry the under end of TM and the over end of MB
    const Passage& m_at_tm = mid->first.id == tm ? mid->first : mid->second;
    const Passage& m_at_mb = mid->first.id == mb ? mid->first : mid->second;
    if (m_at_tm.role() != Role::Under || m_at_mb.role() != Role::Over) return std::nullopt;

    R3Config cfg;
    cfg.t_first_tm = top->first.id == tm;
    cfg.b_first_tb = bottom->first.id == tb;
    cfg.m_first_tm = mid->first.id == tm;
    cfg.sign_tm = m_at_tm.sign;
    cfg.sign_tb = (top->first.id == tb ? top->first : top->second).sign;
    cfg.sign_mb = m_at_mb.sign;
    return cfg;
}

bool pairs_disjoint(const AdjacentPair& a, const AdjacentPair& b, const ExtendedGaussCode& code) {
    if (a.comp != b.comp) return true;
    int n = comp_len(code, a.comp);
    std::set<int> used{a.pos, (a.pos + 1) % n};
    return !used.count(b.pos) && !used.count((b.pos + 1) % n);
}

struct Insertion {
    int comp = 0, pos = 0;
    // ties at one gap: lower rank ends up earlier in the component
    int rank = 0;
    std::vector<Passage> passages;
};

ExtendedGaussCode insert_all(ExtendedGaussCode code, std::vector<Insertion> ins) {
    std::stable_sort(ins.begin(), ins.end(), [](const Insertion& a, const Insertion& b) {
        return std::tie(a.comp, a.pos, a.rank) > std::tie(b.comp, b.pos, b.rank);
    });
    for (const Insertion& i : ins) {
        auto& comp = code.components.at(i.comp);
        comp.insert(comp.begin() + i.pos, i.passages.begin(), i.passages.end());
    }
    return code;
}

ExtendedGaussCode remove_positions(ExtendedGaussCode code, std::vector<std::pair<int, int>> positions) {
    std::sort(positions.begin(), positions.end(), std::greater<>());
    for (auto [ci, pi] : positions) {
        auto& comp = code.components.at(ci);
        comp.erase(comp.begin() + pi);
    }
    return code;
}

// Adds virtual crossing pairs so the virtual index cocycle equals the
// canonical one exactly; a no-op on codes that are already consistent.  This
// is the detour part of a non-local classical insertion.
ExtendedGaussCode complete_virtual_data(ExtendedGaussCode code) {
    Diagram d = long_arcs(code);
    Cochain vi = virtual_index_cocycle(d);
    Cochain ci = canonical_index_cocycle(d);
    if (cohomologous(d, vi, ci).cohomologous) return code;

    std::vector<Int> delta(d.arcs.size());
    for (int a = 0; a < d.arc_count(); ++a) delta[a] = ci.values[a] - vi.values[a];

    auto arc_gap = [&](int arc) -> std::pair<int, int> {
        const LongArc& a = d.arcs[arc];
        if (a.closed) return {a.component, comp_len(code, a.component)};
        const CrossingInfo& x = d.crossing(a.end_crossing);
        PassagePos p = a.end_role == Role::Over ? x.pos_over : x.pos_under;
        return {p.comp, p.idx};
    };

    int fresh = code.max_id();
    std::vector<Insertion> ins;
    int pos_arc = 0, neg_arc = 0;
    for (;;) {
        while (pos_arc < d.arc_count() && delta[pos_arc] <= 0) ++pos_arc;
        while (neg_arc < d.arc_count() && delta[neg_arc] >= 0) ++neg_arc;
        if (pos_arc >= d.arc_count() || neg_arc >= d.arc_count()) break;
        ++fresh;
        auto [pc, pp] = arc_gap(pos_arc);
        auto [nc, np] = arc_gap(neg_arc);
        ins.push_back({pc, pp, 0, {Passage::virt(fresh, +1)}});
        ins.push_back({nc, np, 0, {Passage::virt(fresh, -1)}});
        --delta[pos_arc];
        ++delta[neg_arc];
    }
    for (Int v : delta)
        if (v != 0) throw std::logic_error("virtual completion defect does not balance");
    return insert_all(std::move(code), std::move(ins));
}

void require_gap(const ExtendedGaussCode& code, int comp, int gap, const char* what) {
    if (comp < 0 || comp >= static_cast<int>(code.components.size()))
        throw std::invalid_argument(std::string(what) + ": component out of range");
    if (gap < 0 || gap > static_cast<int>(code.components[comp].size()))
        throw std::invalid_argument(std::string(what) + ": gap out of range");
}

void require_pos(const ExtendedGaussCode& code, int comp, int pos, const char* what) {
    if (comp < 0 || comp >= static_cast<int>(code.components.size()))
        throw std::invalid_argument(std::string(what) + ": component out of range");
    if (pos < 0 || pos >= static_cast<int>(code.components[comp].size()))
        throw std::invalid_argument(std::string(what) + ": position out of range");
}

const Passage& passage_at(const ExtendedGaussCode& code, int comp, int pos) {
    const auto& c = code.components.at(comp);
    return c.at(static_cast<size_t>(pos % static_cast<int>(c.size())));
}

}  // namespace

std::string move_name(const Move& m) {
    struct Visitor {
        std::string operator()(const R1Add&) { return "R1+"; }
        std::string operator()(const R1Remove&) { return "R1-"; }
        std::string operator()(const R2Add&) { return "R2+"; }
        std::string operator()(const R2Remove&) { return "R2-"; }
        std::string operator()(const R3Move&) { return "R3"; }
        std::string operator()(const VPairAdd&) { return "VRpair+"; }
        std::string operator()(const VPairRemove&) { return "VRpair-"; }
        std::string operator()(const CoboundaryMove&) { return "Coboundary"; }
    };
    return std::visit(Visitor{}, m);
}

std::string move_describe(const Move& m) {
    std::ostringstream os;
    os << move_name(m) << " ";
    if (auto* r = std::get_if<R1Add>(&m))
        os << "comp " << r->comp << " gap " << r->gap << (r->over_first ? " O-first" : " U-first")
           << (r->sign > 0 ? " +" : " -");
    else if (auto* r = std::get_if<R1Remove>(&m))
        os << "comp " << r->comp << " pos " << r->pos;
    else if (auto* r = std::get_if<R2Add>(&m))
        os << "A(" << r->comp_a << "," << r->gap_a << ") B(" << r->comp_b << "," << r->gap_b << ")"
           << (r->parallel ? " par" : " anti") << (r->sign > 0 ? " +" : " -");
    else if (auto* r = std::get_if<R2Remove>(&m))
        os << "A(" << r->comp_a << "," << r->pos_a << ") B(" << r->comp_b << "," << r->pos_b << ")";
    else if (auto* r = std::get_if<R3Move>(&m))
        os << "(" << r->comp[0] << "," << r->pos[0] << ")(" << r->comp[1] << "," << r->pos[1] << ")("
           << r->comp[2] << "," << r->pos[2] << ")";
    else if (auto* r = std::get_if<VPairAdd>(&m))
        os << "comp " << r->comp << " gap " << r->gap << (r->plus_first ? " +-" : " -+");
    else if (auto* r = std::get_if<VPairRemove>(&m))
        os << "comp " << r->comp << " pos " << r->pos;
    else if (auto* r = std::get_if<CoboundaryMove>(&m))
        os << "crossing " << r->crossing << " eps " << r->eps;
    return os.str();
}

std::vector<Move> enumerate_moves(const ExtendedGaussCode& code) {
    std::vector<Move> moves;
    const int ncomp = static_cast<int>(code.components.size());

    // insertions at every gap
    for (int ci = 0; ci < ncomp; ++ci) {
        int gaps = std::max(1, comp_len(code, ci));
        for (int g = 0; g < gaps; ++g) {
            for (bool over_first : {true, false})
                for (int sign : {1, -1}) moves.push_back(R1Add{ci, g, over_first, sign});
            for (bool plus_first : {true, false}) moves.push_back(VPairAdd{ci, g, plus_first});
        }
    }
    for (int ca = 0; ca < ncomp; ++ca)
        for (int ga = 0; ga < std::max(1, comp_len(code, ca)); ++ga)
            for (int cb = 0; cb < ncomp; ++cb)
                for (int gb = 0; gb < std::max(1, comp_len(code, cb)); ++gb)
                    for (bool parallel : {true, false})
                        for (int sign : {1, -1}) moves.push_back(R2Add{ca, ga, cb, gb, parallel, sign});

    // removals
    for (int ci = 0; ci < ncomp; ++ci) {
        const auto& comp = code.components[ci];
        const int n = static_cast<int>(comp.size());
        if (n < 2) continue;
        for (int pi = 0; pi < n; ++pi) {
            const Passage& a = comp[pi];
            const Passage& b = comp[(pi + 1) % n];
            if (a.id == b.id && a.classical() && b.classical()) moves.push_back(R1Remove{ci, pi});
            if (a.id == b.id && !a.classical() && !b.classical()) moves.push_back(VPairRemove{ci, pi});
        }
    }
    {
        auto pairs = classical_adjacent_pairs(code);
        for (const AdjacentPair& over : pairs) {
            if (over.first.role() != Role::Over || over.second.role() != Role::Over) continue;
            if (over.first.id == over.second.id || over.first.sign != -over.second.sign) continue;
            for (const AdjacentPair& under : pairs) {
                if (under.first.role() != Role::Under || under.second.role() != Role::Under) continue;
                if (std::set<int>{under.first.id, under.second.id} !=
                    std::set<int>{over.first.id, over.second.id})
                    continue;
                if (!pairs_disjoint(over, under, code)) continue;
                moves.push_back(R2Remove{over.comp, over.pos, under.comp, under.pos});
            }
        }
        for (size_t i = 0; i < pairs.size(); ++i)
            for (size_t j = i + 1; j < pairs.size(); ++j)
                for (size_t k = j + 1; k < pairs.size(); ++k) {
                    if (!pairs_disjoint(pairs[i], pairs[j], code) ||
                        !pairs_disjoint(pairs[i], pairs[k], code) ||
                        !pairs_disjoint(pairs[j], pairs[k], code))
                        continue;
                    auto cfg = r3_config(pairs[i], pairs[j], pairs[k]);
                    if (!cfg || !r3_table().count(cfg->encode())) continue;
                    R3Move m;
                    m.comp[0] = pairs[i].comp;
                    m.pos[0] = pairs[i].pos;
                    m.comp[1] = pairs[j].comp;
                    m.pos[1] = pairs[j].pos;
                    m.comp[2] = pairs[k].comp;
                    m.pos[2] = pairs[k].pos;
                    moves.push_back(m);
                }
    }

    // coboundary moves at every classical crossing
    std::set<int> classical;
    for (const auto& comp : code.components)
        for (const auto& p : comp)
            if (p.classical()) classical.insert(p.id);
    for (int c : classical)
        for (int eps : {1, -1}) moves.push_back(CoboundaryMove{c, eps});

    return moves;
}

ExtendedGaussCode apply_move(const ExtendedGaussCode& code, const Move& m) {
    if (const auto* r = std::get_if<R1Add>(&m)) {
        require_gap(code, r->comp, r->gap, "R1+");
        int id = code.max_id() + 1;
        Passage o = Passage::classic(id, Role::Over, r->sign);
        Passage u = Passage::classic(id, Role::Under, r->sign);
        std::vector<Passage> pair = r->over_first ? std::vector<Passage>{o, u} : std::vector<Passage>{u, o};
        return insert_all(code, {{r->comp, r->gap, 0, pair}});
    }
    if (const auto* r = std::get_if<VPairAdd>(&m)) {
        require_gap(code, r->comp, r->gap, "VRpair+");
        int id = code.max_id() + 1;
        std::vector<Passage> pair{Passage::virt(id, r->plus_first ? 1 : -1),
                                  Passage::virt(id, r->plus_first ? -1 : 1)};
        return insert_all(code, {{r->comp, r->gap, 0, pair}});
    }
    if (const auto* r = std::get_if<R1Remove>(&m)) {
        require_pos(code, r->comp, r->pos, "R1-");
        const auto& comp = code.components.at(r->comp);
        int n = static_cast<int>(comp.size());
        const Passage& a = passage_at(code, r->comp, r->pos);
        const Passage& b = passage_at(code, r->comp, (r->pos + 1) % n);
        if (!(a.classical() && b.classical() && a.id == b.id)) throw std::invalid_argument("R1-: no kink here");
        return remove_positions(code, {{r->comp, r->pos}, {r->comp, (r->pos + 1) % n}});
    }
    if (const auto* r = std::get_if<VPairRemove>(&m)) {
        require_pos(code, r->comp, r->pos, "VRpair-");
        const auto& comp = code.components.at(r->comp);
        int n = static_cast<int>(comp.size());
        const Passage& a = passage_at(code, r->comp, r->pos);
        const Passage& b = passage_at(code, r->comp, (r->pos + 1) % n);
        if (!(!a.classical() && !b.classical() && a.id == b.id))
            throw std::invalid_argument("VRpair-: no cancelling pair here");
        return remove_positions(code, {{r->comp, r->pos}, {r->comp, (r->pos + 1) % n}});
    }
    if (const auto* r = std::get_if<R2Add>(&m)) {
        require_gap(code, r->comp_a, r->gap_a, "R2+");
        require_gap(code, r->comp_b, r->gap_b, "R2+");
        int id1 = code.max_id() + 1, id2 = code.max_id() + 2;
        Passage ao = Passage::classic(id1, Role::Over, r->sign);
        Passage am = Passage::classic(id2, Role::Over, -r->sign);
        Passage bo = Passage::classic(id1, Role::Under, r->sign);
        Passage bm = Passage::classic(id2, Role::Under, -r->sign);
        std::vector<Passage> a_pair{ao, am};
        std::vector<Passage> b_pair = r->parallel ? std::vector<Passage>{bo, bm} : std::vector<Passage>{bm, bo};
        std::vector<Insertion> ins;
        if (r->comp_a == r->comp_b && r->gap_a == r->gap_b) {
            std::vector<Passage> all = a_pair;
            all.insert(all.end(), b_pair.begin(), b_pair.end());
            ins.push_back({r->comp_a, r->gap_a, 0, all});
        } else {
            ins.push_back({r->comp_a, r->gap_a, 0, a_pair});
            ins.push_back({r->comp_b, r->gap_b, 0, b_pair});
        }
        return complete_virtual_data(insert_all(code, std::move(ins)));
    }
    if (const auto* r = std::get_if<R2Remove>(&m)) {
        require_pos(code, r->comp_a, r->pos_a, "R2-");
        require_pos(code, r->comp_b, r->pos_b, "R2-");
        const auto& ca = code.components.at(r->comp_a);
        const auto& cb = code.components.at(r->comp_b);
        int na = static_cast<int>(ca.size()), nb = static_cast<int>(cb.size());
        const Passage& a1 = passage_at(code, r->comp_a, r->pos_a);
        const Passage& a2 = passage_at(code, r->comp_a, (r->pos_a + 1) % na);
        const Passage& b1 = passage_at(code, r->comp_b, r->pos_b);
        const Passage& b2 = passage_at(code, r->comp_b, (r->pos_b + 1) % nb);
        bool ok = a1.classical() && a2.classical() && b1.classical() && b2.classical() &&
                  a1.role() == a2.role() && b1.role() == b2.role() && a1.role() == other(b1.role()) &&
                  a1.id != a2.id && a1.sign == -a2.sign &&
                  std::set<int>{a1.id, a2.id} == std::set<int>{b1.id, b2.id};
        if (!ok) throw std::invalid_argument("R2-: no cancelling bigon here");
        return remove_positions(code, {{r->comp_a, r->pos_a},
                                       {r->comp_a, (r->pos_a + 1) % na},
                                       {r->comp_b, r->pos_b},
                                       {r->comp_b, (r->pos_b + 1) % nb}});
    }
    if (const auto* r = std::get_if<R3Move>(&m)) {
        std::vector<AdjacentPair> pairs;
        for (int i = 0; i < 3; ++i) {
            require_pos(code, r->comp[i], r->pos[i], "R3");
            const auto& comp = code.components.at(r->comp[i]);
            int n = static_cast<int>(comp.size());
            const Passage& a = passage_at(code, r->comp[i], r->pos[i]);
            const Passage& b = passage_at(code, r->comp[i], (r->pos[i] + 1) % n);
            if (!a.classical() || !b.classical()) throw std::invalid_argument("R3: site is not classical");
            pairs.push_back({r->comp[i], r->pos[i], a, b});
        }
        if (!pairs_disjoint(pairs[0], pairs[1], code) || !pairs_disjoint(pairs[0], pairs[2], code) ||
            !pairs_disjoint(pairs[1], pairs[2], code))
            throw std::invalid_argument("R3: overlapping sites");
        auto cfg = r3_config(pairs[0], pairs[1], pairs[2]);
        if (!cfg || !r3_table().count(cfg->encode()))
            throw std::invalid_argument("R3: configuration is not a valid triangle");
        ExtendedGaussCode out = code;
        for (int i = 0; i < 3; ++i) {
            auto& comp = out.components[r->comp[i]];
            int n = static_cast<int>(comp.size());
            std::swap(comp[r->pos[i]], comp[(r->pos[i] + 1) % n]);
        }
        return out;
    }
    const auto* r = std::get_if<CoboundaryMove>(&m);
    if (!r) throw std::invalid_argument("unknown move");
    Diagram d = long_arcs(code);
    const CrossingInfo& x = d.crossing(r->crossing);
    int id1 = code.max_id() + 1, id2 = code.max_id() + 2;
    std::vector<Insertion> ins;
    // outgoing ends gain +eps, incoming ends -eps; the two fresh virtual
    // crossings pair a +eps passage with a -eps one
    ins.push_back({x.pos_under.comp, x.pos_under.idx + 1, 0, {Passage::virt(id1, r->eps)}});
    ins.push_back({x.pos_over.comp, x.pos_over.idx, 1, {Passage::virt(id1, -r->eps)}});
    ins.push_back({x.pos_over.comp, x.pos_over.idx + 1, 0, {Passage::virt(id2, r->eps)}});
    ins.push_back({x.pos_under.comp, x.pos_under.idx, 1, {Passage::virt(id2, -r->eps)}});
    ExtendedGaussCode out = insert_all(code, std::move(ins));
#ifndef NDEBUG
    {
        Diagram nd = long_arcs(out);
        Cochain vi_new = virtual_index_cocycle(nd);
        Cochain expected = virtual_index_cocycle(d);
        Cochain delta = coboundary(d, r->crossing);
        for (int a = 0; a < d.arc_count(); ++a)
            expected.values[a] = checked_add(expected.values[a], r->eps * delta.values[a]);
        assert(vi_new.values == expected.values);
    }
#endif
    return out;
}

ExtendedGaussCode realize_representative(const ExtendedGaussCode& code, const std::map<int, int>& coefficients) {
    ExtendedGaussCode out = code;
    for (const auto& [crossing, coeff] : coefficients) {
        int eps = coeff > 0 ? 1 : -1;
        for (int k = 0; k < std::abs(coeff); ++k) out = vknot::apply_move(out, CoboundaryMove{crossing, eps});
    }
    return out;
}

// ---------------------------------------------------------------------------
// Invariance fuzzer

namespace {

struct Snapshot {
    bool has_q = false, has_wriggle = false, has_colorings = false, has_alexander = false,
         has_khovanov = false, has_parity = false;
    LaurentPoly q;
    std::vector<std::vector<Int>> pairwise;
    std::vector<Int> wriggles;
    long long colorings = 0;
    LaurentPoly alexander;
    std::vector<std::pair<Int, std::vector<Int>>> khovanov;  // trimmed graded groups
    bool parity_trivial = false;
};

std::string snap_field(const Snapshot& s, const std::string& check) {
    std::ostringstream os;
    if (check == "q") os << s.q.str("x", "y");
    if (check == "wriggle") {
        for (const auto& row : s.pairwise) {
            os << "[";
            for (Int v : row) os << v << " ";
            os << "]";
        }
    }
    if (check == "colorings") os << s.colorings;
    if (check == "alexander") os << s.alexander.str();
    if (check == "khovanov") {
        for (const auto& [rank, torsion] : s.khovanov) {
            os << "(" << rank;
            for (Int t : torsion) os << " Z/" << t;
            os << ")";
        }
    }
    if (check == "parity-class") os << (s.parity_trivial ? "trivial" : "nontrivial");
    return os.str();
}

Snapshot take_snapshot(const ExtendedGaussCode& code, const FuzzOptions& opt) {
    Snapshot s;
    Diagram d = long_arcs(code);
    if (opt.checks.count("q")) {
        s.has_q = true;
        s.q = index_polynomial(d);
    }
    if (opt.checks.count("wriggle")) {
        s.has_wriggle = true;
        WriggleReport r = wriggle_report(d);
        s.pairwise = r.pairwise;
        for (const auto& c : r.components) s.wriggles.push_back(c.wriggle);
    }
    if (opt.checks.count("colorings")) {
        s.has_colorings = true;
        static const FiniteBiquandle b = alexander_biquandle(5, 2, 1);
        s.colorings = count_colorings(d, b);
    }
    if (opt.checks.count("alexander")) {
        s.has_alexander = true;
        s.alexander = generalized_alexander(d);
    }
    if (opt.checks.count("khovanov") && d.classical_count() <= opt.khovanov_max_classical) {
        s.has_khovanov = true;
        HomologyGroups h = khovanov_homology(d, default_aux(d));
        size_t lo = 0, hi = h.groups.size();
        auto zero = [&](size_t i) { return h.groups[i].rank == 0 && h.groups[i].torsion.empty(); };
        while (lo < hi && zero(lo)) ++lo;
        while (hi > lo && zero(hi - 1)) --hi;
        for (size_t i = lo; i < hi; ++i) s.khovanov.push_back({h.groups[i].rank, h.groups[i].torsion});
    }
    if (opt.checks.count("parity-class")) {
        s.has_parity = true;
        s.parity_trivial = parity_class_trivial(d);
    }
    return s;
}

std::vector<std::string> failing_checks(const Snapshot& a, const Snapshot& b) {
    std::vector<std::string> bad;
    if (a.has_q && b.has_q && !(a.q == b.q)) bad.push_back("q");
    if (a.has_wriggle && b.has_wriggle && (a.pairwise != b.pairwise || a.wriggles != b.wriggles))
        bad.push_back("wriggle");
    if (a.has_colorings && b.has_colorings && a.colorings != b.colorings) bad.push_back("colorings");
    if (a.has_alexander && b.has_alexander && !(a.alexander == b.alexander)) bad.push_back("alexander");
    if (a.has_khovanov && b.has_khovanov && a.khovanov != b.khovanov) bad.push_back("khovanov");
    if (a.has_parity && b.has_parity && a.parity_trivial != b.parity_trivial) bad.push_back("parity-class");
    return bad;
}

ExtendedGaussCode replay(const ExtendedGaussCode& code, const std::vector<Move>& moves) {
    ExtendedGaussCode c = code;
    for (const Move& m : moves) {
        try {
            c = vknot::apply_move(c, m);
        } catch (const std::invalid_argument&) {
            // skipped during shrinking
        }
    }
    return c;
}

}  // namespace

FuzzReport fuzz(const ExtendedGaussCode& code, const FuzzOptions& options) {
    FuzzReport report;
    std::mt19937_64 rng(options.seed);
    Snapshot baseline = take_snapshot(code, options);

    ExtendedGaussCode current = code;
    std::vector<Move> applied;
    for (int step = 0; step < options.steps; ++step) {
        std::vector<Move> moves = enumerate_moves(current);
        bool allow_insert =
            classical_crossing_count(current) + virtual_crossing_count(current) < options.max_crossings;
        if (!allow_insert) {
            std::vector<Move> shrinking = moves;
            std::erase_if(shrinking, [](const Move& m) {
                return std::holds_alternative<R1Add>(m) || std::holds_alternative<R2Add>(m) ||
                       std::holds_alternative<VPairAdd>(m) || std::holds_alternative<CoboundaryMove>(m);
            });
            if (shrinking.empty()) {
                // over the cap with nothing to cancel: keep walking with the
                // one-crossing insertions
                std::erase_if(moves, [](const Move& m) {
                    return std::holds_alternative<R2Add>(m) || std::holds_alternative<CoboundaryMove>(m);
                });
            } else {
                moves = std::move(shrinking);
            }
        }
        if (moves.empty()) break;
        const Move& m = moves[std::uniform_int_distribution<size_t>(0, moves.size() - 1)(rng)];
        ExtendedGaussCode before = current;
        current = vknot::apply_move(current, m);
        applied.push_back(m);
        report.move_log.push_back(move_describe(m));
        ++report.steps_applied;

        ValidationReport vr = validate(current, ValidationLevel::Cohomological);
        Snapshot now = take_snapshot(current, options);
        // the parity class lives on the covering graph, which classical
        // moves rebuild; only the graph-preserving moves must preserve it
        bool graph_preserving = std::holds_alternative<VPairAdd>(m) || std::holds_alternative<VPairRemove>(m) ||
                                std::holds_alternative<CoboundaryMove>(m);
        if (!graph_preserving) baseline.parity_trivial = now.parity_trivial;
        std::vector<std::string> bad = failing_checks(baseline, now);
        if (!vr.ok()) bad.push_back("validity");
        if (bad.empty()) continue;

        report.ok = false;
        for (const std::string& check : bad) {
            FuzzReport::Failure f;
            f.check = check;
            f.step = step;
            f.before_code = serialize_egc(before);
            f.after_code = serialize_egc(current);
            f.expected = snap_field(baseline, check);
            f.actual = snap_field(now, check);
            // greedy shrink: drop moves whose removal keeps the check failing
            std::vector<Move> shrunk = applied;
            if (check == "parity-class") {
                // per-move property (graph-preserving moves only); the
                // offending move alone is the witness
                shrunk = {m};
            } else {
                auto still_fails = [&](const std::vector<Move>& seq) {
                    ExtendedGaussCode end = replay(code, seq);
                    if (check == "validity") return !validate(end, ValidationLevel::Cohomological).ok();
                    Snapshot s = take_snapshot(end, options);
                    auto b = failing_checks(baseline, s);
                    return std::find(b.begin(), b.end(), check) != b.end();
                };
                for (size_t i = shrunk.size(); i-- > 0;) {
                    std::vector<Move> candidate = shrunk;
                    candidate.erase(candidate.begin() + i);
                    if (still_fails(candidate)) shrunk = candidate;
                }
            }
            for (const Move& sm : shrunk) f.shrunk_moves.push_back(move_describe(sm));
            f.shrunk = std::move(shrunk);
            report.failures.push_back(std::move(f));
        }
        return report;
    }
    return report;
}

}  // namespace vknot
