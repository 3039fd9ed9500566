#include "vknot/biquandle.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace vknot {

namespace {

bool table_shape_ok(int n, const std::vector<std::vector<int>>& t) {
    if (static_cast<int>(t.size()) != n) return false;
    for (const auto& row : t) {
        if (static_cast<int>(row.size()) != n) return false;
        for (int v : row)
            if (v < 0 || v >= n) return false;
    }
    return true;
}

}  // namespace

std::optional<AxiomViolation> check_biquandle_tables(int n, const std::vector<std::vector<int>>& circ,
                                                     const std::vector<std::vector<int>>& star) {
    if (n <= 0 || !table_shape_ok(n, circ) || !table_shape_ok(n, star))
        throw std::invalid_argument("malformed biquandle tables");

    for (int x = 0; x < n; ++x)
        if (circ[x][x] != star[x][x])
            return AxiomViolation{1, x, -1, -1, "x∘x != x∗x"};

    for (int y = 0; y < n; ++y) {
        std::vector<bool> hit_c(n, false), hit_s(n, false);
        for (int x = 0; x < n; ++x) {
            hit_c[circ[x][y]] = true;
            hit_s[star[x][y]] = true;
        }
        for (int v = 0; v < n; ++v) {
            if (!hit_c[v]) return AxiomViolation{2, -1, y, -1, "x -> x∘y is not invertible"};
            if (!hit_s[v]) return AxiomViolation{2, -1, y, -1, "x -> x∗y is not invertible"};
        }
    }

    std::vector<bool> hit(static_cast<size_t>(n) * n, false);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            int img = circ[x][y] * n + star[y][x];
            if (hit[img])
                return AxiomViolation{3, x, y, -1, "S(x,y) = (x∘y, y∗x) is not a bijection"};
            hit[img] = true;
        }

    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z) {
                if (circ[circ[x][z]][circ[y][z]] != circ[circ[x][y]][star[z][y]])
                    return AxiomViolation{4, x, y, z, "(x∘z)∘(y∘z) != (x∘y)∘(z∗y)"};
                if (star[circ[x][z]][circ[y][z]] != circ[star[x][y]][star[z][y]])
                    return AxiomViolation{4, x, y, z, "(x∘z)∗(y∘z) != (x∗y)∘(z∗y)"};
                if (star[star[x][z]][star[y][z]] != star[star[x][y]][circ[z][y]])
                    return AxiomViolation{4, x, y, z, "(x∗z)∗(y∗z) != (x∗y)∗(z∘y)"};
            }
    return std::nullopt;
}

FiniteBiquandle make_biquandle(int n, std::vector<std::vector<int>> circ, std::vector<std::vector<int>> star) {
    if (auto v = check_biquandle_tables(n, circ, star))
        throw std::invalid_argument("not a biquandle (axiom " + std::to_string(v->axiom) + "): " + v->what);
    return FiniteBiquandle{n, std::move(circ), std::move(star)};
}

int VirtualBiquandle::apply_f(int x, int exponent) const {
    if (exponent >= 0) return f[x];
    for (int y = 0; y < base.n; ++y)
        if (f[y] == x) return y;
    throw std::logic_error("automorphism table is not a permutation");
}

std::optional<AxiomViolation> check_virtual(const FiniteBiquandle& b, const std::vector<int>& f) {
    if (static_cast<int>(f.size()) != b.n) throw std::invalid_argument("automorphism table size mismatch");
    std::vector<bool> hit(b.n, false);
    for (int v : f) {
        if (v < 0 || v >= b.n || hit[v]) return AxiomViolation{2, -1, -1, -1, "f is not a permutation"};
        hit[v] = true;
    }
    for (int x = 0; x < b.n; ++x)
        for (int y = 0; y < b.n; ++y) {
            if (f[b.c(x, y)] != b.c(f[x], f[y])) return AxiomViolation{4, x, y, -1, "f(x∘y) != f(x)∘f(y)"};
            if (f[b.s(x, y)] != b.s(f[x], f[y])) return AxiomViolation{4, x, y, -1, "f(x∗y) != f(x)∗f(y)"};
        }
    return std::nullopt;
}

VirtualBiquandle make_virtual_biquandle(FiniteBiquandle b, std::vector<int> f) {
    if (auto v = check_virtual(b, f)) throw std::invalid_argument("not a virtual biquandle: " + v->what);
    return VirtualBiquandle{std::move(b), std::move(f)};
}

FiniteBiquandle twist(const VirtualBiquandle& vb) {
    const int n = vb.base.n;
    std::vector<int> finv(n);
    for (int x = 0; x < n; ++x) finv[vb.f[x]] = x;
    std::vector<std::vector<int>> circ(n, std::vector<int>(n)), star(n, std::vector<int>(n));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            circ[x][y] = vb.base.c(finv[x], finv[y]);
            star[x][y] = vb.base.s(finv[x], finv[y]);
        }
    return make_biquandle(n, std::move(circ), std::move(star));
}

FiniteBiquandle trivial_biquandle(int n) {
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) t[x][y] = x;
    return FiniteBiquandle{n, t, t};
}

namespace {

int inverse_mod(int a, int m) {
    a %= m;
    if (a < 0) a += m;
    for (int x = 1; x < m; ++x)
        if (a * x % m == 1) return x;
    throw std::invalid_argument(std::to_string(a) + " is not a unit mod " + std::to_string(m));
}

int norm_mod(long long v, int m) {
    v %= m;
    return static_cast<int>(v < 0 ? v + m : v);
}

}  // namespace

FiniteBiquandle alexander_biquandle(int m, int t, int s) {
    int sinv = inverse_mod(s, m);
    inverse_mod(t, m);  // invertibility required by axiom 2
    std::vector<std::vector<int>> circ(m, std::vector<int>(m)), star(m, std::vector<int>(m));
    for (int x = 0; x < m; ++x)
        for (int y = 0; y < m; ++y) {
            circ[x][y] = norm_mod(1LL * sinv * (1LL * t * x + 1LL * (1 - t) * y), m);
            star[x][y] = norm_mod(1LL * sinv * x, m);
        }
    return make_biquandle(m, std::move(circ), std::move(star));
}

std::vector<int> linear_map(int m, int a) {
    inverse_mod(a, m);
    std::vector<int> f(m);
    for (int x = 0; x < m; ++x) f[x] = norm_mod(1LL * a * x, m);
    return f;
}

namespace {

// Constraint network for coloring counts.  At a classical crossing the
// axiom-3 bijection S(x, y) = (x∘y, y∗x) maps the pair (under-in, over-out)
// to (under-out, over-in); at negative crossings the roles of in and out
// swap.  Virtual passages (short-arc flavor only) force out = f^{-e}(in)
// with e the passage's transverse sign.
struct ColoringProblem {
    int carrier = 0;
    int vars = 0;
    struct CrossingRule {
        int under_in, over_in, under_out, over_out;
        int sign;
    };
    std::vector<CrossingRule> crossings;
    struct VirtualRule {
        int in, out, exponent;
    };
    std::vector<VirtualRule> virtuals;
    const FiniteBiquandle* b = nullptr;
    const VirtualBiquandle* vb = nullptr;
    std::vector<std::vector<int>> alpha_inv, beta_inv;  // [y][z]: solve z = x∘y resp. z = x∗y for x

    void prepare() {
        alpha_inv.assign(b->n, std::vector<int>(b->n, -1));
        beta_inv.assign(b->n, std::vector<int>(b->n, -1));
        for (int y = 0; y < b->n; ++y)
            for (int x = 0; x < b->n; ++x) {
                alpha_inv[y][b->c(x, y)] = x;
                beta_inv[y][b->s(x, y)] = x;
            }
    }

    long long count() {
        prepare();
        std::vector<int> color(vars, -1);
        return search(color);
    }

  private:
    bool propagate(std::vector<int>& color, std::vector<int>& trail) const {
        bool changed = true;
        auto assign = [&](int var, int value) {
            if (color[var] == -1) {
                color[var] = value;
                trail.push_back(var);
                changed = true;
                return true;
            }
            return color[var] == value;
        };
        while (changed) {
            changed = false;
            for (const auto& r : crossings) {
                if (color[r.under_in] < 0 || color[r.over_in] < 0) continue;
                int ui = color[r.under_in], oi = color[r.over_in];
                if (r.sign > 0) {
                    // oi = oo∗ui, uo = ui∘oo
                    int oo = beta_inv[ui][oi];
                    if (!assign(r.over_out, oo)) return false;
                    if (!assign(r.under_out, b->c(ui, oo))) return false;
                } else {
                    // ui = uo∘oi, oo = oi∗uo
                    int uo = alpha_inv[oi][ui];
                    if (!assign(r.under_out, uo)) return false;
                    if (!assign(r.over_out, b->s(oi, uo))) return false;
                }
            }
            for (const auto& r : virtuals) {
                if (color[r.in] >= 0) {
                    if (!assign(r.out, vb->apply_f(color[r.in], r.exponent))) return false;
                }
            }
        }
        return true;
    }

    long long search(std::vector<int>& color) const {
        std::vector<int> trail;
        if (!propagate(color, trail)) {
            for (int v : trail) color[v] = -1;
            return 0;
        }
        int branch = -1;
        for (int v = 0; v < vars; ++v)
            if (color[v] == -1) {
                branch = v;
                break;
            }
        long long total = 0;
        if (branch == -1) {
            total = 1;
        } else {
            for (int value = 0; value < carrier; ++value) {
                color[branch] = value;
                total += search(color);
            }
            color[branch] = -1;
        }
        for (int v : trail) color[v] = -1;
        return total;
    }
};

// Short-arc layout: one arc per passage (from the passage to the next one),
// a single closed arc for passage-free components.
struct ShortArcs {
    int count = 0;
    std::vector<int> base;  // per component, id of its first arc

    int in_arc(const ExtendedGaussCode& code, PassagePos p) const {
        int m = static_cast<int>(code.components[p.comp].size());
        return base[p.comp] + (p.idx - 1 + m) % m;
    }
    int out_arc(const ExtendedGaussCode&, PassagePos p) const { return base[p.comp] + p.idx; }
};

ShortArcs short_arcs(const ExtendedGaussCode& code) {
    ShortArcs sa;
    for (const auto& comp : code.components) {
        sa.base.push_back(sa.count);
        sa.count += comp.empty() ? 1 : static_cast<int>(comp.size());
    }
    return sa;
}

}  // namespace

long long count_colorings(const Diagram& d, const FiniteBiquandle& b) {
    ColoringProblem p;
    p.carrier = b.n;
    p.vars = d.arc_count();
    p.b = &b;
    for (const CrossingInfo& x : d.crossings)
        p.crossings.push_back({x.in_arc_under, x.in_arc_over, x.out_arc_under, x.out_arc_over, x.sign});
    return p.count();
}

long long count_virtual_colorings(const Diagram& d, const VirtualBiquandle& vb) {
    const ExtendedGaussCode& code = d.code;
    ShortArcs sa = short_arcs(code);
    ColoringProblem p;
    p.carrier = vb.base.n;
    p.vars = sa.count;
    p.b = &vb.base;
    p.vb = &vb;
    for (const CrossingInfo& x : d.crossings)
        p.crossings.push_back({sa.in_arc(code, x.pos_under), sa.in_arc(code, x.pos_over),
                               sa.out_arc(code, x.pos_under), sa.out_arc(code, x.pos_over), x.sign});
    for (int ci = 0; ci < static_cast<int>(code.components.size()); ++ci)
        for (int pi = 0; pi < static_cast<int>(code.components[ci].size()); ++pi) {
            const Passage& pass = code.components[ci][pi];
            if (pass.classical()) continue;
            // the twist exponent is opposite to the passage's own transverse
            // sign (equivalently, it is the partner passage's sign); this is
            // the orientation matching the canonical cocycle placement
            PassagePos pos{ci, pi};
            p.virtuals.push_back({sa.in_arc(code, pos), sa.out_arc(code, pos), -pass.sign});
        }
    return p.count();
}

LaurentPresentation abq(const Diagram& d) {
    LaurentPresentation pres;
    pres.flavor = PresentationFlavor::ABQ;
    for (const LongArc& a : d.arcs) pres.generators.push_back("a" + std::to_string(a.id));

    const LaurentPoly t = LaurentPoly::variable_t();
    const LaurentPoly s = LaurentPoly::variable_s();
    const LaurentPoly one = LaurentPoly::constant(1);
    for (const CrossingInfo& x : d.crossings) {
        std::vector<LaurentPoly> r1(d.arc_count()), r2(d.arc_count());
        if (x.sign > 0) {
            // u_out = u_in∘o_out and o_in = o_out∗u_in:
            // s·u_out - t·u_in - (1-t)·o_out = 0,  o_out - s·o_in = 0
            r1[x.out_arc_under] += s;
            r1[x.in_arc_under] -= t;
            r1[x.out_arc_over] -= one - t;
            r2[x.out_arc_over] += one;
            r2[x.in_arc_over] -= s;
        } else {
            // in and out swap at negative crossings
            r1[x.in_arc_under] += s;
            r1[x.out_arc_under] -= t;
            r1[x.in_arc_over] -= one - t;
            r2[x.in_arc_over] += one;
            r2[x.out_arc_over] -= s;
        }
        pres.relations.push_back(std::move(r1));
        pres.relations.push_back(std::move(r2));
    }
    return pres;
}

LaurentPresentation vaq(const Diagram& d) {
    const ExtendedGaussCode& code = d.code;
    ShortArcs sa = short_arcs(code);
    LaurentPresentation pres;
    pres.flavor = PresentationFlavor::VAQ;
    for (int i = 0; i < sa.count; ++i) pres.generators.push_back("b" + std::to_string(i));

    const LaurentPoly t = LaurentPoly::variable_t();
    const LaurentPoly one = LaurentPoly::constant(1);
    for (const CrossingInfo& x : d.crossings) {
        std::vector<LaurentPoly> r1(sa.count), r2(sa.count);
        if (x.sign > 0) {
            r1[sa.out_arc(code, x.pos_under)] += one;
            r1[sa.in_arc(code, x.pos_under)] -= t;
            r1[sa.out_arc(code, x.pos_over)] -= one - t;
            r2[sa.in_arc(code, x.pos_over)] += one;
            r2[sa.out_arc(code, x.pos_over)] -= one;
        } else {
            r1[sa.in_arc(code, x.pos_under)] += one;
            r1[sa.out_arc(code, x.pos_under)] -= t;
            r1[sa.in_arc(code, x.pos_over)] -= one - t;
            r2[sa.out_arc(code, x.pos_over)] += one;
            r2[sa.in_arc(code, x.pos_over)] -= one;
        }
        pres.relations.push_back(std::move(r1));
        pres.relations.push_back(std::move(r2));
    }
    for (int ci = 0; ci < static_cast<int>(code.components.size()); ++ci)
        for (int pi = 0; pi < static_cast<int>(code.components[ci].size()); ++pi) {
            const Passage& pass = code.components[ci][pi];
            if (pass.classical()) continue;
            PassagePos pos{ci, pi};
            std::vector<LaurentPoly> r(sa.count);
            // out = s^{-e} in (same twist orientation as the colourings),
            // cleared of negative powers
            if (pass.sign < 0) {
                r[sa.out_arc(code, pos)] += one;
                r[sa.in_arc(code, pos)] -= LaurentPoly::variable_s();
            } else {
                r[sa.out_arc(code, pos)] += LaurentPoly::variable_s();
                r[sa.in_arc(code, pos)] -= one;
            }
            pres.relations.push_back(std::move(r));
        }
    return pres;
}

namespace {

LaurentPoly fitting_generator(const LaurentPresentation& pres) {
    if (!pres.square()) return LaurentPoly();
    return normalize_units(laurent_det(pres.relations));
}

}  // namespace

LaurentPoly generalized_alexander(const Diagram& d) { return fitting_generator(abq(d)); }

LaurentPoly xi_polynomial(const Diagram& d) { return fitting_generator(vaq(d)); }

}  // namespace vknot
