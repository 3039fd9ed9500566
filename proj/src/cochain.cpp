#include "vknot/cochain.hpp"

#include <stdexcept>

namespace vknot {

Int evaluate(const Cochain& c, std::span<const int> arc_walk) {
    Int sum = 0;
    for (int a : arc_walk) sum = checked_add(sum, c.values.at(a));
    return c.reduce(sum);
}

Int evaluate(const Cochain& c, const std::vector<int>& arc_walk) {
    return evaluate(c, std::span<const int>(arc_walk));
}

Cochain coboundary(const Diagram& d, int crossing, Ring ring) {
    const CrossingInfo& x = d.crossing(crossing);
    Cochain c = Cochain::zero(d, ring);
    c.values.at(x.out_arc_over) += 1;
    c.values.at(x.out_arc_under) += 1;
    c.values.at(x.in_arc_over) -= 1;
    c.values.at(x.in_arc_under) -= 1;
    c.normalize();
    return c;
}

namespace {

// GF(2) solve of M x = b; returns a solution as a set of columns.
std::optional<std::vector<int>> solve_mod2(std::vector<std::vector<uint8_t>> m, std::vector<uint8_t> b, int cols) {
    const int rows = static_cast<int>(m.size());
    std::vector<int> pivot_col(rows, -1);
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int pr = -1;
        for (int i = r; i < rows; ++i)
            if (m[i][c]) {
                pr = i;
                break;
            }
        if (pr < 0) continue;
        std::swap(m[r], m[pr]);
        std::swap(b[r], b[pr]);
        for (int i = 0; i < rows; ++i)
            if (i != r && m[i][c]) {
                for (int j = c; j < cols; ++j) m[i][j] ^= m[r][j];
                b[i] ^= b[r];
            }
        pivot_col[r] = c;
        ++r;
    }
    for (int i = r; i < rows; ++i)
        if (b[i]) return std::nullopt;
    std::vector<int> x(cols, 0);
    for (int i = 0; i < r; ++i)
        if (b[i]) x[pivot_col[i]] = 1;
    return x;
}

}  // namespace

CohomologyResult cohomologous(const Diagram& d, const Cochain& a, const Cochain& b) {
    if (a.ring != b.ring) throw std::invalid_argument("cohomologous: ring mismatch");
    if (a.values.size() != d.arcs.size() || b.values.size() != d.arcs.size())
        throw std::invalid_argument("cohomologous: cochain does not match diagram");

    const int n_arcs = d.arc_count();
    const int n_x = d.classical_count();

    CohomologyResult res;
    if (a.ring == Ring::Z) {
        IntMatrix m(n_arcs, n_x);
        for (int ci = 0; ci < n_x; ++ci) {
            const CrossingInfo& x = d.crossings[ci];
            m.at(x.out_arc_over, ci) += 1;
            m.at(x.out_arc_under, ci) += 1;
            m.at(x.in_arc_over, ci) -= 1;
            m.at(x.in_arc_under, ci) -= 1;
        }
        std::vector<Int> rhs(n_arcs);
        for (int e = 0; e < n_arcs; ++e) rhs[e] = checked_sub(a.values[e], b.values[e]);
        auto sol = solve_integer(m, rhs);
        if (!sol) return res;
        res.cohomologous = true;
        for (int ci = 0; ci < n_x; ++ci)
            if ((*sol)[ci] != 0) res.witness[d.crossings[ci].label] = (*sol)[ci];
        return res;
    }

    std::vector<std::vector<uint8_t>> m(n_arcs, std::vector<uint8_t>(n_x, 0));
    std::vector<uint8_t> rhs(n_arcs, 0);
    for (int ci = 0; ci < n_x; ++ci) {
        const CrossingInfo& x = d.crossings[ci];
        m[x.out_arc_over][ci] ^= 1;
        m[x.out_arc_under][ci] ^= 1;
        m[x.in_arc_over][ci] ^= 1;
        m[x.in_arc_under][ci] ^= 1;
    }
    for (int e = 0; e < n_arcs; ++e) rhs[e] = static_cast<uint8_t>(((a.values[e] - b.values[e]) % 2 + 2) % 2);
    auto sol = solve_mod2(std::move(m), std::move(rhs), n_x);
    if (!sol) return res;
    res.cohomologous = true;
    for (int ci = 0; ci < n_x; ++ci)
        if ((*sol)[ci]) res.witness[d.crossings[ci].label] = 1;
    return res;
}

}  // namespace vknot
