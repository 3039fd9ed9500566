#include "vknot/laurent.hpp"

#include <algorithm>
#include <climits>
#include <stdexcept>

namespace vknot {

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) {
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, c);
        } else {
            it->second = checked_add(it->second, c);
            if (it->second == 0) terms_.erase(it);
        }
    }
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.terms_[e] = checked_neg(c);
    return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    LaurentPoly r;
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) {
            Exp e{e1.first + e2.first, e1.second + e2.second};
            auto it = r.terms_.find(e);
            Int add = checked_mul(c1, c2);
            if (it == r.terms_.end()) {
                if (add != 0) r.terms_.emplace(e, add);
            } else {
                it->second = checked_add(it->second, add);
                if (it->second == 0) r.terms_.erase(it);
            }
        }
    return r;
}

LaurentPoly LaurentPoly::shifted(Int c, int et, int es) const {
    LaurentPoly r;
    if (c == 0) return r;
    for (const auto& [e, k] : terms_) r.terms_[{e.first + et, e.second + es}] = checked_mul(k, c);
    return r;
}

std::string LaurentPoly::str(const char* var_t, const char* var_s) const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [e, c] : terms_) {
        if (!out.empty()) out += c >= 0 ? " + " : " - ";
        else if (c < 0) out += "-";
        Int a = c < 0 ? -c : c;
        std::string mono;
        auto pow = [&](const char* v, int k) {
            if (k == 0) return;
            if (!mono.empty()) mono += "*";
            mono += v;
            if (k != 1) mono += "^" + std::to_string(k);
        };
        pow(var_t, e.first);
        pow(var_s, e.second);
        if (mono.empty()) out += std::to_string(a);
        else if (a == 1) out += mono;
        else out += std::to_string(a) + "*" + mono;
    }
    return out;
}

LaurentPoly normalize_units(const LaurentPoly& p) {
    if (p.is_zero()) return p;
    int min_t = INT_MAX, min_s = INT_MAX;
    for (const auto& [e, c] : p.terms()) {
        min_t = std::min(min_t, e.first);
        min_s = std::min(min_s, e.second);
    }
    LaurentPoly shifted = p.shifted(1, -min_t, -min_s);
    if (shifted.terms().begin()->second < 0) shifted = -shifted;
    return shifted;
}

LaurentPoly divide_exact(const LaurentPoly& p, const LaurentPoly& q) {
    if (q.is_zero()) throw std::invalid_argument("division by zero polynomial");
    LaurentPoly rem = p, quot;
    // Leading term in the (exp_t, exp_s) lexicographic order; the orders on
    // Laurent exponents are well-founded within a fixed division because all
    // intermediate exponents are bounded below.
    const auto q_lead = std::prev(q.terms().end());
    while (!rem.is_zero()) {
        const LaurentPoly::Exp r_exp = std::prev(rem.terms().end())->first;
        const Int c = std::prev(rem.terms().end())->second;
        if (c % q_lead->second != 0) throw std::domain_error("inexact polynomial division");
        Int f = c / q_lead->second;
        LaurentPoly mono =
            LaurentPoly::monomial(f, r_exp.first - q_lead->first.first, r_exp.second - q_lead->first.second);
        quot += mono;
        rem -= q * mono;
        if (!rem.is_zero() && !(std::prev(rem.terms().end())->first < r_exp))
            throw std::domain_error("inexact polynomial division");
    }
    return quot;
}

namespace {

// Entry that is a single monomial with coefficient ±1 (a unit of the ring).
bool is_unit_monomial(const LaurentPoly& p) {
    return p.terms().size() == 1 && (p.terms().begin()->second == 1 || p.terms().begin()->second == -1);
}

LaurentPoly bareiss_det(std::vector<std::vector<LaurentPoly>> m) {
    const int n = static_cast<int>(m.size());
    if (n == 0) return LaurentPoly::constant(1);
    LaurentPoly prev = LaurentPoly::constant(1);
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (m[k][k].is_zero()) {
            int swap_row = -1;
            for (int i = k + 1; i < n; ++i)
                if (!m[i][k].is_zero()) {
                    swap_row = i;
                    break;
                }
            if (swap_row < 0) return LaurentPoly();
            std::swap(m[k], m[swap_row]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                LaurentPoly num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                m[i][j] = divide_exact(num, prev);
            }
        prev = m[k][k];
    }
    LaurentPoly det = m[n - 1][n - 1];
    if (sign < 0) det = -det;
    return det;
}

}  // namespace

LaurentPoly laurent_det(std::vector<std::vector<LaurentPoly>> m) {
    const int n = static_cast<int>(m.size());
    for (const auto& row : m)
        if (static_cast<int>(row.size()) != n) throw std::invalid_argument("det of non-square matrix");
    if (n == 0) return LaurentPoly::constant(1);

    // Substitution phase: eliminate with unit monomial pivots while any exist.
    std::vector<int> live(n);
    for (int i = 0; i < n; ++i) live[i] = i;
    std::vector<int> live_cols = live;
    LaurentPoly unit_factor = LaurentPoly::constant(1);
    int sign = 1;

    while (!live.empty()) {
        int pr = -1, pc = -1;
        size_t best_terms = SIZE_MAX;
        for (size_t ri = 0; ri < live.size(); ++ri)
            for (size_t ci = 0; ci < live_cols.size(); ++ci) {
                const LaurentPoly& e = m[live[ri]][live_cols[ci]];
                if (!is_unit_monomial(e)) continue;
                // prefer pivots in sparse rows to limit fill-in
                size_t nz = 0;
                for (size_t cj = 0; cj < live_cols.size(); ++cj)
                    if (!m[live[ri]][live_cols[cj]].is_zero()) ++nz;
                if (nz < best_terms) {
                    best_terms = nz;
                    pr = static_cast<int>(ri);
                    pc = static_cast<int>(ci);
                }
            }
        if (pr < 0) break;

        int row = live[pr], col = live_cols[pc];
        const LaurentPoly pivot = m[row][col];
        // parity of the permutation induced by removing (row, col)
        sign *= ((pr + pc) % 2 == 0) ? 1 : -1;
        unit_factor = unit_factor * pivot;

        const auto& lead = *pivot.terms().begin();
        for (size_t ri = 0; ri < live.size(); ++ri) {
            int i = live[ri];
            if (i == row || m[i][col].is_zero()) continue;
            // m[i] -= (m[i][col] / pivot) * m[row]
            LaurentPoly factor = m[i][col].shifted(lead.second, -lead.first.first, -lead.first.second);
            for (size_t ci = 0; ci < live_cols.size(); ++ci) {
                int j = live_cols[ci];
                if (j == col || m[row][j].is_zero()) continue;
                m[i][j] -= factor * m[row][j];
            }
            m[i][col] = LaurentPoly();
        }
        live.erase(live.begin() + pr);
        live_cols.erase(live_cols.begin() + pc);
    }

    std::vector<std::vector<LaurentPoly>> rest(live.size(), std::vector<LaurentPoly>(live.size()));
    for (size_t ri = 0; ri < live.size(); ++ri)
        for (size_t ci = 0; ci < live_cols.size(); ++ci) rest[ri][ci] = m[live[ri]][live_cols[ci]];

    LaurentPoly det = unit_factor * bareiss_det(std::move(rest));
    if (sign < 0) det = -det;
    return det;
}

}  // namespace vknot
