#include "vknot/intmat.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>

namespace vknot {

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
    if (cols_ != o.rows()) throw std::invalid_argument("matrix product dimension mismatch");
    IntMatrix r(rows_, o.cols());
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            Int aik = at(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < o.cols(); ++j)
                r.at(i, j) = checked_add(r.at(i, j), checked_mul(aik, o.at(k, j)));
        }
    return r;
}

bool IntMatrix::is_zero() const {
    for (Int v : a_)
        if (v != 0) return false;
    return true;
}

namespace {

struct SnfWorker {
    IntMatrix m;
    IntMatrix u, v;
    bool track;

    SnfWorker(IntMatrix mat, bool track_transforms)
        : m(std::move(mat)),
          u(track_transforms ? IntMatrix::identity(m.rows()) : IntMatrix()),
          v(track_transforms ? IntMatrix::identity(m.cols()) : IntMatrix()),
          track(track_transforms) {}

    void swap_rows(int a, int b) {
        if (a == b) return;
        for (int j = 0; j < m.cols(); ++j) std::swap(m.at(a, j), m.at(b, j));
        if (track)
            for (int j = 0; j < u.cols(); ++j) std::swap(u.at(a, j), u.at(b, j));
    }
    void swap_cols(int a, int b) {
        if (a == b) return;
        for (int i = 0; i < m.rows(); ++i) std::swap(m.at(i, a), m.at(i, b));
        if (track)
            for (int i = 0; i < v.rows(); ++i) std::swap(v.at(i, a), v.at(i, b));
    }
    // row a -= q * row b
    void row_sub(int a, int b, Int q) {
        if (q == 0) return;
        for (int j = 0; j < m.cols(); ++j) m.at(a, j) = checked_sub(m.at(a, j), checked_mul(q, m.at(b, j)));
        if (track)
            for (int j = 0; j < u.cols(); ++j) u.at(a, j) = checked_sub(u.at(a, j), checked_mul(q, u.at(b, j)));
    }
    void col_sub(int a, int b, Int q) {
        if (q == 0) return;
        for (int i = 0; i < m.rows(); ++i) m.at(i, a) = checked_sub(m.at(i, a), checked_mul(q, m.at(i, b)));
        if (track)
            for (int i = 0; i < v.rows(); ++i) v.at(i, a) = checked_sub(v.at(i, a), checked_mul(q, v.at(i, b)));
    }
    void negate_row(int a) {
        for (int j = 0; j < m.cols(); ++j) m.at(a, j) = checked_neg(m.at(a, j));
        if (track)
            for (int j = 0; j < u.cols(); ++j) u.at(a, j) = checked_neg(u.at(a, j));
    }

    SmithResult run() {
        SmithResult res;
        int k = 0;
        const int n = std::min(m.rows(), m.cols());
        while (k < n) {
            // pivot: minimal nonzero absolute value in the trailing block
            int pr = -1, pc = -1;
            Int best = 0;
            for (int i = k; i < m.rows(); ++i)
                for (int j = k; j < m.cols(); ++j) {
                    Int v_ = m.at(i, j);
                    if (v_ == 0) continue;
                    Int a = v_ < 0 ? checked_neg(v_) : v_;
                    if (pr < 0 || a < best) {
                        pr = i;
                        pc = j;
                        best = a;
                    }
                }
            if (pr < 0) break;
            swap_rows(k, pr);
            swap_cols(k, pc);
            bool clean = true;
            for (int i = k + 1; i < m.rows(); ++i) {
                Int q = m.at(i, k) / m.at(k, k);
                row_sub(i, k, q);
                if (m.at(i, k) != 0) clean = false;
            }
            for (int j = k + 1; j < m.cols(); ++j) {
                Int q = m.at(k, j) / m.at(k, k);
                col_sub(j, k, q);
                if (m.at(k, j) != 0) clean = false;
            }
            if (!clean) continue;  // smaller remainders exist, repick pivot
            // divisibility: pivot must divide the whole trailing block
            bool divides = true;
            for (int i = k + 1; i < m.rows() && divides; ++i)
                for (int j = k + 1; j < m.cols(); ++j)
                    if (m.at(i, j) % m.at(k, k) != 0) {
                        row_sub(k, i, -1);  // pull the offending row in and retry
                        divides = false;
                        break;
                    }
            if (!divides) continue;
            if (m.at(k, k) < 0) negate_row(k);
            ++k;
        }
        for (int i = 0; i < k; ++i) res.invariants.push_back(m.at(i, i));
        res.rank = k;
        return res;
    }
};

}  // namespace

SmithResult smith_normal_form(IntMatrix m) {
    SnfWorker w(std::move(m), false);
    return w.run();
}

SmithFull smith_full(IntMatrix m) {
    SnfWorker w(std::move(m), true);
    SmithFull full;
    full.result = w.run();
    full.u = std::move(w.u);
    full.v = std::move(w.v);
    full.d = std::move(w.m);
    return full;
}

std::optional<std::vector<Int>> solve_integer(const IntMatrix& m, const std::vector<Int>& b) {
    if (static_cast<int>(b.size()) != m.rows()) throw std::invalid_argument("solve_integer: rhs size mismatch");
    SmithFull f = smith_full(m);
    // U M V = D, so M x = b  <=>  D y = U b with x = V y.
    std::vector<Int> ub(m.rows(), 0);
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.rows(); ++j) ub[i] = checked_add(ub[i], checked_mul(f.u.at(i, j), b[j]));
    std::vector<Int> y(m.cols(), 0);
    for (int i = 0; i < m.rows(); ++i) {
        if (i < f.result.rank) {
            Int d = f.d.at(i, i);
            if (ub[i] % d != 0) return std::nullopt;
            y[i] = ub[i] / d;
        } else if (ub[i] != 0) {
            return std::nullopt;
        }
    }
    std::vector<Int> x(m.cols(), 0);
    for (int i = 0; i < m.cols(); ++i)
        for (int j = 0; j < m.cols(); ++j) x[i] = checked_add(x[i], checked_mul(f.v.at(i, j), y[j]));
    return x;
}

int perm_sign(const std::vector<int>& sigma1, const std::vector<int>& sigma2) {
    if (sigma1.size() != sigma2.size()) throw std::invalid_argument("perm_sign: size mismatch");
    std::map<int, int> pos;
    for (size_t i = 0; i < sigma1.size(); ++i) {
        if (!pos.emplace(sigma1[i], static_cast<int>(i)).second)
            throw std::invalid_argument("perm_sign: repeated element");
    }
    std::vector<int> p(sigma2.size());
    for (size_t i = 0; i < sigma2.size(); ++i) {
        auto it = pos.find(sigma2[i]);
        if (it == pos.end()) throw std::invalid_argument("perm_sign: orders enumerate different sets");
        p[i] = it->second;
    }
    std::vector<bool> seen(p.size(), false);
    int sign = 1;
    for (size_t i = 0; i < p.size(); ++i) {
        if (seen[i]) continue;
        int len = 0;
        for (size_t j = i; !seen[j]; j = p[j]) {
            seen[j] = true;
            ++len;
        }
        if (len % 2 == 0) sign = -sign;
    }
    return sign;
}

}  // namespace vknot
