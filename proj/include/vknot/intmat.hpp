#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace vknot {

// All integer arithmetic in the library is overflow-checked; silent
// wraparound would corrupt torsion coefficients.
using Int = long long;

struct OverflowError : std::overflow_error {
    OverflowError() : std::overflow_error("integer overflow in exact arithmetic") {}
};

inline Int checked_add(Int a, Int b) {
    Int r;
    if (__builtin_add_overflow(a, b, &r)) throw OverflowError();
    return r;
}
inline Int checked_sub(Int a, Int b) {
    Int r;
    if (__builtin_sub_overflow(a, b, &r)) throw OverflowError();
    return r;
}
inline Int checked_mul(Int a, Int b) {
    Int r;
    if (__builtin_mul_overflow(a, b, &r)) throw OverflowError();
    return r;
}
inline Int checked_neg(Int a) { return checked_sub(0, a); }

class IntMatrix {
  public:
    IntMatrix() = default;
    IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, 0) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Int& at(int r, int c) { return a_[static_cast<size_t>(r) * cols_ + c]; }
    Int at(int r, int c) const { return a_[static_cast<size_t>(r) * cols_ + c]; }

    static IntMatrix identity(int n) {
        IntMatrix m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    IntMatrix operator*(const IntMatrix& o) const;
    bool is_zero() const;
    bool operator==(const IntMatrix&) const = default;

  private:
    int rows_ = 0, cols_ = 0;
    std::vector<Int> a_;
};

struct SmithResult {
    std::vector<Int> invariants;  // d1 | d2 | ... | dr, all positive
    int rank = 0;
};

// Diagonalization U*M*V = diag(d1..dr) by unimodular transformations.
SmithResult smith_normal_form(IntMatrix m);

struct SmithFull {
    IntMatrix u, v, d;  // u*m*v == d
    SmithResult result;
};
SmithFull smith_full(IntMatrix m);

// Some x with M x = b over the integers, or nullopt when none exists.
std::optional<std::vector<Int>> solve_integer(const IntMatrix& m, const std::vector<Int>& b);

// Sign of the permutation sigma1^{-1} ∘ sigma2; both orders must enumerate
// the same element set.  Elements are arbitrary ints.
int perm_sign(const std::vector<int>& sigma1, const std::vector<int>& sigma2);

}  // namespace vknot
