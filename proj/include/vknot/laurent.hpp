#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "vknot/intmat.hpp"

namespace vknot {

// Sparse integer Laurent polynomial in two variables (t, s).  The same type
// serves the index polynomial with the aliasing (x, y) := (t, s).
class LaurentPoly {
  public:
    using Exp = std::pair<int, int>;  // (exp_t, exp_s)

    LaurentPoly() = default;
    static LaurentPoly constant(Int c) { return monomial(c, 0, 0); }
    static LaurentPoly monomial(Int c, int et, int es) {
        LaurentPoly p;
        if (c != 0) p.terms_[{et, es}] = c;
        return p;
    }
    static LaurentPoly variable_t() { return monomial(1, 1, 0); }
    static LaurentPoly variable_s() { return monomial(1, 0, 1); }

    const std::map<Exp, Int>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool operator==(const LaurentPoly&) const = default;

    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly operator+(const LaurentPoly& o) const {
        LaurentPoly r = *this;
        return r += o;
    }
    LaurentPoly operator-(const LaurentPoly& o) const {
        LaurentPoly r = *this;
        return r -= o;
    }
    LaurentPoly operator-() const;
    LaurentPoly operator*(const LaurentPoly& o) const;

    // Multiplication by c * t^et * s^es.
    LaurentPoly shifted(Int c, int et, int es) const;

    std::string str(const char* var_t = "t", const char* var_s = "s") const;

  private:
    std::map<Exp, Int> terms_;  // no zero coefficients stored
};

// det over the Laurent ring.  Prefers unit monomial pivots (exact division),
// falls back to fraction-free Bareiss elimination.
LaurentPoly laurent_det(std::vector<std::vector<LaurentPoly>> m);

// Multiplies by ±t^k s^l so that min exp_t = min exp_s = 0 and the
// lexicographically first term has a positive coefficient.  Idempotent and
// constant on unit-multiple orbits; normalize_units(0) = 0.
LaurentPoly normalize_units(const LaurentPoly& p);

// Exact division; throws if q does not divide p.
LaurentPoly divide_exact(const LaurentPoly& p, const LaurentPoly& q);

}  // namespace vknot
