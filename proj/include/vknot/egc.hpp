#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

namespace vknot {

enum class Role : uint8_t { Over, Under };

inline Role other(Role r) { return r == Role::Over ? Role::Under : Role::Over; }

enum class PassKind : uint8_t { Over, Under, Virtual };

// One passage of a strand through a crossing.  For classical passages `sign`
// is the crossing sign, for virtual ones the transverse sign (+1 when the
// other strand crosses from right to left across the direction of travel).
struct Passage {
    PassKind kind = PassKind::Over;
    int id = 0;
    int sign = 1;

    bool classical() const { return kind != PassKind::Virtual; }
    Role role() const {
        if (!classical()) throw std::logic_error("role() on virtual passage");
        return kind == PassKind::Over ? Role::Over : Role::Under;
    }
    static Passage classic(int id, Role r, int sign) {
        return Passage{r == Role::Over ? PassKind::Over : PassKind::Under, id, sign};
    }
    static Passage virt(int id, int sign) { return Passage{PassKind::Virtual, id, sign}; }

    bool operator==(const Passage&) const = default;
};

// Sort key used for canonical rotations: O < U < V, then numeric id, then '+' < '-'.
inline std::tuple<int, int, int> passage_key(const Passage& p) {
    return {static_cast<int>(p.kind), p.id, p.sign < 0 ? 1 : 0};
}

std::string passage_token(const Passage& p);

// Extended Gauss code: one cyclic passage sequence per unicursal component.
// A component with no passages at all is a free loop (written "~").
struct ExtendedGaussCode {
    std::vector<std::vector<Passage>> components;

    bool operator==(const ExtendedGaussCode&) const = default;

    size_t total_passages() const {
        size_t n = 0;
        for (const auto& c : components) n += c.size();
        return n;
    }
    int max_id() const;
};

struct ParseError : std::runtime_error {
    size_t position;
    ParseError(const std::string& what, size_t pos)
        : std::runtime_error(what + " (at position " + std::to_string(pos) + ")"), position(pos) {}
};

// Grammar: code := component (";" component)*
//          component := "~" | passage ("," passage)*
//          passage := ("O"|"U"|"V") integer ("+"|"-")
// Whitespace is ignored.  Throws ParseError on syntax or pairing violations.
ExtendedGaussCode parse_egc(const std::string& text);

// Canonical text: components in given order, each rotated to start at its
// minimal passage token.  parse(serialize(c)) == canonical form of c.
std::string serialize_egc(const ExtendedGaussCode& code);

struct Diagnostic {
    std::string check;
    std::string detail;
};

struct ValidationReport {
    std::vector<Diagnostic> errors;
    bool ok() const { return errors.empty(); }
};

// Structural invariants only; never throws on bad codes, reports instead.
ValidationReport validate_basic(const ExtendedGaussCode& code);

}  // namespace vknot
