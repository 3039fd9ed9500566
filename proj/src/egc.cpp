#include "vknot/egc.hpp"

#include <algorithm>
#include <cctype>
#include <map>

namespace vknot {

std::string passage_token(const Passage& p) {
    std::string s;
    switch (p.kind) {
        case PassKind::Over: s = "O"; break;
        case PassKind::Under: s = "U"; break;
        case PassKind::Virtual: s = "V"; break;
    }
    s += std::to_string(p.id);
    s += p.sign >= 0 ? '+' : '-';
    return s;
}

int ExtendedGaussCode::max_id() const {
    int m = 0;
    for (const auto& comp : components)
        for (const auto& p : comp) m = std::max(m, p.id);
    return m;
}

namespace {

struct Cursor {
    const std::string& text;
    size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool done() {
        skip_ws();
        return pos >= text.size();
    }
    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }
    char take() {
        skip_ws();
        if (pos >= text.size()) throw ParseError("unexpected end of input", pos);
        return text[pos++];
    }
};

Passage parse_passage(Cursor& cur) {
    size_t start = cur.pos;
    char kind = cur.take();
    PassKind k;
    switch (kind) {
        case 'O': k = PassKind::Over; break;
        case 'U': k = PassKind::Under; break;
        case 'V': k = PassKind::Virtual; break;
        default: throw ParseError(std::string("expected passage kind O/U/V, got '") + kind + "'", start);
    }
    cur.skip_ws();
    size_t digit_start = cur.pos;
    long long id = 0;
    bool any = false;
    while (cur.pos < cur.text.size() && std::isdigit(static_cast<unsigned char>(cur.text[cur.pos]))) {
        id = id * 10 + (cur.text[cur.pos] - '0');
        if (id > 1'000'000'000) throw ParseError("crossing id out of range", digit_start);
        ++cur.pos;
        any = true;
    }
    if (!any) throw ParseError("expected crossing id", cur.pos);
    char sign = cur.take();
    if (sign != '+' && sign != '-') throw ParseError(std::string("expected sign +/-, got '") + sign + "'", cur.pos - 1);
    return Passage{k, static_cast<int>(id), sign == '+' ? 1 : -1};
}

void check_pairing(const ExtendedGaussCode& code, std::vector<Diagnostic>* report, size_t err_pos) {
    struct Seen {
        int classical = 0, over = 0, under = 0, virt = 0;
        int first_sign = 0;
        bool sign_mismatch = false, virtual_sign_repeat = false;
    };
    std::map<int, Seen> seen;
    for (const auto& comp : code.components) {
        for (const auto& p : comp) {
            Seen& s = seen[p.id];
            if (p.classical()) {
                if (s.classical + s.virt == 0) s.first_sign = p.sign;
                ++s.classical;
                (p.kind == PassKind::Over ? s.over : s.under)++;
                if (p.sign != s.first_sign) s.sign_mismatch = true;
            } else {
                if (s.virt > 0 && p.sign == s.first_sign) s.virtual_sign_repeat = true;
                if (s.virt == 0) s.first_sign = p.sign;
                ++s.virt;
            }
        }
    }
    auto fail = [&](int id, const std::string& what) {
        std::string msg = "crossing " + std::to_string(id) + ": " + what;
        if (report)
            report->push_back({"pairing", msg});
        else
            throw ParseError("pairing violation: " + msg, err_pos);
    };
    for (const auto& [id, s] : seen) {
        if (s.classical > 0 && s.virt > 0) fail(id, "id used both classically and virtually");
        if (s.classical > 0) {
            if (s.classical != 2 || s.over != 1 || s.under != 1)
                fail(id, "classical id must occur exactly once as O and once as U, got " +
                             std::to_string(s.over) + " O / " + std::to_string(s.under) + " U");
            else if (s.sign_mismatch)
                fail(id, "the two classical passages carry different signs");
        }
        if (s.virt > 0 && s.classical == 0) {
            if (s.virt != 2)
                fail(id, "virtual id occurs " + std::to_string(s.virt) + " time(s), expected 2");
            else if (s.virtual_sign_repeat)
                fail(id, "the two virtual passages must carry opposite transverse signs");
        }
    }
}

}  // namespace

ExtendedGaussCode parse_egc(const std::string& text) {
    ExtendedGaussCode code;
    Cursor cur{text};
    bool first_component = true;
    while (first_component || !cur.done()) {
        if (!first_component) {
            char sep = cur.take();
            if (sep != ';') throw ParseError(std::string("expected ';' between components, got '") + sep + "'", cur.pos - 1);
        }
        first_component = false;
        std::vector<Passage> comp;
        if (cur.peek() == '~') {
            cur.take();
        } else {
            comp.push_back(parse_passage(cur));
            while (cur.peek() == ',') {
                cur.take();
                comp.push_back(parse_passage(cur));
            }
        }
        code.components.push_back(std::move(comp));
        if (cur.done()) break;
        if (cur.peek() != ';')
            throw ParseError(std::string("unexpected character '") + cur.peek() + "'", cur.pos);
    }
    if (code.components.empty()) throw ParseError("empty code", 0);
    check_pairing(code, nullptr, cur.pos);
    return code;
}

std::string serialize_egc(const ExtendedGaussCode& code) {
    std::string out;
    bool first = true;
    for (const auto& comp : code.components) {
        if (!first) out += ';';
        first = false;
        if (comp.empty()) {
            out += '~';
            continue;
        }
        size_t best = 0;
        for (size_t i = 1; i < comp.size(); ++i)
            if (passage_key(comp[i]) < passage_key(comp[best])) best = i;
        for (size_t i = 0; i < comp.size(); ++i) {
            if (i) out += ',';
            out += passage_token(comp[(best + i) % comp.size()]);
        }
    }
    return out;
}

ValidationReport validate_basic(const ExtendedGaussCode& code) {
    ValidationReport report;
    check_pairing(code, &report.errors, 0);
    return report;
}

}  // namespace vknot
