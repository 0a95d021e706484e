#include "circulant/text.hpp"

#include <cctype>
#include <set>

namespace circulant {

namespace {

struct Cursor {
    const std::string& s;
    std::size_t pos = 0;

    void skip_space() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) {
            ++pos;
        }
    }
    bool at_end() {
        skip_space();
        return pos >= s.size();
    }
    char peek() {
        skip_space();
        return pos < s.size() ? s[pos] : '\0';
    }
    void expect(char c, const char* what) {
        if (peek() != c) {
            throw ParseError(std::string("expected ") + what + " at position " +
                                 std::to_string(pos),
                             pos);
        }
        ++pos;
    }
    i64 integer() {
        skip_space();
        const std::size_t start = pos;
        bool negative = false;
        if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) {
            negative = s[pos] == '-';
            ++pos;
        }
        if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos]))) {
            throw ParseError("expected integer at position " + std::to_string(start), start);
        }
        i64 v = 0;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            v = v * 10 + (s[pos] - '0');
            ++pos;
        }
        return negative ? -v : v;
    }
};

}  // namespace

ParsedGraph parse_graph_verbose(const std::string& text) {
    Cursor c{text};
    if (c.peek() != 'C') {
        throw ParseError("expected 'C' at position " + std::to_string(c.pos), c.pos);
    }
    ++c.pos;
    const std::size_t n_pos = c.pos;
    const i64 n = c.integer();
    if (n < 3) {
        throw ParseError("modulus must be at least 3, got " + std::to_string(n), n_pos);
    }
    c.expect('(', "'('");
    std::vector<i64> values;
    values.push_back(c.integer());
    while (c.peek() == ',') {
        ++c.pos;
        values.push_back(c.integer());
    }
    c.expect(')', "')'");
    if (!c.at_end()) {
        throw ParseError("trailing input at position " + std::to_string(c.pos), c.pos);
    }

    std::vector<std::string> warnings;
    std::set<i64> seen, reported;
    for (i64 v : values) {
        if (!seen.insert(v).second && reported.insert(v).second) {
            warnings.push_back("duplicate jump " + std::to_string(v));
        }
    }
    return {CirculantGraph(n, values), std::move(warnings)};
}

CirculantGraph parse_graph(const std::string& text) {
    return parse_graph_verbose(text).graph;
}

std::string render_graph(const CirculantGraph& g) {
    return g.to_text();
}

}  // namespace circulant
