#include "glinv/gauss_code.hpp"

#include <cctype>
#include <map>
#include <sstream>

namespace glinv {

int GaussCode::crossing_count() const {
    std::map<int, int> seen;
    for (const auto& comp : components)
        for (const auto& s : comp) seen[s.crossing_id]++;
    return static_cast<int>(seen.size());
}

namespace {

[[noreturn]] void parse_fail(size_t pos, const std::string& msg) {
    std::ostringstream os;
    os << "parse error at position " << pos << ": " << msg;
    throw Error(Error::Kind::Parse, os.str());
}

struct Token {
    enum class Kind { Symbol, Unknot, Sep } kind;
    GaussSymbol sym{};
    size_t pos = 0;
};

std::vector<Token> tokenize(const std::string& text) {
    // strip comment lines and whitespace, remembering source positions
    std::string s;
    std::vector<size_t> pos_of;
    bool at_line_start = true;
    for (size_t i = 0; i < text.size(); ++i) {
        char c = text[i];
        if (at_line_start && c == '#') {
            while (i < text.size() && text[i] != '\n') ++i;
            continue;
        }
        at_line_start = (c == '\n');
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        s.push_back(c);
        pos_of.push_back(i);
    }
    auto pos = [&](size_t k) { return k < pos_of.size() ? pos_of[k] : text.size(); };

    std::vector<Token> toks;
    size_t i = 0;
    while (i < s.size()) {
        char c = s[i];
        if (c == ';') {
            toks.push_back({Token::Kind::Sep, {}, pos(i)});
            ++i;
        } else if (c == '(') {
            if (i + 1 >= s.size() || s[i + 1] != ')') parse_fail(pos(i), "expected \"()\"");
            toks.push_back({Token::Kind::Unknot, {}, pos(i)});
            i += 2;
        } else if (c == 'O' || c == 'U') {
            size_t start = i;
            ++i;
            if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i])) || s[i] == '0')
                parse_fail(pos(i), "expected crossing number (no leading zero)");
            long id = 0;
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
                id = id * 10 + (s[i] - '0');
                if (id > 1000000) parse_fail(pos(start), "crossing number too large");
                ++i;
            }
            if (i >= s.size() || (s[i] != '+' && s[i] != '-'))
                parse_fail(pos(i), "expected '+' or '-' after crossing number");
            GaussSymbol sym{c == 'O' ? Pass::Over : Pass::Under, static_cast<int>(id),
                            s[i] == '+' ? 1 : -1};
            toks.push_back({Token::Kind::Symbol, sym, pos(start)});
            ++i;
        } else {
            parse_fail(pos(i), std::string("unexpected character '") + c + "'");
        }
    }
    return toks;
}

}  // namespace

GaussCode parse_gauss_code(const std::string& text) {
    std::vector<Token> toks = tokenize(text);
    if (toks.empty()) parse_fail(0, "empty input");

    // split on separators; each component is "()" or a nonempty symbol run
    GaussCode code;
    std::vector<Token> cur;
    size_t cur_start = 0;
    auto flush = [&](size_t at) {
        if (cur.empty()) parse_fail(at, "empty component (use \"()\" for a 0-crossing unknot)");
        if (cur[0].kind == Token::Kind::Unknot) {
            if (cur.size() > 1) parse_fail(cur[1].pos, "\"()\" must be a whole component");
            code.components.emplace_back();
        } else {
            std::vector<GaussSymbol> comp;
            for (const Token& t : cur) {
                if (t.kind != Token::Kind::Symbol)
                    parse_fail(t.pos, "\"()\" must be a whole component");
                comp.push_back(t.sym);
            }
            code.components.push_back(std::move(comp));
        }
        cur.clear();
    };
    for (const Token& t : toks) {
        if (t.kind == Token::Kind::Sep) {
            flush(t.pos);
            cur_start = t.pos;
        } else {
            cur.push_back(t);
        }
    }
    flush(cur_start);

    // every crossing twice, once Over once Under, signs agree
    struct Seen {
        int over = 0, under = 0, sign = 0;
    };
    std::map<int, Seen> seen;
    for (const auto& comp : code.components)
        for (const auto& sym : comp) {
            Seen& e = seen[sym.crossing_id];
            if (sym.pass == Pass::Over) {
                if (++e.over > 1)
                    throw Error(Error::Kind::Parse, "crossing " + std::to_string(sym.crossing_id) +
                                                        " passed Over twice");
            } else {
                if (++e.under > 1)
                    throw Error(Error::Kind::Parse, "crossing " + std::to_string(sym.crossing_id) +
                                                        " passed Under twice");
            }
            if (e.sign == 0) e.sign = sym.sign;
            else if (e.sign != sym.sign)
                throw Error(Error::Kind::Parse, "crossing " + std::to_string(sym.crossing_id) +
                                                    " has mismatched signs");
        }
    for (const auto& [id, e] : seen)
        if (e.over != 1 || e.under != 1)
            throw Error(Error::Kind::Parse, "crossing " + std::to_string(id) +
                                                " must occur exactly once Over and once Under");
    return code;
}

std::string to_string(const GaussCode& code) {
    std::string out;
    bool first = true;
    for (const auto& comp : code.components) {
        if (!first) out += ";";
        first = false;
        if (comp.empty()) {
            out += "()";
            continue;
        }
        for (const auto& s : comp) {
            out += (s.pass == Pass::Over) ? 'O' : 'U';
            out += std::to_string(s.crossing_id);
            out += (s.sign > 0) ? '+' : '-';
        }
    }
    return out;
}

}  // namespace glinv
