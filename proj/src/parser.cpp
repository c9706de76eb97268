#include "teamind/parser.hpp"

#include <cstddef>
#include <vector>

namespace teamind {

namespace {

enum class Tok { name, arrow, darrow, pipe, semi, lparen, rparen, lbrace, rbrace, bot, end };

struct Token {
    Tok kind;
    std::string text;
    std::size_t offset;
    bool glued;  // no whitespace between this token and the previous one
};

const char* describe(Tok k) {
    switch (k) {
        case Tok::name: return "attribute name";
        case Tok::arrow: return "->";
        case Tok::darrow: return "->>";
        case Tok::pipe: return "|";
        case Tok::semi: return ";";
        case Tok::lparen: return "(";
        case Tok::rparen: return ")";
        case Tok::lbrace: return "{";
        case Tok::rbrace: return "}";
        case Tok::bot: return "_||_";
        case Tok::end: return "end of input";
    }
    return "?";
}

bool starts_with(const std::string& s, std::size_t i, const char* lit) {
    for (std::size_t j = 0; lit[j] != '\0'; ++j) {
        if (i + j >= s.size() || s[i + j] != lit[j]) return false;
    }
    return true;
}

// Operators are matched before name characters, so a name may contain '_'
// or '-' but can never start an operator spelling mid-run.
bool operator_at(const std::string& s, std::size_t i) {
    return starts_with(s, i, "->") || starts_with(s, i, "_||_") ||
           starts_with(s, i, "⊥") || starts_with(s, i, "↠");
}

bool reserved_char(char c) {
    return c == '|' || c == ';' || c == '(' || c == ')' || c == '{' || c == '}';
}

std::vector<Token> lex(const std::string& s) {
    std::vector<Token> toks;
    std::size_t i = 0;
    std::size_t prev_end = 0;
    while (i < s.size()) {
        if (s[i] == ' ' || s[i] == '\t' || s[i] == '\n' || s[i] == '\r') {
            ++i;
            continue;
        }
        Token t;
        t.offset = i;
        t.glued = (i == prev_end) && !toks.empty();
        if (starts_with(s, i, "->>")) {
            t.kind = Tok::darrow;
            i += 3;
        } else if (starts_with(s, i, "->")) {
            t.kind = Tok::arrow;
            i += 2;
        } else if (starts_with(s, i, "_||_")) {
            t.kind = Tok::bot;
            i += 4;
        } else if (starts_with(s, i, "⊥")) {
            t.kind = Tok::bot;
            i += 3;
            // Allow the subscripted form: an underscore gluing the brace to
            // the bottom symbol.
            if (starts_with(s, i, "_{")) ++i;
        } else if (starts_with(s, i, "↠")) {
            t.kind = Tok::darrow;
            i += 3;
        } else if (reserved_char(s[i])) {
            switch (s[i]) {
                case '|': t.kind = Tok::pipe; break;
                case ';': t.kind = Tok::semi; break;
                case '(': t.kind = Tok::lparen; break;
                case ')': t.kind = Tok::rparen; break;
                case '{': t.kind = Tok::lbrace; break;
                default: t.kind = Tok::rbrace; break;
            }
            ++i;
        } else {
            t.kind = Tok::name;
            while (i < s.size() && s[i] != ' ' && s[i] != '\t' && s[i] != '\n' &&
                   s[i] != '\r' && !reserved_char(s[i]) && !operator_at(s, i)) {
                t.text += s[i];
                ++i;
            }
        }
        prev_end = i;
        toks.push_back(std::move(t));
    }
    toks.push_back(Token{Tok::end, "", s.size(), false});
    return toks;
}

class Parser {
public:
    explicit Parser(const std::string& text) : toks_(lex(text)) {}

    DependencyAtom parse() {
        if (peek().kind == Tok::name && peek().text == "dep" && peek(1).kind == Tok::lparen &&
            peek(1).glued) {
            advance();
            advance();
            AttributeTuple u = names();
            expect(Tok::semi);
            AttributeTuple v = names();
            expect(Tok::rparen);
            expect(Tok::end);
            return DependencyAtom::dep(std::move(u), std::move(v));
        }
        AttributeTuple first = names();
        const Token& t = peek();
        switch (t.kind) {
            case Tok::arrow: {
                advance();
                AttributeTuple second = names();
                expect(Tok::end);
                return DependencyAtom::fd(std::move(first), std::move(second));
            }
            case Tok::darrow: {
                advance();
                AttributeTuple x = names();
                expect(Tok::pipe);
                AttributeTuple y = names();
                expect(Tok::end);
                return DependencyAtom::emvd(std::move(first), std::move(x), std::move(y));
            }
            case Tok::bot: {
                advance();
                AttributeTuple w;
                if (peek().kind == Tok::lbrace) {
                    advance();
                    w = names();
                    expect(Tok::rbrace);
                }
                AttributeTuple v = names();
                expect(Tok::end);
                return DependencyAtom::ind(std::move(first), std::move(w), std::move(v));
            }
            default:
                fail(t, {describe(Tok::arrow), describe(Tok::darrow), describe(Tok::bot)});
        }
        return {};  // unreachable
    }

private:
    const Token& peek(std::size_t ahead = 0) const {
        std::size_t i = pos_ + ahead;
        return i < toks_.size() ? toks_[i] : toks_.back();
    }

    void advance() {
        if (pos_ + 1 < toks_.size()) ++pos_;
    }

    void expect(Tok kind) {
        const Token& t = peek();
        if (t.kind != kind) {
            fail(t, {describe(kind)});
        }
        advance();
    }

    AttributeTuple names() {
        AttributeTuple out;
        const Token& t = peek();
        if (t.kind == Tok::lparen) {
            advance();
            expect(Tok::rparen);
            return out;
        }
        if (t.kind != Tok::name) {
            fail(t, {describe(Tok::name), "()"});
        }
        while (peek().kind == Tok::name) {
            out.names.push_back(peek().text);
            advance();
            if (peek().kind == Tok::lparen && peek().glued) {
                throw UnsupportedFeatureError(
                    "term syntax beyond plain variables is not supported (offset " +
                    std::to_string(peek().offset) + ")");
            }
        }
        return out;
    }

    [[noreturn]] void fail(const Token& t, std::vector<std::string> expected) {
        std::string got = t.kind == Tok::end ? "end of input"
                          : t.kind == Tok::name ? "'" + t.text + "'"
                                                : std::string("'") + describe(t.kind) + "'";
        throw SyntaxError("unexpected " + got, t.offset, std::move(expected));
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
};

}  // namespace

DependencyAtom parse_atom(const std::string& text) {
    return Parser(text).parse();
}

}  // namespace teamind
