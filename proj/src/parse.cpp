// Recursive-descent parser and precedence-aware printer for the statement
// grammar in terms.hpp.

#include <cctype>
#include <cstdlib>

#include "ordeq/terms.hpp"

namespace ordeq {

ParseError::ParseError(const std::string& msg, int line, int column)
    : std::runtime_error(msg + " (line " + std::to_string(line) + ", column " +
                         std::to_string(column) + ")"),
      line_(line),
      column_(column) {}

namespace {

class Lexer {
public:
    enum class Tok { Ident, Leq, Eq, Join, Meet, Star, Caret, Minus, Int, LParen, RParen, End };

    explicit Lexer(std::string_view text) : text_(text) { advance(); }

    Tok tok() const { return tok_; }
    const std::string& ident() const { return ident_; }
    long long integer() const { return int_; }
    int line() const { return tok_line_; }
    int column() const { return tok_col_; }

    void advance() {
        skip_ws();
        tok_line_ = line_;
        tok_col_ = col_;
        if (pos_ >= text_.size()) {
            tok_ = Tok::End;
            return;
        }
        char c = text_[pos_];
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
                bump();
            }
            ident_ = std::string(text_.substr(start, pos_ - start));
            tok_ = Tok::Ident;
            return;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) bump();
            int_ = std::strtoll(std::string(text_.substr(start, pos_ - start)).c_str(), nullptr, 10);
            tok_ = Tok::Int;
            return;
        }
        switch (c) {
            case '<':
                expect_next('=', "'<='");
                tok_ = Tok::Leq;
                return;
            case '=':
                expect_next('=', "'=='");
                tok_ = Tok::Eq;
                return;
            case '\\':
                expect_next('/', "'\\/'");
                tok_ = Tok::Join;
                return;
            case '/':
                expect_next('\\', "'/\\'");
                tok_ = Tok::Meet;
                return;
            case '*':
                bump();
                tok_ = Tok::Star;
                return;
            case '^':
                bump();
                tok_ = Tok::Caret;
                return;
            case '-':
                bump();
                tok_ = Tok::Minus;
                return;
            case '(':
                bump();
                tok_ = Tok::LParen;
                return;
            case ')':
                bump();
                tok_ = Tok::RParen;
                return;
            default:
                fail(std::string("unexpected character '") + c + "'");
        }
    }

    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(msg, tok_line_, tok_col_);
    }

private:
    void bump() {
        if (text_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) bump();
    }

    void expect_next(char c, const char* what) {
        bump();
        if (pos_ >= text_.size() || text_[pos_] != c) {
            throw ParseError(std::string("expected ") + what, line_, col_ - 1);
        }
        bump();
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    int line_ = 1, col_ = 1;
    int tok_line_ = 1, tok_col_ = 1;
    Tok tok_ = Tok::End;
    std::string ident_;
    long long int_ = 0;
};

class Parser {
public:
    Parser(std::string_view text, const ParseOptions& opts) : lex_(text), opts_(opts) {}

    Statement statement() {
        LTerm lhs = join();
        Statement::Kind kind;
        if (lex_.tok() == Lexer::Tok::Leq) {
            kind = Statement::Kind::Leq;
        } else if (lex_.tok() == Lexer::Tok::Eq) {
            kind = Statement::Kind::Eq;
        } else {
            lex_.fail("expected '<=' or '=='");
        }
        lex_.advance();
        LTerm rhs = join();
        expect_end();
        return Statement{kind, std::move(lhs), std::move(rhs)};
    }

    LTerm whole_term() {
        LTerm t = join();
        expect_end();
        return t;
    }

private:
    void expect_end() {
        if (lex_.tok() != Lexer::Tok::End) lex_.fail("unexpected trailing input");
    }

    LTerm join() {
        LTerm t = meet();
        while (lex_.tok() == Lexer::Tok::Join) {
            lex_.advance();
            t = LTerm::join(std::move(t), meet());
        }
        return t;
    }

    LTerm meet() {
        LTerm t = prod();
        while (lex_.tok() == Lexer::Tok::Meet) {
            lex_.advance();
            t = LTerm::meet(std::move(t), prod());
        }
        return t;
    }

    LTerm prod() {
        LTerm t = factor();
        while (lex_.tok() == Lexer::Tok::Star) {
            lex_.advance();
            t = LTerm::product(std::move(t), factor());
        }
        return t;
    }

    LTerm factor() {
        LTerm t = atom();
        while (lex_.tok() == Lexer::Tok::Caret) {
            lex_.advance();
            bool negative = false;
            if (lex_.tok() == Lexer::Tok::Minus) {
                negative = true;
                lex_.advance();
            }
            if (lex_.tok() != Lexer::Tok::Int) lex_.fail("expected integer exponent after '^'");
            long long k = lex_.integer();
            if (k <= 0) lex_.fail("exponent must be a nonzero integer");
            lex_.advance();
            LTerm base = negative ? LTerm::inverse(t) : t;
            LTerm powered = base;
            for (long long i = 1; i < k; ++i) powered = LTerm::product(std::move(powered), base);
            t = std::move(powered);
        }
        return t;
    }

    LTerm atom() {
        switch (lex_.tok()) {
            case Lexer::Tok::Ident: {
                std::string name = lex_.ident();
                lex_.advance();
                if (name == "e") return LTerm::identity();
                if (!opts_.allow_fresh_prefix && name.rfind("_y", 0) == 0) {
                    lex_.fail("variable names with the reserved prefix '_y' are not allowed");
                }
                return LTerm::variable(Var(std::move(name)));
            }
            case Lexer::Tok::LParen: {
                lex_.advance();
                LTerm t = join();
                if (lex_.tok() != Lexer::Tok::RParen) lex_.fail("expected ')'");
                lex_.advance();
                return t;
            }
            default:
                lex_.fail("expected 'e', a variable, or '('");
        }
    }

    Lexer lex_;
    ParseOptions opts_;
};

// Precedence levels for printing: join < meet < product < inverse suffix.
enum Level : int { LvJoin = 0, LvMeet = 1, LvProd = 2, LvFactor = 3 };

int level_of(LTerm::Kind k) {
    switch (k) {
        case LTerm::Kind::Join:
            return LvJoin;
        case LTerm::Kind::Meet:
            return LvMeet;
        case LTerm::Kind::Product:
            return LvProd;
        default:
            return LvFactor;
    }
}

void render(const LTerm& t, int min_level, std::string& out) {
    int lv = level_of(t.kind());
    bool parens = lv < min_level;
    if (parens) out += '(';
    switch (t.kind()) {
        case LTerm::Kind::Identity:
            out += 'e';
            break;
        case LTerm::Kind::Variable:
            out += t.var().name();
            break;
        case LTerm::Kind::Inverse:
            render(t.child(0), LvFactor, out);
            out += "^-1";
            break;
        case LTerm::Kind::Product:
            render(t.child(0), LvProd, out);
            out += '*';
            render(t.child(1), LvProd + 1, out);
            break;
        case LTerm::Kind::Meet:
            render(t.child(0), LvMeet, out);
            out += " /\\ ";
            render(t.child(1), LvMeet + 1, out);
            break;
        case LTerm::Kind::Join:
            render(t.child(0), LvJoin, out);
            out += " \\/ ";
            render(t.child(1), LvJoin + 1, out);
            break;
    }
    if (parens) out += ')';
}

}  // namespace

Statement parse_statement(std::string_view text, const ParseOptions& opts) {
    return Parser(text, opts).statement();
}

LTerm parse_term(std::string_view text, const ParseOptions& opts) {
    return Parser(text, opts).whole_term();
}

namespace {

void flatten_word(const LTerm& t, MonWord& out) {
    switch (t.kind()) {
        case LTerm::Kind::Identity:
            return;
        case LTerm::Kind::Variable:
            out.push_back(t.var());
            return;
        case LTerm::Kind::Product:
            flatten_word(t.child(0), out);
            flatten_word(t.child(1), out);
            return;
        default:
            throw ParseError("expected a plain word (product of variables or 'e')", 1, 1);
    }
}

}  // namespace

MonWord parse_word(std::string_view text, const ParseOptions& opts) {
    LTerm t = parse_term(text, opts);
    MonWord out;
    flatten_word(t, out);
    return out;
}

std::string render_term(const LTerm& t) {
    std::string out;
    render(t, LvJoin, out);
    return out;
}

std::string render_statement(const Statement& s) {
    std::string out = render_term(s.lhs);
    out += s.kind == Statement::Kind::Leq ? " <= " : " == ";
    out += render_term(s.rhs);
    return out;
}

}  // namespace ordeq
