#pragma once

// Terms, words and statements for lattice-ordered monoids and groups.
//
// Statement grammar (whitespace insignificant):
//
//   statement := term ("<=" | "==") term
//   term      := join
//   join      := meet ( "\/" meet )*
//   meet      := prod ( "/\" prod )*
//   prod      := factor ( "*" factor )*
//   factor    := atom ( "^" exponent )*        exponent: nonzero integer
//   atom      := "e" | VAR | "(" term ")"
//   VAR       := [a-zA-Z_][a-zA-Z0-9_]*  except the reserved identifier "e"
//
// "x^2" abbreviates x*x, "x^-1" is the group inverse, and "x^-2" abbreviates
// x^-1*x^-1. Names starting with "_y" are reserved for machine-generated
// fresh variables and rejected in user input unless explicitly allowed.

#include <cstdint>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ordeq {

// A named variable; equality and ordering are by name.
class Var {
public:
    explicit Var(std::string name);
    const std::string& name() const { return name_; }
    auto operator<=>(const Var&) const = default;

private:
    std::string name_;
};

// A word of the free monoid: a finite sequence of variables. The empty
// word is the identity e.
using MonWord = std::vector<Var>;

MonWord concat(const MonWord& a, const MonWord& b);
bool shortlex_less(const MonWord& a, const MonWord& b);
std::string word_to_string(const MonWord& w);

struct SignedVar {
    Var var;
    std::int8_t sign;  // +1 or -1
    auto operator<=>(const SignedVar&) const = default;
};

// A freely reduced word of the free group: no adjacent x·x^-1 or x^-1·x.
class GrpWord {
public:
    GrpWord() = default;

    // Free reduction of an arbitrary signed-letter sequence.
    static GrpWord reduced(std::vector<SignedVar> letters);
    static GrpWord from_mon(const MonWord& w);

    const std::vector<SignedVar>& letters() const { return letters_; }
    bool empty() const { return letters_.empty(); }
    std::size_t size() const { return letters_.size(); }
    bool inverse_free() const;
    MonWord to_mon_word() const;  // pre: inverse_free()
    GrpWord formal_inverse() const;

    // Concatenation with reduction at the seam.
    friend GrpWord operator*(const GrpWord& a, const GrpWord& b);

    auto operator<=>(const GrpWord&) const = default;

private:
    std::vector<SignedVar> letters_;
};

// Spec name for GrpWord::reduced.
GrpWord reduce_group_word(std::vector<SignedVar> letters);
bool shortlex_less(const GrpWord& a, const GrpWord& b);
std::string word_to_string(const GrpWord& w);

// Immutable term tree over {e, variables, ^-1, ·, /\, \/}. Copies share
// structure; all accessors are const, so values are safe to share across
// threads.
class LTerm {
public:
    enum class Kind : std::uint8_t { Identity, Variable, Inverse, Product, Meet, Join };

    static LTerm identity();
    static LTerm variable(Var v);
    static LTerm inverse(LTerm t);
    static LTerm product(LTerm a, LTerm b);
    static LTerm meet(LTerm a, LTerm b);
    static LTerm join(LTerm a, LTerm b);

    Kind kind() const { return node_->kind; }
    const Var& var() const;   // pre: kind() == Variable
    LTerm child(int i) const; // pre: i==0 for Inverse, i in {0,1} for binary nodes

    bool inverse_free() const;
    bool operator==(const LTerm& other) const;  // structural equality

private:
    struct Node {
        Kind kind;
        std::optional<Var> var;
        std::shared_ptr<const Node> a, b;
    };
    explicit LTerm(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    std::shared_ptr<const Node> node_;
};

// Left-associated product of the word's letters; empty word gives e.
LTerm term_of_word(const MonWord& w);
LTerm term_of_word(const GrpWord& w);

struct Statement {
    enum class Kind : std::uint8_t { Leq, Eq };
    Kind kind;
    LTerm lhs, rhs;
    bool inverse_free() const { return lhs.inverse_free() && rhs.inverse_free(); }
    bool operator==(const Statement& o) const {
        return kind == o.kind && lhs == o.lhs && rhs == o.rhs;
    }
};

std::set<Var> variables_of(const LTerm& t);
std::set<Var> variables_of(const Statement& s);

// Deterministic supply of fresh variables _y0, _y1, ... skipping any name
// in the forbidden set and anything previously emitted.
class FreshVarSupply {
public:
    FreshVarSupply() = default;
    explicit FreshVarSupply(std::set<std::string> forbidden);
    static FreshVarSupply avoiding(const Statement& s);

    Var next();
    std::vector<Var> take(std::size_t n);
    void forbid(const Var& v);

private:
    std::set<std::string> forbidden_;
    std::uint64_t counter_ = 0;
};

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, int line, int column);
    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_, column_;
};

struct ParseOptions {
    bool allow_fresh_prefix = false;  // accept variables named _y*
};

Statement parse_statement(std::string_view text, const ParseOptions& opts = {});
LTerm parse_term(std::string_view text, const ParseOptions& opts = {});

// A word given in the statement grammar: a product of variables, or "e".
MonWord parse_word(std::string_view text, const ParseOptions& opts = {});

std::string render_term(const LTerm& t);
std::string render_statement(const Statement& s);

}  // namespace ordeq
