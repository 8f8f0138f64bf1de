#include "ordeq/terms.hpp"

#include <algorithm>
#include <cctype>

namespace ordeq {

namespace {

bool valid_var_name(std::string_view name) {
    if (name.empty() || name == "e") return false;
    if (!(std::isalpha(static_cast<unsigned char>(name[0])) || name[0] == '_')) return false;
    for (char c : name.substr(1)) {
        if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
    }
    return true;
}

}  // namespace

Var::Var(std::string name) : name_(std::move(name)) {
    if (!valid_var_name(name_)) {
        throw std::invalid_argument("invalid variable name: '" + name_ + "'");
    }
}

MonWord concat(const MonWord& a, const MonWord& b) {
    MonWord out = a;
    out.insert(out.end(), b.begin(), b.end());
    return out;
}

bool shortlex_less(const MonWord& a, const MonWord& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
}

std::string word_to_string(const MonWord& w) {
    if (w.empty()) return "e";
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i > 0) out += '*';
        out += w[i].name();
    }
    return out;
}

GrpWord GrpWord::reduced(std::vector<SignedVar> letters) {
    GrpWord out;
    for (auto& l : letters) {
        if (!out.letters_.empty() && out.letters_.back().var == l.var &&
            out.letters_.back().sign == -l.sign) {
            out.letters_.pop_back();
        } else {
            out.letters_.push_back(std::move(l));
        }
    }
    return out;
}

GrpWord GrpWord::from_mon(const MonWord& w) {
    GrpWord out;
    out.letters_.reserve(w.size());
    for (const Var& v : w) out.letters_.push_back(SignedVar{v, +1});
    return out;
}

bool GrpWord::inverse_free() const {
    return std::all_of(letters_.begin(), letters_.end(),
                       [](const SignedVar& l) { return l.sign > 0; });
}

MonWord GrpWord::to_mon_word() const {
    if (!inverse_free()) throw std::logic_error("to_mon_word: word contains inverses");
    MonWord out;
    out.reserve(letters_.size());
    for (const SignedVar& l : letters_) out.push_back(l.var);
    return out;
}

GrpWord GrpWord::formal_inverse() const {
    GrpWord out;
    out.letters_.reserve(letters_.size());
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) {
        out.letters_.push_back(SignedVar{it->var, static_cast<std::int8_t>(-it->sign)});
    }
    return out;  // reversal of a reduced word stays reduced
}

GrpWord operator*(const GrpWord& a, const GrpWord& b) {
    std::vector<SignedVar> all = a.letters_;
    all.insert(all.end(), b.letters_.begin(), b.letters_.end());
    return GrpWord::reduced(std::move(all));
}

GrpWord reduce_group_word(std::vector<SignedVar> letters) {
    return GrpWord::reduced(std::move(letters));
}

bool shortlex_less(const GrpWord& a, const GrpWord& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.letters() < b.letters();
}

std::string word_to_string(const GrpWord& w) {
    if (w.empty()) return "e";
    std::string out;
    for (std::size_t i = 0; i < w.letters().size(); ++i) {
        if (i > 0) out += '*';
        out += w.letters()[i].var.name();
        if (w.letters()[i].sign < 0) out += "^-1";
    }
    return out;
}

LTerm LTerm::identity() {
    static const auto node = std::make_shared<const Node>(Node{Kind::Identity, {}, nullptr, nullptr});
    return LTerm(node);
}

LTerm LTerm::variable(Var v) {
    return LTerm(std::make_shared<const Node>(Node{Kind::Variable, std::move(v), nullptr, nullptr}));
}

LTerm LTerm::inverse(LTerm t) {
    return LTerm(std::make_shared<const Node>(Node{Kind::Inverse, {}, std::move(t.node_), nullptr}));
}

LTerm LTerm::product(LTerm a, LTerm b) {
    return LTerm(std::make_shared<const Node>(Node{Kind::Product, {}, std::move(a.node_), std::move(b.node_)}));
}

LTerm LTerm::meet(LTerm a, LTerm b) {
    return LTerm(std::make_shared<const Node>(Node{Kind::Meet, {}, std::move(a.node_), std::move(b.node_)}));
}

LTerm LTerm::join(LTerm a, LTerm b) {
    return LTerm(std::make_shared<const Node>(Node{Kind::Join, {}, std::move(a.node_), std::move(b.node_)}));
}

const Var& LTerm::var() const {
    if (kind() != Kind::Variable) throw std::logic_error("LTerm::var on non-variable node");
    return *node_->var;
}

LTerm LTerm::child(int i) const {
    switch (kind()) {
        case Kind::Inverse:
            if (i == 0) return LTerm(node_->a);
            break;
        case Kind::Product:
        case Kind::Meet:
        case Kind::Join:
            if (i == 0) return LTerm(node_->a);
            if (i == 1) return LTerm(node_->b);
            break;
        default:
            break;
    }
    throw std::logic_error("LTerm::child: no such child");
}

bool LTerm::inverse_free() const {
    switch (kind()) {
        case Kind::Identity:
        case Kind::Variable:
            return true;
        case Kind::Inverse:
            return false;
        default:
            return child(0).inverse_free() && child(1).inverse_free();
    }
}

bool LTerm::operator==(const LTerm& other) const {
    if (node_ == other.node_) return true;
    if (kind() != other.kind()) return false;
    switch (kind()) {
        case Kind::Identity:
            return true;
        case Kind::Variable:
            return var() == other.var();
        case Kind::Inverse:
            return child(0) == other.child(0);
        default:
            return child(0) == other.child(0) && child(1) == other.child(1);
    }
}

LTerm term_of_word(const MonWord& w) {
    LTerm t = LTerm::identity();
    bool first = true;
    for (const Var& v : w) {
        LTerm atom = LTerm::variable(v);
        t = first ? atom : LTerm::product(std::move(t), std::move(atom));
        first = false;
    }
    return t;
}

LTerm term_of_word(const GrpWord& w) {
    LTerm t = LTerm::identity();
    bool first = true;
    for (const SignedVar& l : w.letters()) {
        LTerm atom = LTerm::variable(l.var);
        if (l.sign < 0) atom = LTerm::inverse(std::move(atom));
        t = first ? atom : LTerm::product(std::move(t), std::move(atom));
        first = false;
    }
    return t;
}

namespace {

void collect_vars(const LTerm& t, std::set<Var>& out) {
    switch (t.kind()) {
        case LTerm::Kind::Identity:
            return;
        case LTerm::Kind::Variable:
            out.insert(t.var());
            return;
        case LTerm::Kind::Inverse:
            collect_vars(t.child(0), out);
            return;
        default:
            collect_vars(t.child(0), out);
            collect_vars(t.child(1), out);
            return;
    }
}

}  // namespace

std::set<Var> variables_of(const LTerm& t) {
    std::set<Var> out;
    collect_vars(t, out);
    return out;
}

std::set<Var> variables_of(const Statement& s) {
    std::set<Var> out;
    collect_vars(s.lhs, out);
    collect_vars(s.rhs, out);
    return out;
}

FreshVarSupply::FreshVarSupply(std::set<std::string> forbidden)
    : forbidden_(std::move(forbidden)) {}

FreshVarSupply FreshVarSupply::avoiding(const Statement& s) {
    std::set<std::string> names;
    for (const Var& v : variables_of(s)) names.insert(v.name());
    return FreshVarSupply(std::move(names));
}

Var FreshVarSupply::next() {
    for (;;) {
        std::string name = "_y" + std::to_string(counter_++);
        if (forbidden_.insert(name).second) return Var(std::move(name));
    }
}

std::vector<Var> FreshVarSupply::take(std::size_t n) {
    std::vector<Var> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.push_back(next());
    return out;
}

void FreshVarSupply::forbid(const Var& v) { forbidden_.insert(v.name()); }

}  // namespace ordeq
