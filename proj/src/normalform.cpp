#include "ordeq/normalform.hpp"

#include <algorithm>

namespace ordeq {

namespace {

// A normal form is a list of components, each a set of words: join of
// meets when building the left side, meet of joins when building the
// right side. Both are computed by the same recursion; only the role of
// Meet and Join flips.
template <typename W>
using NormalForm = std::vector<std::vector<W>>;

MonWord operator*(const MonWord& a, const MonWord& b) { return concat(a, b); }

void charge(std::size_t words, std::size_t& spent, const NormalizeLimits& limits) {
    spent += words;
    if (spent > limits.max_words) {
        throw SizeCapError("normal form exceeds the word cap (" +
                           std::to_string(limits.max_words) + ")");
    }
}

template <typename W>
void canonicalize(NormalForm<W>& nf) {
    for (auto& component : nf) {
        std::sort(component.begin(), component.end(),
                  [](const W& a, const W& b) { return shortlex_less(a, b); });
        component.erase(std::unique(component.begin(), component.end()), component.end());
    }
    std::sort(nf.begin(), nf.end());
    nf.erase(std::unique(nf.begin(), nf.end()), nf.end());
}

template <typename W>
NormalForm<W> merge_components(const NormalForm<W>& a, const NormalForm<W>& b,
                               std::size_t& spent, const NormalizeLimits& limits) {
    NormalForm<W> out;
    out.reserve(a.size() * b.size());
    for (const auto& ca : a) {
        for (const auto& cb : b) {
            charge(ca.size() + cb.size(), spent, limits);
            std::vector<W> c = ca;
            c.insert(c.end(), cb.begin(), cb.end());
            out.push_back(std::move(c));
        }
    }
    canonicalize(out);
    return out;
}

template <typename W>
NormalForm<W> product_components(const NormalForm<W>& a, const NormalForm<W>& b,
                                 std::size_t& spent, const NormalizeLimits& limits) {
    NormalForm<W> out;
    out.reserve(a.size() * b.size());
    for (const auto& ca : a) {
        for (const auto& cb : b) {
            charge(ca.size() * cb.size(), spent, limits);
            std::vector<W> c;
            c.reserve(ca.size() * cb.size());
            for (const W& wa : ca) {
                for (const W& wb : cb) c.push_back(wa * wb);
            }
            out.push_back(std::move(c));
        }
    }
    canonicalize(out);
    return out;
}

template <typename W>
W leaf_word(const LTerm& t);

template <>
MonWord leaf_word<MonWord>(const LTerm& t) {
    if (t.kind() == LTerm::Kind::Variable) return MonWord{t.var()};
    throw std::invalid_argument("monoid normal form applied to a term with inverses");
}

template <>
GrpWord leaf_word<GrpWord>(const LTerm& t) {
    if (t.kind() == LTerm::Kind::Variable) {
        return GrpWord::reduced({SignedVar{t.var(), +1}});
    }
    // push_inverses_to_leaves guarantees Inverse sits directly on a variable
    return GrpWord::reduced({SignedVar{t.child(0).var(), -1}});
}

// additive = Join builds join-of-meets, additive = Meet builds meet-of-joins.
template <typename W>
NormalForm<W> normal_form(const LTerm& t, LTerm::Kind additive, std::size_t& spent,
                          const NormalizeLimits& limits) {
    switch (t.kind()) {
        case LTerm::Kind::Identity:
            charge(1, spent, limits);
            return {{W{}}};
        case LTerm::Kind::Variable:
        case LTerm::Kind::Inverse:
            charge(1, spent, limits);
            return {{leaf_word<W>(t)}};
        case LTerm::Kind::Product:
            return product_components(normal_form<W>(t.child(0), additive, spent, limits),
                                      normal_form<W>(t.child(1), additive, spent, limits),
                                      spent, limits);
        case LTerm::Kind::Meet:
        case LTerm::Kind::Join: {
            NormalForm<W> a = normal_form<W>(t.child(0), additive, spent, limits);
            NormalForm<W> b = normal_form<W>(t.child(1), additive, spent, limits);
            if (t.kind() == additive) {
                a.insert(a.end(), b.begin(), b.end());
                canonicalize(a);
                return a;
            }
            return merge_components(a, b, spent, limits);
        }
    }
    throw std::logic_error("unreachable");
}

template <typename W, typename Basic>
std::vector<Basic> basics_of(const LTerm& lhs, const LTerm& rhs, std::size_t& spent,
                             const NormalizeLimits& limits) {
    NormalForm<W> left = normal_form<W>(lhs, LTerm::Kind::Join, spent, limits);
    NormalForm<W> right = normal_form<W>(rhs, LTerm::Kind::Meet, spent, limits);
    std::vector<Basic> out;
    out.reserve(left.size() * right.size());
    for (const auto& meets : left) {
        for (const auto& joins : right) out.push_back(Basic{meets, joins});
    }
    return out;
}

template <typename Basic, typename W>
std::vector<Basic> statement_basics(const Statement& s, const NormalizeLimits& limits,
                                    const LTerm& lhs, const LTerm& rhs) {
    std::size_t spent = 0;
    std::vector<Basic> out = basics_of<W, Basic>(lhs, rhs, spent, limits);
    if (s.kind == Statement::Kind::Eq) {
        std::vector<Basic> rev = basics_of<W, Basic>(rhs, lhs, spent, limits);
        out.insert(out.end(), rev.begin(), rev.end());
    }
    std::sort(out.begin(), out.end(), [](const Basic& a, const Basic& b) {
        if (a.meets != b.meets) return a.meets < b.meets;
        return a.joins < b.joins;
    });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace

std::vector<BasicIneq> to_basic_inequalities(const Statement& s, const NormalizeLimits& limits) {
    if (!s.inverse_free()) {
        throw std::invalid_argument("to_basic_inequalities: statement contains inverses");
    }
    return statement_basics<BasicIneq, MonWord>(s, limits, s.lhs, s.rhs);
}

std::vector<GrpBasicIneq> to_basic_inequalities_group(const Statement& s,
                                                      const NormalizeLimits& limits) {
    LTerm lhs = push_inverses_to_leaves(s.lhs);
    LTerm rhs = push_inverses_to_leaves(s.rhs);
    return statement_basics<GrpBasicIneq, GrpWord>(s, limits, lhs, rhs);
}

std::vector<std::vector<GrpWord>> group_normal_meet_of_joins(const LTerm& t,
                                                             const NormalizeLimits& limits) {
    std::size_t spent = 0;
    return normal_form<GrpWord>(push_inverses_to_leaves(t), LTerm::Kind::Meet, spent, limits);
}

namespace {

LTerm push_inverses(const LTerm& t, bool inverted) {
    switch (t.kind()) {
        case LTerm::Kind::Identity:
            return LTerm::identity();
        case LTerm::Kind::Variable:
            return inverted ? LTerm::inverse(LTerm::variable(t.var())) : t;
        case LTerm::Kind::Inverse:
            return push_inverses(t.child(0), !inverted);
        case LTerm::Kind::Product: {
            LTerm a = push_inverses(t.child(0), inverted);
            LTerm b = push_inverses(t.child(1), inverted);
            return inverted ? LTerm::product(std::move(b), std::move(a))
                            : LTerm::product(std::move(a), std::move(b));
        }
        case LTerm::Kind::Meet: {
            LTerm a = push_inverses(t.child(0), inverted);
            LTerm b = push_inverses(t.child(1), inverted);
            return inverted ? LTerm::join(std::move(a), std::move(b))
                            : LTerm::meet(std::move(a), std::move(b));
        }
        case LTerm::Kind::Join: {
            LTerm a = push_inverses(t.child(0), inverted);
            LTerm b = push_inverses(t.child(1), inverted);
            return inverted ? LTerm::meet(std::move(a), std::move(b))
                            : LTerm::join(std::move(a), std::move(b));
        }
    }
    throw std::logic_error("unreachable");
}

}  // namespace

LTerm push_inverses_to_leaves(const LTerm& t) { return push_inverses(t, false); }

Statement basic_to_statement(const BasicIneq& b) {
    auto chain = [](const std::vector<MonWord>& words, bool is_meet) {
        LTerm t = term_of_word(words.front());
        for (std::size_t i = 1; i < words.size(); ++i) {
            LTerm w = term_of_word(words[i]);
            t = is_meet ? LTerm::meet(std::move(t), std::move(w))
                        : LTerm::join(std::move(t), std::move(w));
        }
        return t;
    };
    return Statement{Statement::Kind::Leq, chain(b.meets, true), chain(b.joins, false)};
}

}  // namespace ordeq
