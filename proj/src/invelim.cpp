#include "ordeq/invelim.hpp"

#include <algorithm>
#include <chrono>

namespace ordeq {

namespace {

std::size_t inverse_count(const GrpWord& w) {
    std::size_t c = 0;
    for (const SignedVar& l : w.letters()) {
        if (l.sign < 0) ++c;
    }
    return c;
}

std::optional<std::size_t> first_inverted_target(const std::vector<GrpWord>& joins) {
    for (std::size_t i = 0; i < joins.size(); ++i) {
        if (!joins[i].inverse_free()) return i;
    }
    return std::nullopt;
}

}  // namespace

JoinForm density_step(JoinForm jf, std::size_t target) {
    if (target >= jf.joins.size()) throw std::invalid_argument("density_step: target out of range");
    const GrpWord& term = jf.joins[target];
    auto letters = term.letters();
    auto it = std::find_if(letters.begin(), letters.end(),
                           [](const SignedVar& l) { return l.sign < 0; });
    if (it == letters.end()) {
        throw std::invalid_argument("density_step: target term has no inverse");
    }

    // term = u · r^-1 · v with u inverse-free
    MonWord u;
    for (auto p = letters.begin(); p != it; ++p) u.push_back(p->var);
    Var r = it->var;
    GrpWord v = GrpWord::reduced(std::vector<SignedVar>(it + 1, letters.end()));

    Var y = jf.fresh.next();
    MonWord ry{r, y};
    GrpWord ry_g = GrpWord::from_mon(ry);

    JoinForm out;
    out.fresh = std::move(jf.fresh);
    out.t0 = concat(ry, jf.t0);

    for (std::size_t j = 0; j < jf.joins.size(); ++j) {
        if (j != target) out.joins.push_back(ry_g * jf.joins[j]);
    }
    // r y u y t0
    MonWord ryuyt0 = ry;
    ryuyt0.insert(ryuyt0.end(), u.begin(), u.end());
    ryuyt0.push_back(y);
    ryuyt0.insert(ryuyt0.end(), jf.t0.begin(), jf.t0.end());
    out.joins.push_back(GrpWord::from_mon(ryuyt0));
    out.joins.push_back(std::move(v));
    return out;
}

std::vector<Statement> eliminate_inverses(const Statement& s, const NormalizeLimits& limits) {
    if (s.inverse_free()) return {s};

    // LG |= a == b  iff  LG |= e <= a^-1 b /\ a b^-1;
    // LG |= a <= b  iff  LG |= e <= a^-1 b.
    LTerm right = LTerm::product(LTerm::inverse(s.lhs), s.rhs);
    if (s.kind == Statement::Kind::Eq) {
        right = LTerm::meet(std::move(right),
                            LTerm::product(s.lhs, LTerm::inverse(s.rhs)));
    }

    std::vector<std::vector<GrpWord>> join_sets = group_normal_meet_of_joins(right, limits);
    std::sort(join_sets.begin(), join_sets.end());

    FreshVarSupply supply = FreshVarSupply::avoiding(s);

    std::vector<Statement> out;
    out.reserve(join_sets.size());
    for (const auto& joins : join_sets) {
        JoinForm form{MonWord{}, joins, std::move(supply)};
        while (auto target = first_inverted_target(form.joins)) {
            form = density_step(std::move(form), *target);
        }
        supply = std::move(form.fresh);

        LTerm rhs = term_of_word(form.joins.front());
        for (std::size_t i = 1; i < form.joins.size(); ++i) {
            rhs = LTerm::join(std::move(rhs), term_of_word(form.joins[i]));
        }
        out.push_back(Statement{Statement::Kind::Leq, term_of_word(form.t0), std::move(rhs)});
    }
    return out;
}

LgVerdict decide_lg(const Statement& s, const SearchBudget& budget,
                    const NormalizeLimits& limits) {
    LgVerdict out{eliminate_inverses(s, limits), std::nullopt, Verdict::valid(SearchStats{})};

    SearchStats total;
    auto start = std::chrono::steady_clock::now();
    for (std::size_t i = 0; i < out.eliminated.size(); ++i) {
        SearchBudget remaining = budget;
        remaining.max_nodes = budget.max_nodes - std::min(budget.max_nodes, total.nodes);
        remaining.max_seconds =
            budget.max_seconds -
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        Verdict v = decide_dlm(out.eliminated[i], remaining, limits);
        total.nodes += v.stats().nodes;
        total.propagations += v.stats().propagations;
        total.universe = std::max(total.universe, v.stats().universe);
        if (!v.is_valid()) {
            out.failing = i;
            out.verdict = Verdict::invalid(v.certificate(), total);
            return out;
        }
    }
    out.verdict = Verdict::valid(total);
    return out;
}

}  // namespace ordeq
