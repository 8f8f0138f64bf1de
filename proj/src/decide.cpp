#include "ordeq/decide.hpp"

#include <chrono>

#include "ordeq/lift.hpp"

namespace ordeq {

PreorderSearchResult search_preorder(const PairSet& s, bool strict, const SearchBudget& budget) {
    SubtermSet universe = SubtermSet::initial_subterms(s);

    OrderSearchProblem problem;
    problem.n = universe.size();
    problem.strict_invariance = strict;
    problem.antisymmetric = false;
    problem.successors.reserve(s.alphabet.size());
    for (const Var& x : s.alphabet) {
        std::vector<std::int32_t> succ(universe.size(), -1);
        for (std::size_t i = 0; i < universe.size(); ++i) {
            if (auto j = universe.append(i, x)) succ[i] = static_cast<std::int32_t>(*j);
        }
        problem.successors.push_back(std::move(succ));
    }
    for (const auto& [sw, tw] : s.pairs) {
        problem.strict_pairs.emplace_back(static_cast<std::uint32_t>(*universe.index_of(sw)),
                                          static_cast<std::uint32_t>(*universe.index_of(tw)));
    }

    OrderSearchResult res = search_total_order(problem, budget);
    PreorderSearchResult out;
    out.status = res.status;
    out.stats = res.stats;
    if (res.status == SearchStatus::Found) {
        out.relation = PreorderRel{std::move(universe), std::move(*res.relation)};
    }
    return out;
}

namespace {

Verdict decide_basic_form(const Statement& s, bool strict, const SearchBudget& budget,
                          const NormalizeLimits& limits) {
    if (!s.inverse_free()) {
        throw std::invalid_argument("statement contains inverses; use decide_lg");
    }
    std::vector<BasicIneq> basics = to_basic_inequalities(s, limits);

    SearchStats total;
    auto start = std::chrono::steady_clock::now();
    for (const BasicIneq& basic : basics) {
        SearchBudget remaining = budget;
        remaining.max_nodes = budget.max_nodes - std::min(budget.max_nodes, total.nodes);
        remaining.max_seconds =
            budget.max_seconds -
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

        PairSet pairs = PairSet::from_basic(basic);
        PreorderSearchResult res = search_preorder(pairs, strict, remaining);
        total.nodes += res.stats.nodes;
        total.propagations += res.stats.propagations;
        total.universe = std::max(total.universe, res.stats.universe);

        switch (res.status) {
            case SearchStatus::BudgetExceeded:
                throw BudgetError(total);
            case SearchStatus::Exhausted:
                continue;
            case SearchStatus::Found:
                break;
        }

        const PreorderRel& rel = *res.relation;
        if (!verify_preorder(rel, strict, pairs).empty()) {
            throw std::logic_error("internal error: search produced an inconsistent relation");
        }
        Countermodel cm = strict ? build_pl_countermodel(rel, pairs, basic)
                                 : build_end_countermodel(rel, pairs, basic);
        if (!reevaluate(cm)) {
            throw std::logic_error("internal error: countermodel failed re-evaluation");
        }
        return Verdict::invalid(InvalidCertificate{basic, std::move(cm)}, total);
    }
    return Verdict::valid(total);
}

}  // namespace

Verdict decide_dlm(const Statement& s, const SearchBudget& budget, const NormalizeLimits& limits) {
    return decide_basic_form(s, /*strict=*/false, budget, limits);
}

Verdict decide_lg_inverse_free(const Statement& s, const SearchBudget& budget,
                               const NormalizeLimits& limits) {
    return decide_basic_form(s, /*strict=*/true, budget, limits);
}

}  // namespace ordeq
