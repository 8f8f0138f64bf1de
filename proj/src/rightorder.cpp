#include "ordeq/rightorder.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace ordeq {

FreeOrderResult right_order_exists_free(const OrderQuery& q, const SearchBudget& budget) {
    if (q.constraints.empty()) {
        return FreeOrderResult{true, std::nullopt, std::nullopt};  // shortlex works
    }

    std::set<std::string> names;
    for (const auto& [s, t] : q.constraints) {
        for (const Var& v : s) names.insert(v.name());
        for (const Var& v : t) names.insert(v.name());
    }
    FreshVarSupply supply{std::move(names)};

    // /\ t_i y_i <= \/ s_i y_i for distinct fresh y_i; an order exists iff
    // this fails in DLM.
    LTerm lhs = LTerm::identity();
    LTerm rhs = LTerm::identity();
    bool first = true;
    for (const auto& [s, t] : q.constraints) {
        Var y = supply.next();
        MonWord sy = s, ty = t;
        sy.push_back(y);
        ty.push_back(y);
        if (first) {
            lhs = term_of_word(ty);
            rhs = term_of_word(sy);
            first = false;
        } else {
            lhs = LTerm::meet(std::move(lhs), term_of_word(ty));
            rhs = LTerm::join(std::move(rhs), term_of_word(sy));
        }
    }
    Statement encoded{Statement::Kind::Leq, std::move(lhs), std::move(rhs)};
    Verdict v = decide_dlm(encoded, budget);
    return FreeOrderResult{!v.is_valid(), std::move(encoded), std::move(v)};
}

FiniteMonoid::FiniteMonoid(int size, int unit, std::vector<std::vector<int>> table)
    : unit_(unit), table_(std::move(table)) {
    if (size < 1 || static_cast<int>(table_.size()) != size) {
        throw std::invalid_argument("FiniteMonoid: table must be size x size");
    }
    for (const auto& row : table_) {
        if (static_cast<int>(row.size()) != size) {
            throw std::invalid_argument("FiniteMonoid: table must be size x size");
        }
        for (int v : row) {
            if (v < 0 || v >= size) throw std::invalid_argument("FiniteMonoid: entry out of range");
        }
    }
    if (unit < 0 || unit >= size) throw std::invalid_argument("FiniteMonoid: unit out of range");
    for (int a = 0; a < size; ++a) {
        if (mul(unit, a) != a || mul(a, unit) != a) {
            throw std::invalid_argument("FiniteMonoid: unit laws fail");
        }
    }
    for (int a = 0; a < size; ++a) {
        for (int b = 0; b < size; ++b) {
            for (int c = 0; c < size; ++c) {
                if (mul(mul(a, b), c) != mul(a, mul(b, c))) {
                    throw std::invalid_argument("FiniteMonoid: multiplication is not associative");
                }
            }
        }
    }
}

FiniteOrderResult right_order_exists_finite_monoid(const FiniteMonoid& m,
                                                   const SearchBudget& budget) {
    const int n = m.size();

    OrderSearchProblem problem;
    problem.n = static_cast<std::size_t>(n);
    problem.antisymmetric = true;
    problem.strict_invariance = false;
    problem.successors.reserve(static_cast<std::size_t>(n));
    for (int c = 0; c < n; ++c) {
        std::vector<std::int32_t> succ(static_cast<std::size_t>(n));
        for (int a = 0; a < n; ++a) succ[static_cast<std::size_t>(a)] = m.mul(a, c);
        problem.successors.push_back(std::move(succ));
    }

    OrderSearchResult res = search_total_order(problem, budget);
    FiniteOrderResult out;
    out.status = res.status;
    out.stats = res.stats;
    if (res.status != SearchStatus::Found) return out;

    const TriMatrix& le = *res.relation;
    out.ascending.resize(static_cast<std::size_t>(n));
    std::iota(out.ascending.begin(), out.ascending.end(), 0);
    std::sort(out.ascending.begin(), out.ascending.end(),
              [&](int a, int b) { return le.at(static_cast<std::size_t>(a), static_cast<std::size_t>(b)) == Tri::True && a != b; });

    // re-verify: total order, right-invariant
    std::vector<int> rank(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) rank[static_cast<std::size_t>(out.ascending[static_cast<std::size_t>(i)])] = i;
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            if (rank[static_cast<std::size_t>(a)] > rank[static_cast<std::size_t>(b)]) continue;
            for (int c = 0; c < n; ++c) {
                if (rank[static_cast<std::size_t>(m.mul(a, c))] > rank[static_cast<std::size_t>(m.mul(b, c))]) {
                    throw std::logic_error("internal error: order is not right-invariant");
                }
            }
        }
    }
    return out;
}

}  // namespace ordeq
