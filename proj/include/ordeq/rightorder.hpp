#pragma once

// Right-order existence: on free monoids/groups through the DLM
// reduction, and on explicit finite monoids by direct search.

#include "ordeq/decide.hpp"

namespace ordeq {

// Constraints s < t over the free monoid.
struct OrderQuery {
    std::vector<std::pair<MonWord, MonWord>> constraints;
};

struct FreeOrderResult {
    bool exists = false;
    // The encoded statement /\ t_i y_i <= \/ s_i y_i whose DLM-invalidity
    // witnesses existence, and its verdict. The countermodel attached to
    // an invalid verdict is the evidence for the order's existence. Both
    // are absent for the empty query, which trivially admits an order.
    std::optional<Statement> encoded;
    std::optional<Verdict> dlm_verdict;
};

// True iff some right order on the free monoid satisfies every
// constraint; by the free-group correspondence the same answer applies
// to extendability over the free group.
FreeOrderResult right_order_exists_free(const OrderQuery& q, const SearchBudget& budget = {});

// A finite monoid given by its multiplication table; associativity and
// the unit laws are checked on construction.
class FiniteMonoid {
public:
    FiniteMonoid(int size, int unit, std::vector<std::vector<int>> table);

    int size() const { return static_cast<int>(table_.size()); }
    int unit() const { return unit_; }
    int mul(int a, int b) const { return table_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]; }
    const std::vector<std::vector<int>>& table() const { return table_; }

private:
    int unit_;
    std::vector<std::vector<int>> table_;
};

struct FiniteOrderResult {
    SearchStatus status = SearchStatus::Exhausted;  // Found / Exhausted / BudgetExceeded
    std::vector<int> ascending;  // elements listed bottom to top when Found
    SearchStats stats;
};

// Complete backtracking search (shared propagation engine, successor maps
// specialized to right multiplication) for a total order with
// a <= b implying ac <= bc. Returned orders are re-verified.
FiniteOrderResult right_order_exists_finite_monoid(const FiniteMonoid& m,
                                                   const SearchBudget& budget = {});

}  // namespace ordeq
