#pragma once

// Backtracking search with constraint propagation for total (pre)orders
// over a finite carrier, preserved by a family of partial successor maps.
// Used for right-X-invariant preorders on subterm sets (successor =
// append a letter) and for right orders on finite monoids (successor =
// right multiplication).

#include <cstdint>
#include <optional>
#include <vector>

#include "ordeq/preorder.hpp"

namespace ordeq {

struct SearchBudget {
    std::uint64_t max_nodes = 10'000'000;
    double max_seconds = 60.0;
};

struct SearchStats {
    std::uint64_t nodes = 0;         // branch decisions
    std::uint64_t propagations = 0;  // cells set
    std::size_t universe = 0;
};

enum class SearchStatus { Found, Exhausted, BudgetExceeded };

struct OrderSearchProblem {
    std::size_t n = 0;
    // successors[m][i] is the image of i under map m, or -1 if undefined.
    std::vector<std::vector<std::int32_t>> successors;
    // seeds: each (a, b) requires a < b (le[a][b], not le[b][a]).
    std::vector<std::pair<std::uint32_t, std::uint32_t>> strict_pairs;
    bool strict_invariance = false;  // a < b implies m(a) < m(b)
    bool antisymmetric = false;      // total order: distinct elements never tie
};

struct OrderSearchResult {
    SearchStatus status = SearchStatus::Exhausted;
    std::optional<TriMatrix> relation;
    SearchStats stats;
};

// Deterministic: fixed seed order, most-constrained-cell branching with
// index tie-break, True branch first. Identical inputs yield identical
// relations.
OrderSearchResult search_total_order(const OrderSearchProblem& problem,
                                     const SearchBudget& budget = {});

}  // namespace ordeq
