#pragma once

// Brute-force ground truth: exhaustive evaluation over the
// order-endomorphism monoids End(n) of small chains, and enumeration of
// finite totally ordered monoids.

#include "ordeq/models.hpp"
#include "ordeq/rightorder.hpp"

namespace ordeq {

// All order-preserving self-maps of {0..n-1} in lexicographic order of
// their value tuples; there are C(2n-1, n-1) of them.
std::vector<ChainEndo> enumerate_endomorphisms(int n);

// End(n) as an explicit multiplication table, f·g = f then g.
FiniteMonoid monoid_of_chain_endos(int n);

struct EndWitness {
    std::map<Var, ChainEndo> assignment;
    int point = 0;
    int lhs = 0, rhs = 0;
};

struct OracleOutcome {
    bool valid = true;
    std::optional<EndWitness> witness;
};

// Exhaustive check of an inverse-free statement over all assignments into
// End(n) and all points. Throws BudgetError when the assignment space
// exceeds max_checks.
OracleOutcome oracle_dlm_validity(const Statement& s, int n,
                                  std::uint64_t max_checks = 100'000'000);

// A monoid table on the carrier chain 0 < 1 < ... < n-1 whose
// multiplication is order-preserving in both arguments.
struct OrderedMonoid {
    int size = 1;
    int unit = 0;
    std::vector<std::vector<int>> table;
    int mul(int a, int b) const { return table[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]; }
    bool operator==(const OrderedMonoid&) const = default;
};

// Complete, duplicate-free enumeration by cell-wise backtracking with
// monotonicity and partial-associativity pruning. pre: 1 <= n <= 4.
std::vector<OrderedMonoid> enumerate_ordered_monoids(int n);

// Exhaustive validity of an inverse-free statement in one ordered monoid.
bool ordered_monoid_satisfies(const OrderedMonoid& m, const Statement& s);

}  // namespace ordeq
